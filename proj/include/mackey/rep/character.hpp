#pragma once

#include <vector>

#include "mackey/rep/representation.hpp"

namespace mackey::rep {

/// A class function, stored as one value per conjugacy class.
class Character {
 public:
  Character(Subgroup group, group::ConjugacyClasses classes, std::vector<CycloNumber> values);

  const Subgroup& group() const noexcept { return group_; }
  const group::ConjugacyClasses& classes() const noexcept { return classes_; }
  const std::vector<CycloNumber>& class_values() const noexcept { return values_; }

  const CycloNumber& operator()(Element g) const {
    return values_[classes_.class_of_position[group_.position(g)]];
  }

  friend bool operator==(const Character& a, const Character& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  Subgroup group_;
  group::ConjugacyClasses classes_;
  std::vector<CycloNumber> values_;
};

Character character_of(const Representation& rho);

/// Character of the induced representation computed from chi alone:
///   chi_Ind(g) = |H|^-1 sum_{x in L, x g x^-1 in H} chi(x g x^-1).
Character induced_character_oracle(const Character& chi, const Subgroup& target);

/// <chi, psi> = |G|^-1 sum_g chi(g) conj(psi(g)), conjugation as zeta -> zeta^-1.
CycloNumber inner_product(const Character& chi, const Character& psi);

/// <chi, chi> == 1
bool is_irreducible(const Representation& rho);

}  // namespace mackey::rep
