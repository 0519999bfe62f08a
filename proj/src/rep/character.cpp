#include "mackey/rep/character.hpp"

#include <utility>

#include "mackey/error.hpp"

namespace mackey::rep {

Character::Character(Subgroup group, group::ConjugacyClasses classes,
                     std::vector<CycloNumber> values)
    : group_(std::move(group)), classes_(std::move(classes)), values_(std::move(values)) {
  if (values_.size() != classes_.representatives.size()) {
    throw DimensionMismatch("one character value per conjugacy class is required");
  }
}

Character character_of(const Representation& rho) {
  auto classes = group::conjugacy_classes(rho.group());
  std::vector<CycloNumber> values;
  values.reserve(classes.representatives.size());
  for (Element r : classes.representatives) values.push_back(rho(r).trace());
  return Character(rho.group(), std::move(classes), std::move(values));
}

Character induced_character_oracle(const Character& chi, const Subgroup& target) {
  const Subgroup& h = chi.group();
  if (!h.is_subgroup_of(target)) {
    throw NotASubgroup(h.describe() + " is not a subgroup of " + target.describe());
  }
  const auto& g = target.group();
  auto classes = group::conjugacy_classes(target);
  std::vector<CycloNumber> values;
  values.reserve(classes.representatives.size());
  for (Element r : classes.representatives) {
    CycloNumber sum;
    for (Element x : target.elements()) {
      Element c = g.conjugate(x, r);
      if (h.contains(c)) sum = sum + chi(c);
    }
    values.push_back(sum / CycloNumber(static_cast<long>(h.order())));
  }
  return Character(target, std::move(classes), std::move(values));
}

CycloNumber inner_product(const Character& chi, const Character& psi) {
  if (!(chi.group() == psi.group())) {
    throw NotASubgroup("inner product of characters of different groups");
  }
  const auto& cls = chi.classes();
  CycloNumber sum;
  for (std::size_t c = 0; c < cls.representatives.size(); ++c) {
    sum = sum + CycloNumber(static_cast<long>(cls.sizes[c])) * chi.class_values()[c] *
                    psi.class_values()[c].conj();
  }
  return sum / CycloNumber(static_cast<long>(chi.group().order()));
}

bool is_irreducible(const Representation& rho) {
  auto chi = character_of(rho);
  return inner_product(chi, chi).is_one();
}

}  // namespace mackey::rep
