#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mackey/rep/representation.hpp"

namespace mackey::rep {

/// Basis of Hom_G(source, target): matrices A (target.dim x source.dim) with
/// A source(g) = target(g) A.
struct IntertwinerBasis {
  std::vector<ExactMatrix> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Solves A sigma(s) = tau(s) A over the generators s of the common group,
/// one generator at a time, each step a nullspace computation restricted to
/// the solutions of the previous steps.  Throws NotASubgroup if the groups
/// differ.
IntertwinerBasis hom_space(const Representation& sigma, const Representation& tau);

/// True when A sigma(g) = tau(g) A for every g in the group.
bool is_intertwiner(const ExactMatrix& a, const Representation& sigma, const Representation& tau);

enum class IsomorphismMethod {
  not_isomorphic,
  witness,             // explicit invertible intertwiner found
  character_fallback,  // random search exhausted; decided by character equality
};

struct IsomorphismResult {
  bool isomorphic = false;
  IsomorphismMethod method = IsomorphismMethod::not_isomorphic;
  std::optional<ExactMatrix> witness;
};

/// Random integer combinations of the Hom basis are tried (at most
/// max_attempts, coefficients from `seed`) until one is invertible.
IsomorphismResult is_isomorphic(const Representation& sigma, const Representation& tau,
                                std::uint64_t seed = 0, int max_attempts = 16);

/// The two mutually inverse maps of Frobenius reciprocity
///   Hom_G(Ind_K^G sigma, pi)  <->  Hom_K(sigma, Res_K pi)
/// written in the canonical induced basis.  With coset representatives x_i
/// (x_0 = e), to_restricted(T) is the first block column of T, and
/// to_induced(S) has i-th block column pi(x_i^-1) S.
class FrobeniusReciprocity {
 public:
  FrobeniusReciprocity(Representation sigma, Representation pi);

  const Representation& induced() const noexcept { return induced_; }
  const Representation& restricted() const noexcept { return restricted_; }

  ExactMatrix to_restricted(const ExactMatrix& t) const;
  ExactMatrix to_induced(const ExactMatrix& s) const;

  IntertwinerBasis induced_side() const { return hom_space(induced_, pi_); }
  IntertwinerBasis restricted_side() const { return hom_space(sigma_, restricted_); }

 private:
  Representation sigma_;
  Representation pi_;
  Representation induced_;
  Representation restricted_;
  std::vector<Element> representatives_;
};

}  // namespace mackey::rep
