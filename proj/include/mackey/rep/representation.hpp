#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mackey/exact/matrix.hpp"
#include "mackey/group/subgroup.hpp"

namespace mackey::rep {

using exact::CycloNumber;
using exact::ExactMatrix;
using group::Element;
using group::Subgroup;

/// A finite-dimensional representation of a finite (sub)group over
/// Q(zeta_N), stored as one matrix per group element.
///
/// Every representation of a finite or discrete group is smooth (each vector
/// is fixed by the open subgroup {e}), so smoothness carries no data here.
class Representation {
 public:
  /// images[i] is the image of group.elements()[i].  Not validated; use
  /// check_homomorphism() or one of the checked factories.
  Representation(Subgroup group, std::size_t dim, std::vector<ExactMatrix> images,
                 std::string label);

  /// Extends images of group.generators() along the Cayley graph and checks
  /// that the result is a homomorphism (consistency on every (element,
  /// generator) pair, which is complete).  Throws NotAHomomorphism.
  static Representation from_generators(Subgroup group, std::span<const ExactMatrix> gen_images,
                                        std::string label);

  static Representation trivial(Subgroup group);
  /// Permutation sign of each element in the parent's action.
  static Representation sign(Subgroup group);
  /// Right regular representation on functions G -> Q, basis delta_x in
  /// element order.
  static Representation regular(Subgroup group);
  /// 1-dimensional representation from a value per generator.
  static Representation character_from_generators(Subgroup group,
                                                  std::span<const CycloNumber> values,
                                                  std::string label);

  const Subgroup& group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  std::span<const ExactMatrix> images() const noexcept { return images_; }

  /// Image of a member of group(); throws NotASubgroup otherwise.
  const ExactMatrix& operator()(Element g) const { return images_[group_.position(g)]; }

  /// lcm of the conductors of all matrix entries.
  unsigned conductor() const;

  /// rho(e) = I, every image invertible, rho(gh) = rho(g) rho(h): all pairs
  /// when |G| <= 60, otherwise 500 random pairs drawn with `seed`.
  bool check_homomorphism(std::uint64_t seed = 0) const;

 private:
  Subgroup group_;
  std::size_t dim_;
  std::vector<ExactMatrix> images_;
  std::string label_;
};

/// Same matrices on a subgroup S of rho.group(); throws NotASubgroup.
Representation restrict(const Representation& rho, const Subgroup& s);

/// The representation g-rho of gHg^-1 with (g-rho)(h') = rho(g^-1 h' g).
Representation conjugate_rep(Element g, const Representation& rho);

/// Induction from rho.group() = H to a subgroup L containing H.
///
/// The space is {f : L -> V | f(hx) = rho(h) f(x)} with L acting by right
/// translation, (g.f)(x) = f(xg).  The basis is delta_{i,v}, the function
/// supported on H x_i with f(x_i) = e_v, ordered (coset index, vector index)
/// where x_i are the canonical right coset representatives.  For finite
/// groups induction and compact induction coincide.
Representation induce(const Representation& rho, const Subgroup& target);
/// Same, with caller-chosen coset representatives (one per right coset of H
/// in L, any order).  Throws PreconditionViolated if they are not a transversal.
Representation induce(const Representation& rho, const Subgroup& target,
                      std::span<const Element> representatives);

/// Block-diagonal sum.  An empty list gives the 0-dimensional representation.
Representation direct_sum(const Subgroup& group, std::span<const Representation> parts);

/// Test hook: while an InductionObserver is alive on a thread, every call to
/// induce() on that thread reports (source, result) to it.
class InductionObserver {
 public:
  using Callback = std::function<void(const Representation&, const Representation&)>;
  explicit InductionObserver(Callback cb);
  ~InductionObserver();
  InductionObserver(const InductionObserver&) = delete;
  InductionObserver& operator=(const InductionObserver&) = delete;

  static void notify(const Representation& source, const Representation& result);

 private:
  Callback callback_;
  InductionObserver* previous_;
};

}  // namespace mackey::rep
