#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mackey::group {

/// Images of the points 0..n-1.
using Perm = std::vector<std::uint16_t>;

/// Index of an element in its group's canonical element order.
using Element = std::uint32_t;

/// Composition convention used everywhere in this library: a product a*b
/// means "apply a, then b", i.e. (a*b)(x) = b(a(x)).  Cycle strings such as
/// "(1 2)(2 3)" are read the same way, left to right.
Perm compose_perms(const Perm& a, const Perm& b);
Perm invert_perm(const Perm& a);
Perm identity_perm(std::size_t degree);
/// 1-based cycle notation, "()" for the identity.
std::string perm_to_cycles(const Perm& p);

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite permutation group with every element enumerated.
///
/// Elements are sorted lexicographically by their image lists; this makes
/// element 0 the identity and gives every query a canonical total order.
/// Multiplication and inversion are table lookups.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 5040;

  /// Closes the generators under composition.  Throws PreconditionViolated if
  /// the generators have the wrong degree or the group exceeds kMaxOrder.
  static GroupPtr from_permutations(std::string name, std::size_t degree,
                                    const std::vector<Perm>& generators);

  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return perms_.size(); }

  static constexpr Element identity() noexcept { return 0; }

  Element compose(Element a, Element b) const { return table_[a * order() + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  /// g h g^-1
  Element conjugate(Element g, Element h) const { return compose(compose(g, h), inverse(g)); }
  Element power(Element a, long exponent) const;

  const Perm& perm(Element a) const { return perms_[a]; }
  std::optional<Element> find(const Perm& p) const;

  /// Generators in the order they were supplied (duplicates and identity removed).
  const std::vector<Element>& generators() const noexcept { return generators_; }

  std::string label(Element a) const { return perm_to_cycles(perms_[a]); }
  int sign(Element a) const;
  std::size_t element_order(Element a) const;
  /// lcm of the element orders
  unsigned exponent() const;

  /// Associativity (exhaustive up to 200 elements, 20000 random triples
  /// above), identity and inverse axioms.
  bool check_axioms(std::uint64_t seed = 0) const;

 private:
  FiniteGroup() = default;

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Perm> perms_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<Element> generators_;
};

}  // namespace mackey::group
