#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mackey/group/finite_group.hpp"

namespace mackey::group {

/// A subgroup of an enumerated finite group: its sorted member list plus a
/// generating set.  Every subgroup of a finite discrete group is open and
/// closed, so no topology is carried.
class Subgroup {
 public:
  static Subgroup whole(const GroupPtr& g);
  static Subgroup trivial(const GroupPtr& g);

  const GroupPtr& parent() const noexcept { return parent_; }
  const FiniteGroup& group() const noexcept { return *parent_; }

  std::span<const Element> elements() const noexcept { return members_; }
  std::span<const Element> generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return members_.size(); }

  bool contains(Element g) const { return position_[g] >= 0; }
  /// Position of g in elements(); throws NotASubgroup if g is not a member.
  std::size_t position(Element g) const;

  bool is_subgroup_of(const Subgroup& other) const;
  bool is_whole_group() const noexcept { return order() == parent_->order(); }

  /// "<(1 2), (1 2 3)>" style description from the generators.
  std::string describe() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  friend Subgroup generate_subgroup(const GroupPtr& g, std::span<const Element> gens);
  Subgroup(GroupPtr parent, std::vector<Element> members, std::vector<Element> gens);

  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<Element> generators_;
  std::vector<std::int32_t> position_;
};

/// Smallest subgroup containing gens (orbit closure of the identity).
Subgroup generate_subgroup(const GroupPtr& g, std::span<const Element> gens);

/// {g h g^-1 : h in H}
Subgroup conjugate_subgroup(Element g, const Subgroup& h);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// One representative per right coset Hx of H in L, each the smallest element
/// of its coset, listed in increasing order.  Requires H <= L.
std::vector<Element> right_coset_representatives(const Subgroup& l, const Subgroup& h);
/// Right cosets of H in its whole parent group.
std::vector<Element> right_coset_representatives(const Subgroup& h);

/// Partition of G into double cosets K g H.
struct DoubleCosetDecomposition {
  Subgroup left;   // K
  Subgroup right;  // H
  /// Smallest element of each class, increasing.
  std::vector<Element> representatives;
  /// Class index for every element of the parent group.
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<Element>> members;
};

DoubleCosetDecomposition enumerate_double_cosets(const Subgroup& k, const Subgroup& h);

/// Conjugacy classes of a subgroup under its own conjugation action.
struct ConjugacyClasses {
  std::vector<Element> representatives;     // smallest member of each class
  std::vector<std::size_t> class_of_position;  // indexed by Subgroup::position
  std::vector<std::size_t> sizes;
};

ConjugacyClasses conjugacy_classes(const Subgroup& s);

/// Every subgroup of g, sorted by (order, members).  Meant for desk-scale
/// groups: joins of cyclic subgroups until nothing new appears.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

}  // namespace mackey::group
