#include "mackey/group/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "mackey/error.hpp"

namespace mackey::group {

namespace {

std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> members{FiniteGroup::identity()};
  seen[FiniteGroup::identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      Element next = g.compose(members[i], s);
      if (!seen[next]) {
        seen[next] = true;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Greedy generating set: walk the members in order and keep each one that the
// previous picks do not already generate.
std::vector<Element> greedy_generators(const FiniteGroup& g, std::span<const Element> members) {
  std::vector<Element> gens;
  std::vector<Element> current{FiniteGroup::identity()};
  for (Element m : members) {
    if (std::binary_search(current.begin(), current.end(), m)) continue;
    gens.push_back(m);
    current = closure(g, gens);
    if (current.size() == members.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members, std::vector<Element> gens)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      generators_(std::move(gens)),
      position_(parent_->order(), -1) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    position_[members_[i]] = static_cast<std::int32_t>(i);
  }
}

Subgroup Subgroup::whole(const GroupPtr& g) { return generate_subgroup(g, g->generators()); }

Subgroup Subgroup::trivial(const GroupPtr& g) { return generate_subgroup(g, {}); }

std::size_t Subgroup::position(Element g) const {
  if (g >= position_.size() || position_[g] < 0) {
    throw NotASubgroup("element " + parent_->label(g) + " is not in " + describe());
  }
  return static_cast<std::size_t>(position_[g]);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element g) { return other.contains(g); });
}

std::string Subgroup::describe() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += parent_->label(generators_[i]);
  }
  return out + ">";
}

Subgroup generate_subgroup(const GroupPtr& g, std::span<const Element> gens) {
  std::vector<Element> kept;
  for (Element s : gens) {
    if (s >= g->order()) throw NotASubgroup("generator index out of range");
    if (s == FiniteGroup::identity()) continue;
    if (std::find(kept.begin(), kept.end(), s) == kept.end()) kept.push_back(s);
  }
  std::vector<Element> members = closure(*g, kept);
  return Subgroup(g, std::move(members), std::move(kept));
}

Subgroup conjugate_subgroup(Element g, const Subgroup& h) {
  const FiniteGroup& grp = h.group();
  std::vector<Element> gens;
  for (Element s : h.generators()) gens.push_back(grp.conjugate(g, s));
  Subgroup out = generate_subgroup(h.parent(), gens);
  return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw NotASubgroup("intersection of subgroups of different groups");
  std::vector<Element> members;
  for (Element g : a.elements()) {
    if (b.contains(g)) members.push_back(g);
  }
  auto gens = greedy_generators(a.group(), members);
  Subgroup out = generate_subgroup(a.parent(), gens);
  if (out.order() != members.size()) throw NotASubgroup("intersection is not closed");
  return out;
}

std::vector<Element> right_coset_representatives(const Subgroup& l, const Subgroup& h) {
  if (!h.is_subgroup_of(l)) throw NotASubgroup(h.describe() + " is not contained in " + l.describe());
  const FiniteGroup& g = l.group();
  std::vector<bool> covered(g.order(), false);
  std::vector<Element> reps;
  for (Element x : l.elements()) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Element y : h.elements()) covered[g.compose(y, x)] = true;
  }
  return reps;
}

std::vector<Element> right_coset_representatives(const Subgroup& h) {
  return right_coset_representatives(Subgroup::whole(h.parent()), h);
}

DoubleCosetDecomposition enumerate_double_cosets(const Subgroup& k, const Subgroup& h) {
  if (k.parent() != h.parent()) throw NotASubgroup("double cosets need a common parent group");
  const FiniteGroup& g = k.group();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  DoubleCosetDecomposition d{k, h, {}, std::vector<std::size_t>(g.order(), kUnassigned), {}, {}};
  for (Element x = 0; x < g.order(); ++x) {
    if (d.class_of[x] != kUnassigned) continue;
    const std::size_t cls = d.representatives.size();
    d.representatives.push_back(x);
    std::vector<Element> members;
    for (Element a : k.elements()) {
      Element ax = g.compose(a, x);
      for (Element b : h.elements()) {
        Element y = g.compose(ax, b);
        if (d.class_of[y] == kUnassigned) {
          d.class_of[y] = cls;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    d.sizes.push_back(members.size());
    d.members.push_back(std::move(members));
  }
  return d;
}

ConjugacyClasses conjugacy_classes(const Subgroup& s) {
  const FiniteGroup& g = s.group();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  ConjugacyClasses c{{}, std::vector<std::size_t>(s.order(), kUnassigned), {}};
  for (std::size_t i = 0; i < s.order(); ++i) {
    if (c.class_of_position[i] != kUnassigned) continue;
    const std::size_t cls = c.representatives.size();
    c.representatives.push_back(s.elements()[i]);
    std::size_t size = 0;
    for (Element x : s.elements()) {
      std::size_t j = s.position(g.conjugate(x, s.elements()[i]));
      if (c.class_of_position[j] == kUnassigned) {
        c.class_of_position[j] = cls;
        ++size;
      }
    }
    c.sizes.push_back(size);
  }
  return c;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (Element x = 0; x < g->order(); ++x) {
    Element gens[] = {x};
    Subgroup c = generate_subgroup(g, gens);
    std::vector<Element> key(c.elements().begin(), c.elements().end());
    if (seen.insert(key).second) {
      cyclic.push_back(c);
      found.push_back(c);
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.is_subgroup_of(found[i])) continue;
      std::vector<Element> gens(found[i].generators().begin(), found[i].generators().end());
      gens.insert(gens.end(), c.generators().begin(), c.generators().end());
      Subgroup joined = generate_subgroup(g, gens);
      std::vector<Element> key(joined.elements().begin(), joined.elements().end());
      if (seen.insert(key).second) {
        found.push_back(generate_subgroup(g, greedy_generators(*g, key)));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
  });
  return found;
}

}  // namespace mackey::group
