#include "mackey/group/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mackey/error.hpp"

namespace mackey::group {

Perm compose_perms(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

Perm invert_perm(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<std::uint16_t>(x);
  return r;
}

Perm identity_perm(std::size_t degree) {
  Perm r(degree);
  std::iota(r.begin(), r.end(), std::uint16_t{0});
  return r;
}

std::string perm_to_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupPtr FiniteGroup::from_permutations(std::string name, std::size_t degree,
                                        const std::vector<Perm>& generators) {
  if (degree == 0) throw PreconditionViolated("permutation degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != degree) throw PreconditionViolated("generator has the wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw PreconditionViolated("generator is not a permutation");
      hit[x] = true;
    }
  }

  std::set<Perm> seen{identity_perm(degree)};
  std::deque<Perm> queue{identity_perm(degree)};
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Perm next = compose_perms(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > kMaxOrder) {
          throw PreconditionViolated("group '" + name + "' exceeds the supported order");
        }
        queue.push_back(std::move(next));
      }
    }
  }

  std::shared_ptr<FiniteGroup> group(new FiniteGroup());
  group->name_ = std::move(name);
  group->degree_ = degree;
  group->perms_.assign(seen.begin(), seen.end());  // std::set is sorted
  const std::size_t n = group->perms_.size();
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(group->perms_[i], static_cast<Element>(i));
  group->table_.resize(n * n);
  group->inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      group->table_[a * n + b] = index.at(compose_perms(group->perms_[a], group->perms_[b]));
    }
    group->inverses_[a] = index.at(invert_perm(group->perms_[a]));
  }
  for (const auto& g : generators) {
    Element e = index.at(g);
    if (e == identity()) continue;
    if (std::find(group->generators_.begin(), group->generators_.end(), e) !=
        group->generators_.end()) {
      continue;
    }
    group->generators_.push_back(e);
  }
  return group;
}

Element FiniteGroup::power(Element a, long exponent) const {
  if (exponent < 0) {
    a = inverse(a);
    exponent = -exponent;
  }
  Element r = identity();
  for (long i = 0; i < exponent; ++i) r = compose(r, a);
  return r;
}

std::optional<Element> FiniteGroup::find(const Perm& p) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
  if (it == perms_.end() || *it != p) return std::nullopt;
  return static_cast<Element>(it - perms_.begin());
}

int FiniteGroup::sign(Element a) const {
  const Perm& p = perms_[a];
  std::vector<bool> seen(p.size(), false);
  int parity = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    parity += static_cast<int>(len - 1);
  }
  return parity % 2 == 0 ? 1 : -1;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity(); x = compose(x, a)) ++k;
  return k;
}

unsigned FiniteGroup::exponent() const {
  unsigned e = 1;
  for (Element a = 0; a < order(); ++a) {
    e = std::lcm(e, static_cast<unsigned>(element_order(a)));
  }
  return e;
}

bool FiniteGroup::check_axioms(std::uint64_t seed) const {
  const std::size_t n = order();
  for (Element a = 0; a < n; ++a) {
    if (compose(identity(), a) != a || compose(a, identity()) != a) return false;
    if (compose(a, inverse(a)) != identity() || compose(inverse(a), a) != identity()) {
      return false;
    }
  }
  if (n <= 200) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab = compose(a, b);
        for (Element c = 0; c < n; ++c) {
          if (compose(ab, c) != compose(a, compose(b, c))) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (int t = 0; t < 20000; ++t) {
    Element a = pick(rng);
    Element b = pick(rng);
    Element c = pick(rng);
    if (compose(compose(a, b), c) != compose(a, compose(b, c))) return false;
  }
  return true;
}

}  // namespace mackey::group
