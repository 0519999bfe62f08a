#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "mackey/error.hpp"
#include "mackey/group/group_spec.hpp"

using namespace mackey::group;

namespace {

// Brute-force closure on raw permutations, independent of FiniteGroup's tables.
std::set<Perm> brute_closure(std::size_t degree, const std::vector<Perm>& gens) {
  std::set<Perm> s{identity_perm(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(s.begin(), s.end());
    for (const auto& a : cur) {
      for (const auto& g : gens) grew |= s.insert(compose_perms(a, g)).second;
    }
  }
  return s;
}

std::set<Perm> perms_of(const Subgroup& s) {
  std::set<Perm> out;
  for (Element e : s.elements()) out.insert(s.group().perm(e));
  return out;
}

Element el(const GroupPtr& g, const char* text) { return parse_element(*g, text); }

}  // namespace

TEST_CASE("built-in groups have the expected orders and satisfy the axioms") {
  const std::map<std::string, std::size_t> orders{
      {"S1", 1}, {"S3", 6}, {"S4", 24}, {"D4", 8}, {"D5", 10}, {"Z12", 12},
      {"Q8", 8}, {"S3xZ2", 12}, {"Z2xZ2", 4}, {"S5", 120}, {"S6", 720}};
  for (const auto& [spec, order] : orders) {
    auto g = parse_group_spec(spec);
    CHECK(g->order() == order);
    if (order <= 120) CHECK(g->check_axioms());
    CHECK(g->identity() == 0);
    CHECK(g->perm(0) == identity_perm(g->degree()));
  }
}

TEST_CASE("quaternion group structure") {
  auto q = quaternion_group();
  std::size_t order2 = 0;
  std::size_t order4 = 0;
  for (Element a = 1; a < q->order(); ++a) {
    if (q->element_order(a) == 2) ++order2;
    if (q->element_order(a) == 4) ++order4;
  }
  CHECK(order2 == 1);
  CHECK(order4 == 6);
  CHECK(q->exponent() == 4);
  Element i = q->generators()[0];
  Element j = q->generators()[1];
  // i j i^-1 = j^-1 in Q8
  CHECK(q->conjugate(i, j) == q->inverse(j));
}

TEST_CASE("exponents") {
  CHECK(parse_group_spec("S3")->exponent() == 6);
  CHECK(parse_group_spec("S4")->exponent() == 12);
  CHECK(parse_group_spec("D5")->exponent() == 10);
  CHECK(parse_group_spec("Z12")->exponent() == 12);
}

TEST_CASE("composition reads left to right") {
  auto s3 = symmetric_group(3);
  // apply (1 2) first, then (2 3): 1 -> 2 -> 3, 3 -> 2, 2 -> 1
  CHECK(s3->label(el(s3, "(1 2)(2 3)")) == "(1 3 2)");
  CHECK(el(s3, "(1 2)*(2 3)") == s3->compose(el(s3, "(1 2)"), el(s3, "(2 3)")));
  CHECK(el(s3, "(123)") == el(s3, "(1 2 3)"));
  CHECK(el(s3, "g2") == el(s3, "(1 2 3)"));
  CHECK(el(s3, "g2^-1") == el(s3, "(1 3 2)"));
  CHECK(el(s3, "e") == 0);
}

TEST_CASE("generate_subgroup examples") {
  auto s3 = symmetric_group(3);
  CHECK(generate_subgroup(s3, {}).order() == 1);
  CHECK(parse_subgroup(s3, "[(1 2)]").order() == 2);

  auto s4 = symmetric_group(4);
  auto h = parse_subgroup(s4, "[(1 2), (1 2 3 4)]");
  auto oracle = brute_closure(4, {s4->perm(el(s4, "(1 2)")), s4->perm(el(s4, "(1 2 3 4)"))});
  CHECK(oracle.size() == 24);
  CHECK(perms_of(h) == oracle);

  auto d = parse_subgroup(s4, "[(1 2 3 4), (1 3)]");
  CHECK(d.order() == 8);
}

TEST_CASE("double cosets of S3 by two transposition subgroups") {
  auto s3 = symmetric_group(3);
  auto k = parse_subgroup(s3, "[(1 3)]");
  auto h = parse_subgroup(s3, "[(1 2)]");
  auto d = enumerate_double_cosets(k, h);

  // Oracle: group the six elements by the set K g H computed from raw perms.
  std::set<std::set<Perm>> classes;
  for (Element g = 0; g < s3->order(); ++g) {
    std::set<Perm> kgh;
    for (Element a : k.elements()) {
      for (Element b : h.elements()) {
        kgh.insert(compose_perms(compose_perms(s3->perm(a), s3->perm(g)), s3->perm(b)));
      }
    }
    classes.insert(kgh);
  }
  std::multiset<std::size_t> oracle_sizes;
  for (const auto& c : classes) oracle_sizes.insert(c.size());
  CHECK(oracle_sizes == std::multiset<std::size_t>{2, 4});

  REQUIRE(d.representatives.size() == 2);
  CHECK(std::multiset<std::size_t>(d.sizes.begin(), d.sizes.end()) == oracle_sizes);
  CHECK(d.representatives[0] == 0);
}

TEST_CASE("double coset edge cases") {
  auto g = symmetric_group(4);
  auto whole = Subgroup::whole(g);
  auto d = enumerate_double_cosets(whole, whole);
  CHECK(d.representatives == std::vector<Element>{0});
  auto e = Subgroup::trivial(g);
  CHECK(enumerate_double_cosets(e, e).representatives.size() == g->order());
}

TEST_CASE("conjugate_subgroup examples") {
  auto s3 = symmetric_group(3);
  auto h = parse_subgroup(s3, "[(1 2)]");
  CHECK(conjugate_subgroup(0, h) == h);
  CHECK(conjugate_subgroup(el(s3, "(1 2)"), h) == h);

  Element g = el(s3, "(1 2 3)");
  std::set<Perm> oracle;
  for (Element x : h.elements()) {
    oracle.insert(compose_perms(compose_perms(s3->perm(g), s3->perm(x)),
                                invert_perm(s3->perm(g))));
  }
  auto c = conjugate_subgroup(g, h);
  CHECK(perms_of(c) == oracle);
  // with left-to-right composition, (1 2 3)(1 2)(1 3 2) = (1 3)
  CHECK(c == parse_subgroup(s3, "[(1 3)]"));
}

TEST_CASE("intersect examples") {
  auto s3 = symmetric_group(3);
  auto a = parse_subgroup(s3, "[(1 2)]");
  auto b = parse_subgroup(s3, "[(1 3)]");
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, Subgroup::trivial(s3)).order() == 1);
  CHECK(intersect(a, b).order() == 1);
  auto s4 = symmetric_group(4);
  auto d4 = parse_subgroup(s4, "[(1 2 3 4), (1 3)]");
  auto a4 = parse_subgroup(s4, "[(1 2 3), (2 3 4)]");
  CHECK(intersect(d4, a4).order() == 4);
}

TEST_CASE("right coset representatives") {
  auto s3 = symmetric_group(3);
  auto whole = Subgroup::whole(s3);
  CHECK(right_coset_representatives(whole) == std::vector<Element>{0});
  CHECK(right_coset_representatives(Subgroup::trivial(s3)).size() == 6);
  auto h = parse_subgroup(s3, "[(1 2)]");
  auto reps = right_coset_representatives(h);
  CHECK(reps.size() == 3);
  // every element lies in exactly one coset H x
  std::vector<int> hits(s3->order(), 0);
  for (Element x : reps) {
    for (Element y : h.elements()) ++hits[s3->compose(y, x)];
  }
  CHECK(std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; }));
  CHECK_THROWS_AS(right_coset_representatives(h, Subgroup::whole(s3)), mackey::NotASubgroup);
}

TEST_CASE("subgroup lattice sizes of the zoo") {
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
  CHECK(all_subgroups(dihedral_group(4)).size() == 10);
  CHECK(all_subgroups(dihedral_group(5)).size() == 8);
  CHECK(all_subgroups(quaternion_group()).size() == 6);
  CHECK(all_subgroups(cyclic_group(12)).size() == 6);
}

TEST_CASE("double coset invariants on random subgroup pairs") {
  std::mt19937_64 rng(1234);
  for (const char* spec : {"S4", "D4", "Q8", "D5", "Z12", "S3xZ2"}) {
    auto g = parse_group_spec(spec);
    auto subs = all_subgroups(g);
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    std::uniform_int_distribution<Element> pick_el(0, static_cast<Element>(g->order() - 1));
    for (int t = 0; t < 15; ++t) {
      const auto& k = subs[pick(rng)];
      const auto& h = subs[pick(rng)];
      auto d = enumerate_double_cosets(k, h);
      std::size_t total = 0;
      for (std::size_t c = 0; c < d.representatives.size(); ++c) {
        Element rep = d.representatives[c];
        total += d.sizes[c];
        CHECK(rep == d.members[c].front());
        auto kh = intersect(k, conjugate_subgroup(rep, h));
        CHECK(d.sizes[c] == k.order() * h.order() / kh.order());
      }
      CHECK(total == g->order());
      for (int s = 0; s < 10; ++s) {
        Element x = pick_el(rng);
        Element a = k.elements()[std::uniform_int_distribution<std::size_t>(0, k.order() - 1)(rng)];
        Element b = h.elements()[std::uniform_int_distribution<std::size_t>(0, h.order() - 1)(rng)];
        CHECK(d.class_of[g->compose(g->compose(a, x), b)] == d.class_of[x]);
      }
    }
  }
}

TEST_CASE("iterated conjugation composes") {
  auto g = symmetric_group(4);
  auto subs = all_subgroups(g);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Element> pick_el(0, static_cast<Element>(g->order() - 1));
  std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
  for (int t = 0; t < 200; ++t) {
    Element a = pick_el(rng);
    Element b = pick_el(rng);
    const auto& h = subs[pick(rng)];
    CHECK(conjugate_subgroup(a, conjugate_subgroup(b, h)) ==
          conjugate_subgroup(g->compose(a, b), h));
    CHECK(conjugate_subgroup(a, h).order() == h.order());
  }
}

TEST_CASE("conjugacy classes of S4") {
  auto cc = conjugacy_classes(Subgroup::whole(symmetric_group(4)));
  std::multiset<std::size_t> sizes(cc.sizes.begin(), cc.sizes.end());
  CHECK(sizes == std::multiset<std::size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("group spec parse errors carry a column") {
  CHECK_THROWS_AS(parse_group_spec("T4"), mackey::ParseError);
  CHECK_THROWS_AS(parse_group_spec("S9"), mackey::ParseError);
  CHECK_THROWS_AS(parse_group_spec("S4 junk"), mackey::ParseError);
  CHECK_THROWS_AS(parse_group_spec("perm: [(1 2"), mackey::ParseError);
  try {
    parse_group_spec("S4 junk");
  } catch (const mackey::ParseError& e) {
    CHECK(e.column() == 4);
  }
  auto s3 = symmetric_group(3);
  CHECK_THROWS_AS(parse_element(*s3, "(1 4)"), mackey::ParseError);
  CHECK_THROWS_AS(parse_element(*s3, "g3"), mackey::ParseError);
  auto p = parse_group_spec("perm: [(1 2),(1 2 3 4)]");
  CHECK(p->order() == 24);
  CHECK(parse_element_list(*p, "[]").empty());
  CHECK(parse_element_list(*p, "(1 2), g2^2").size() == 2);
}
