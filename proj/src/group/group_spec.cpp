#include "mackey/group/group_spec.hpp"

#include <array>
#include <cctype>
#include <string>

#include "mackey/error.hpp"

namespace mackey::group {

namespace {

Perm cycle_perm(std::size_t degree, std::size_t from, std::size_t to) {
  // the cycle (from+1 from+2 ... to) on a degree-point set
  Perm p = identity_perm(degree);
  for (std::size_t i = from; i + 1 < to; ++i) p[i] = static_cast<std::uint16_t>(i + 1);
  if (to > from) p[to - 1] = static_cast<std::uint16_t>(from);
  return p;
}

}  // namespace

GroupPtr symmetric_group(unsigned n) {
  if (n < 1 || n > 6) throw PreconditionViolated("built-in symmetric groups need 1 <= n <= 6");
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm t = identity_perm(n);
    std::swap(t[0], t[1]);
    gens.push_back(t);
    if (n >= 3) gens.push_back(cycle_perm(n, 0, n));
  }
  return FiniteGroup::from_permutations("S" + std::to_string(n), n, gens);
}

GroupPtr dihedral_group(unsigned n) {
  if (n < 3) throw PreconditionViolated("built-in dihedral groups need n >= 3");
  Perm reflection(n);
  for (unsigned i = 0; i < n; ++i) reflection[i] = static_cast<std::uint16_t>(n - 1 - i);
  return FiniteGroup::from_permutations("D" + std::to_string(n), n,
                                        {cycle_perm(n, 0, n), reflection});
}

GroupPtr cyclic_group(unsigned n) {
  if (n < 1) throw PreconditionViolated("cyclic group needs n >= 1");
  std::vector<Perm> gens;
  if (n > 1) gens.push_back(cycle_perm(n, 0, n));
  return FiniteGroup::from_permutations("Z" + std::to_string(n), n, gens);
}

GroupPtr quaternion_group() {
  // unit q = sign * basis, basis in {1, i, j, k}; point index = 2*basis + (sign < 0)
  static constexpr std::array<std::array<int, 4>, 4> basis_product{{
      {{0, 1, 2, 3}},
      {{1, 0, 3, 2}},
      {{2, 3, 0, 1}},
      {{3, 2, 1, 0}},
  }};
  static constexpr std::array<std::array<int, 4>, 4> sign_product{{
      {{1, 1, 1, 1}},
      {{1, -1, 1, -1}},
      {{1, -1, -1, 1}},
      {{1, 1, -1, -1}},
  }};
  auto right_mult = [&](int gen_basis) {
    Perm p(8);
    for (int pt = 0; pt < 8; ++pt) {
      int b = pt / 2;
      int s = pt % 2 == 0 ? 1 : -1;
      int rb = basis_product[b][gen_basis];
      int rs = s * sign_product[b][gen_basis];
      p[pt] = static_cast<std::uint16_t>(2 * rb + (rs < 0 ? 1 : 0));
    }
    return p;
  };
  return FiniteGroup::from_permutations("Q8", 8, {right_mult(1), right_mult(2)});
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->degree();
  const std::size_t nb = b->degree();
  std::vector<Perm> gens;
  for (Element s : a->generators()) {
    Perm p = identity_perm(na + nb);
    for (std::size_t x = 0; x < na; ++x) p[x] = a->perm(s)[x];
    gens.push_back(p);
  }
  for (Element s : b->generators()) {
    Perm p = identity_perm(na + nb);
    for (std::size_t x = 0; x < nb; ++x) p[na + x] = static_cast<std::uint16_t>(na + b->perm(s)[x]);
    gens.push_back(p);
  }
  return FiniteGroup::from_permutations(a->name() + "x" + b->name(), na + nb, gens);
}

namespace {

class SpecScanner {
 public:
  explicit SpecScanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }
  char peek_raw() const { return at_end() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  unsigned long number() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("'" + std::string(text_) + "': " + msg, 1, pos_ + 1);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Reads one "( ... )" cycle as 0-based points.
std::vector<std::size_t> read_cycle(SpecScanner& s) {
  s.expect('(');
  std::vector<std::size_t> pts;
  // Separator-free cycles such as "(123)" are read digit by digit.
  std::size_t start = s.pos();
  std::string raw;
  while (!s.at_end() && s.peek_raw() != ')') {
    raw.push_back(s.peek_raw());
    s.advance();
  }
  if (s.at_end()) s.fail("unterminated cycle");
  s.advance();  // ')'
  bool compact = !raw.empty();
  for (char c : raw) {
    if (!std::isdigit(static_cast<unsigned char>(c))) compact = false;
  }
  if (compact && raw.size() > 1) {
    for (char c : raw) {
      if (c == '0') throw ParseError("points are numbered from 1", 1, start + 1);
      pts.push_back(static_cast<std::size_t>(c - '1'));
    }
    return pts;
  }
  SpecScanner inner(raw);
  while (inner.peek() != '\0') {
    unsigned long v = inner.number();
    if (v == 0) throw ParseError("points are numbered from 1", 1, start + 1);
    pts.push_back(v - 1);
    inner.accept(',');
  }
  return pts;
}

Perm cycles_to_perm(const std::vector<std::vector<std::size_t>>& cycles, std::size_t degree) {
  Perm p = identity_perm(degree);
  for (const auto& c : cycles) {
    Perm q = identity_perm(degree);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw PreconditionViolated("cycle point exceeds the group degree");
      q[c[i]] = static_cast<std::uint16_t>(c[(i + 1) % c.size()]);
    }
    p = compose_perms(p, q);
  }
  return p;
}

GroupPtr parse_atom(SpecScanner& s) {
  char c = s.peek();
  if (c == 'Q') {
    s.advance();
    if (s.number() != 8) s.fail("only Q8 is built in");
    return quaternion_group();
  }
  if (c != 'S' && c != 'D' && c != 'Z' && c != 'C') s.fail("unknown group name");
  s.advance();
  auto n = static_cast<unsigned>(s.number());
  try {
    switch (c) {
      case 'S': return symmetric_group(n);
      case 'D': return dihedral_group(n);
      default: return cyclic_group(n);
    }
  } catch (const PreconditionViolated& e) {
    s.fail(e.what());
  }
}

}  // namespace

GroupPtr parse_group_spec(std::string_view spec) {
  SpecScanner s(spec);
  if (s.accept_word("perm:")) {
    s.expect('[');
    std::vector<std::vector<std::vector<std::size_t>>> gens;
    std::size_t degree = 1;
    if (!s.accept(']')) {
      do {
        std::vector<std::vector<std::size_t>> cycles;
        while (s.peek() == '(') {
          cycles.push_back(read_cycle(s));
          for (auto x : cycles.back()) degree = std::max(degree, x + 1);
        }
        if (cycles.empty()) s.fail("expected a cycle");
        gens.push_back(std::move(cycles));
      } while (s.accept(','));
      s.expect(']');
    }
    if (s.peek() != '\0') s.fail("trailing characters");
    std::vector<Perm> perms;
    for (const auto& g : gens) perms.push_back(cycles_to_perm(g, degree));
    std::string name = "perm:" + std::string(spec.substr(spec.find(':') + 1));
    return FiniteGroup::from_permutations(name, degree, perms);
  }
  GroupPtr g = parse_atom(s);
  while (s.accept('x')) g = direct_product(g, parse_atom(s));
  if (s.peek() != '\0') s.fail("trailing characters");
  return g;
}

namespace {

Element parse_factor(const FiniteGroup& g, SpecScanner& s) {
  Element atom;
  char c = s.peek();
  if (c == 'e') {
    s.advance();
    atom = FiniteGroup::identity();
  } else if (c == 'g') {
    s.advance();
    unsigned long k = s.number();
    if (k == 0 || k > g.generators().size()) s.fail("generator index out of range");
    atom = g.generators()[k - 1];
  } else if (c == '(') {
    std::vector<std::vector<std::size_t>> cycles{read_cycle(s)};
    Perm p;
    try {
      p = cycles_to_perm(cycles, g.degree());
    } catch (const PreconditionViolated& e) {
      s.fail(e.what());
    }
    auto found = g.find(p);
    if (!found) s.fail("permutation " + perm_to_cycles(p) + " is not in " + g.name());
    atom = *found;
  } else {
    s.fail("expected an element");
  }
  if (s.accept('^')) {
    bool neg = s.accept('-');
    long e = static_cast<long>(s.number());
    atom = g.power(atom, neg ? -e : e);
  }
  return atom;
}

Element parse_element_at(const FiniteGroup& g, SpecScanner& s) {
  Element acc = parse_factor(g, s);
  while (true) {
    char c = s.peek();
    if (c == '*') {
      s.advance();
      acc = g.compose(acc, parse_factor(g, s));
    } else if (c == '(' || c == 'g' || c == 'e') {
      acc = g.compose(acc, parse_factor(g, s));
    } else {
      return acc;
    }
  }
}

}  // namespace

Element parse_element(const FiniteGroup& g, std::string_view text) {
  SpecScanner s(text);
  Element e = parse_element_at(g, s);
  if (s.peek() != '\0') s.fail("trailing characters");
  return e;
}

std::vector<Element> parse_element_list(const FiniteGroup& g, std::string_view text) {
  SpecScanner s(text);
  bool bracketed = s.accept('[');
  std::vector<Element> out;
  char next = s.peek();
  if (!(next == '\0' || (bracketed && next == ']'))) {
    do {
      out.push_back(parse_element_at(g, s));
    } while (s.accept(','));
  }
  if (bracketed) s.expect(']');
  if (s.peek() != '\0') s.fail("trailing characters");
  return out;
}

Subgroup parse_subgroup(const GroupPtr& g, std::string_view text) {
  return generate_subgroup(g, parse_element_list(*g, text));
}

}  // namespace mackey::group
