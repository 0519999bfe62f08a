#include "mackey/discrete/example.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mackey/error.hpp"
#include "mackey/exact/matrix.hpp"

namespace mackey::discrete {

std::string SDElement::to_string() const {
  return "((" + std::to_string(n1) + "," + std::to_string(n2) + ")," + std::to_string(eps) + ")";
}

SDElement sd_compose(const SDElement& a, const SDElement& b) {
  const long c = a.eps == 0 ? b.n1 : b.n2;
  const long d = a.eps == 0 ? b.n2 : b.n1;
  return {a.n1 + c, a.n2 + d, (a.eps + b.eps) % 2};
}

SDElement sd_inverse(const SDElement& a) {
  if (a.eps == 0) return {-a.n1, -a.n2, 0};
  return {-a.n2, -a.n1, 1};
}

SDElement sd_conjugate(const SDElement& g, const SDElement& x) {
  return sd_compose(sd_compose(g, x), sd_inverse(g));
}

std::string DoubleCosetTag::to_string() const {
  return prime ? "G'" : "G_" + std::to_string(n);
}

DoubleCosetTag classify_double_coset(const SDElement& x) {
  if (x.eps == 1) return {true, 0};
  return {false, x.n2};
}

WindowPartitionResult window_partition_check(long window) {
  if (window < 1) throw PreconditionViolated("window must be at least 1");
  const long w = window;
  const long bound = 2 * w;
  WindowPartitionResult result{w, 0, 0};

  // Representatives: g_n for |n| <= W, then g'.
  std::vector<SDElement> reps;
  for (long n = -w; n <= w; ++n) reps.push_back(g_n(n));
  reps.push_back(g_prime());
  auto in_window = [&](const SDElement& x) { return std::abs(x.n1) <= w && std::abs(x.n2) <= w; };
  auto index = [&](const SDElement& x) {
    return static_cast<std::size_t>(((x.n1 + w) * (2 * w + 1) + (x.n2 + w)) * 2 + x.eps);
  };
  const std::size_t side = static_cast<std::size_t>(2 * w + 1);
  std::vector<std::set<std::size_t>> hits(side * side * 2);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (long s = -bound; s <= bound; ++s) {
      const SDElement k{s, 0, 0};
      const SDElement kg = sd_compose(k, reps[r]);
      for (long t = -bound; t <= bound; ++t) {
        const SDElement x = sd_compose(kg, SDElement{t, 0, 0});
        if (in_window(x)) hits[index(x)].insert(r);
      }
    }
  }
  for (long a = -w; a <= w; ++a) {
    for (long b = -w; b <= w; ++b) {
      for (int e = 0; e <= 1; ++e) {
        const SDElement x{a, b, e};
        const DoubleCosetTag tag = classify_double_coset(x);
        const std::size_t expected = tag.prime ? reps.size() - 1 : static_cast<std::size_t>(tag.n + w);
        ++result.elements_checked;
        if (hits[index(x)] != std::set<std::size_t>{expected}) ++result.disagreements;
      }
    }
  }
  return result;
}

ZCharacter::ZCharacter(CycloNumber value) : value_(std::move(value)) {
  if (value_.is_zero()) throw PreconditionViolated("a character of Z needs a nonzero value at 1");
}

CycloNumber ZCharacter::operator()(long n) const {
  CycloNumber base = n >= 0 ? value_ : value_.inverse();
  CycloNumber out(1);
  for (long i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

FinSuppFunction FinSuppFunction::delta(long n, CycloNumber value) {
  FinSuppFunction f;
  f.set(n, value);
  return f;
}

CycloNumber FinSuppFunction::operator()(long n) const {
  auto it = values_.find(n);
  return it == values_.end() ? CycloNumber() : it->second;
}

void FinSuppFunction::set(long n, const CycloNumber& value) {
  if (value.is_zero()) {
    values_.erase(n);
  } else {
    values_[n] = value;
  }
}

std::optional<long> FinSuppFunction::min_support() const {
  if (values_.empty()) return std::nullopt;
  return values_.begin()->first;
}

FinSuppFunction FinSuppFunction::shifted() const {
  FinSuppFunction out;
  for (const auto& [n, v] : values_) out.values_[n - 1] = v;
  return out;
}

FinSuppFunction& FinSuppFunction::operator+=(const FinSuppFunction& other) {
  for (const auto& [n, v] : other.values_) set(n, (*this)(n) + v);
  return *this;
}

FinSuppFunction FinSuppFunction::scaled(const CycloNumber& s) const {
  FinSuppFunction out;
  if (s.is_zero()) return out;
  for (const auto& [n, v] : values_) out.values_[n] = v * s;
  return out;
}

std::string FinSuppFunction::to_string() const {
  if (values_.empty()) return "0";
  std::string out;
  for (const auto& [n, v] : values_) {
    if (!out.empty()) out += " + ";
    out += "(" + v.to_string() + ")*d" + std::to_string(n);
  }
  return out;
}

ShiftWitness shift_subrep_refuter(const std::vector<FinSuppFunction>& candidates) {
  std::optional<long> n0;
  const FinSuppFunction* chosen = nullptr;
  for (const auto& f : candidates) {
    auto m = f.min_support();
    if (m && (!n0 || *m < *n0)) {
      n0 = m;
      chosen = &f;
    }
  }
  if (!n0) throw PreconditionViolated("all candidate functions are zero");

  ShiftWitness w;
  w.n0 = *n0;
  w.f = *chosen;
  w.shifted = chosen->shifted();
  w.value_check = !w.f(w.n0).is_zero() && w.shifted(w.n0 - 1) == w.f(w.n0);

  // Exact membership test on the union of supports.
  std::set<long> points{w.n0 - 1};
  for (const auto& f : candidates) {
    for (const auto& [n, v] : f.support()) points.insert(n);
  }
  const std::vector<long> pts(points.begin(), points.end());
  exact::ExactMatrix span(pts.size(), candidates.size());
  exact::ExactMatrix extended(pts.size(), candidates.size() + 1);
  for (std::size_t r = 0; r < pts.size(); ++r) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      span(r, c) = candidates[c](pts[r]);
      extended(r, c) = span(r, c);
    }
    extended(r, candidates.size()) = w.shifted(pts[r]);
  }
  w.span_dim = exact::rank(span);
  w.leaves_span = exact::rank(extended) > w.span_dim;
  return w;
}

std::vector<FinSuppFunction> random_candidate_space(std::mt19937_64& rng, unsigned conductor,
                                                    std::size_t max_dim, long radius) {
  const std::size_t degree = exact::CycloField::get(conductor).degree();
  std::uniform_int_distribution<std::size_t> dim_dist(1, std::max<std::size_t>(max_dim, 1));
  std::uniform_int_distribution<int> size_dist(1, 6);
  std::uniform_int_distribution<long> point_dist(-radius, radius);
  std::uniform_int_distribution<int> coeff_dist(-4, 4);
  auto random_value = [&] {
    while (true) {
      std::vector<exact::Rational> coeffs;
      for (std::size_t i = 0; i < degree; ++i) coeffs.emplace_back(coeff_dist(rng));
      auto v = CycloNumber::from_coeffs(conductor, std::move(coeffs));
      if (!v.is_zero()) return v;
    }
  };
  std::vector<FinSuppFunction> out(dim_dist(rng));
  for (auto& f : out) {
    const int size = size_dist(rng);
    for (int i = 0; i < size; ++i) f.set(point_dist(rng), random_value());
  }
  return out;
}

RhsHomDims rhs_hom_dims(const ZCharacter& chi1, const ZCharacter& chi2, long window) {
  if (chi1 == chi2) throw PreconditionViolated("equal characters: the example needs chi1 != chi2");
  RhsHomDims out;
  const SDElement h_gen{1, 0, 0};  // generator of H = K = Z x {0}

  // G_n: g_n centralizes H, so K cap gH = H and g-chi2 = chi2; Hom_H(chi1, chi2)
  // is nonzero exactly when the characters agree on the generator.
  out.gn_centralizes_h = true;
  for (long n = -window; n <= window; ++n) {
    out.gn_centralizes_h = out.gn_centralizes_h && sd_conjugate(g_n(n), h_gen) == h_gen;
    out.gn_dims.emplace_back(n, chi1.value() == chi2.value() ? 1 : 0);
  }

  // G': g' H g'^-1 is generated by ((0,1),0), i.e. {0} x Z; it meets Z x {0}
  // only in the identity, so Hom over the trivial group is Hom(C, C).
  const SDElement conj = sd_conjugate(g_prime(), h_gen);
  out.gprime_conjugate_is_vertical = conj == SDElement{0, 1, 0};
  // (a,0,0) = (0,b,0) forces a = b = 0: the lattices Z(1,0) and Z(0,1) are independent.
  out.gprime_intersection_trivial =
      out.gprime_conjugate_is_vertical &&
      exact::rank(exact::ExactMatrix(2, 2, {h_gen.n1, conj.n1, h_gen.n2, conj.n2})) == 2;
  out.gprime_dim = out.gprime_intersection_trivial ? 1 : 0;

  out.total = out.gprime_dim;
  for (const auto& [n, d] : out.gn_dims) out.total += d;
  return out;
}

DiscreteReport lhs_hom_report(const ZCharacter& chi1, const ZCharacter& chi2, long window,
                              std::size_t trials, std::uint64_t seed) {
  if (chi1 == chi2) throw PreconditionViolated("equal characters: the example needs chi1 != chi2");
  DiscreteReport r;
  r.lambda1 = chi1.value().to_string();
  r.lambda2 = chi2.value().to_string();
  r.conductor = std::lcm(chi1.value().conductor(), chi2.value().conductor());
  r.window = window;
  r.trials = trials;
  r.seed = seed;
  r.partition = window_partition_check(window);
  r.rhs = rhs_hom_dims(chi1, chi2, window);

  r.lhs_obligations.push_back(
      {"double cosets K g_n H and K g' H partition G", "property-tested", r.partition.ok(),
       std::to_string(r.partition.elements_checked) + " elements with |n1|,|n2| <= " +
           std::to_string(window) + ", " + std::to_string(r.partition.disagreements) +
           " disagreements"});
  r.lhs_obligations.push_back({"g_n centralizes H, so the G_n term is Hom_K(chi1, chi2)", "decided",
                               r.rhs.gn_centralizes_h,
                               "g_n ((1,0),0) g_n^-1 = ((1,0),0) for |n| <= " + std::to_string(window)});
  const bool distinct = !(chi1.value() == chi2.value());
  r.lhs_obligations.push_back({"Hom_K(chi1, chi2) = 0", "decided", distinct,
                               "chi1(1) = " + r.lambda1 + " != chi2(1) = " + r.lambda2});
  r.lhs_obligations.push_back({"K cap g'Hg'^-1 = {1}, so the G' term is Hom_Z(chi1, cInd_1^Z 1)",
                               "decided", r.rhs.gprime_intersection_trivial,
                               "g' ((1,0),0) g'^-1 = ((0,1),0)"});

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto candidates = random_candidate_space(rng, r.conductor);
    auto w = shift_subrep_refuter(candidates);
    if (w.value_check && w.leaves_span) ++r.refuter_successes;
  }
  r.lhs_obligations.push_back(
      {"cInd_1^Z 1 has no nonzero finite-dimensional subrepresentation", "property-tested",
       trials > 0 && r.refuter_successes == trials,
       std::to_string(r.refuter_successes) + "/" + std::to_string(trials) +
           " random subspaces of dim <= 5 on [-20,20] refuted by an exact rank check"});

  r.lhs_established = std::all_of(r.lhs_obligations.begin(), r.lhs_obligations.end(),
                                  [](const Obligation& o) { return o.discharged; });
  r.lhs_total = 0;
  r.mismatch = r.lhs_established && r.lhs_total != r.rhs.total;
  return r;
}

}  // namespace mackey::discrete
