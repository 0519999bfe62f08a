#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mackey/exact/cyclo.hpp"

/// G = Z^2 x| Z/2 with the swap action, H = K = Z x {0}, and two distinct
/// characters of Z: the restriction/induction statement with only a
/// compactness hypothesis on the image of K fails here.  The left-hand Hom
/// space is not enumerable, so its vanishing is recorded as a list of
/// obligations, each discharged either by an exact scalar comparison or by
/// an exact linear-algebra refutation on randomized candidates.
namespace mackey::discrete {

using exact::CycloNumber;

/// ((n1, n2), eps) with eps in {0, 1}.
struct SDElement {
  long n1 = 0;
  long n2 = 0;
  int eps = 0;
  friend bool operator==(const SDElement&, const SDElement&) = default;
  friend auto operator<=>(const SDElement&, const SDElement&) = default;
  std::string to_string() const;
};

/// ((a,b),e) * ((c,d),f) = ((a,b) + phi(e)(c,d), e + f), phi(1)(c,d) = (d,c).
SDElement sd_compose(const SDElement& a, const SDElement& b);
SDElement sd_inverse(const SDElement& a);
/// g x g^-1
SDElement sd_conjugate(const SDElement& g, const SDElement& x);

inline SDElement g_n(long n) { return {0, n, 0}; }
inline SDElement g_prime() { return {0, 0, 1}; }

/// Which double coset K x H contains x: G_n(n) or G'.
struct DoubleCosetTag {
  bool prime = false;
  long n = 0;  // meaningful when !prime
  friend bool operator==(const DoubleCosetTag&, const DoubleCosetTag&) = default;
  std::string to_string() const;
};

DoubleCosetTag classify_double_coset(const SDElement& x);

struct WindowPartitionResult {
  long window = 0;
  std::size_t elements_checked = 0;
  std::size_t disagreements = 0;
  bool ok() const noexcept { return disagreements == 0; }
};

/// For every x with |n1|, |n2| <= W (both values of eps): the representatives
/// g_n (|n| <= W) and g' whose brute-force products k g h, with k, h in K = H
/// of size at most 2W, hit x must be exactly the one named by
/// classify_double_coset.  Requires W >= 1.
WindowPartitionResult window_partition_check(long window);

/// A character of Z, determined by the (nonzero) image of 1.
class ZCharacter {
 public:
  explicit ZCharacter(CycloNumber value);
  const CycloNumber& value() const noexcept { return value_; }
  /// lambda^n, n of either sign.
  CycloNumber operator()(long n) const;
  friend bool operator==(const ZCharacter& a, const ZCharacter& b) { return a.value_ == b.value_; }

 private:
  CycloNumber value_;
};

/// Finitely supported function Z -> Q(zeta_N); zero values are never stored.
class FinSuppFunction {
 public:
  FinSuppFunction() = default;
  static FinSuppFunction delta(long n, CycloNumber value = CycloNumber(1));

  CycloNumber operator()(long n) const;
  void set(long n, const CycloNumber& value);
  const std::map<long, CycloNumber>& support() const noexcept { return values_; }
  bool is_zero() const noexcept { return values_.empty(); }
  std::optional<long> min_support() const;

  /// Translation action of 1 in Z: (1.f)(n) = f(n + 1).
  FinSuppFunction shifted() const;

  FinSuppFunction& operator+=(const FinSuppFunction& other);
  friend FinSuppFunction operator+(FinSuppFunction a, const FinSuppFunction& b) { return a += b; }
  FinSuppFunction scaled(const CycloNumber& s) const;
  friend bool operator==(const FinSuppFunction&, const FinSuppFunction&) = default;
  std::string to_string() const;

 private:
  std::map<long, CycloNumber> values_;
};

struct ShiftWitness {
  long n0 = 0;                 // smallest support point of the span
  FinSuppFunction f;           // member of the span with f(n0) != 0
  FinSuppFunction shifted;     // 1.f, nonzero at n0 - 1
  bool value_check = false;    // shifted(n0 - 1) == f(n0) != 0
  bool leaves_span = false;    // exact rank check: shifted is not in the span
  std::size_t span_dim = 0;
};

/// The span W of `candidates` is not a subrepresentation: returns f in W
/// with f(n0) != 0 at the smallest support point n0 of W and checks exactly
/// that its shift leaves W.  Throws PreconditionViolated when every
/// candidate is zero (or the list is empty).
ShiftWitness shift_subrep_refuter(const std::vector<FinSuppFunction>& candidates);

/// 1..max_dim random functions, each with 1..6 support points in
/// [-radius, radius] and random values of the given conductor.
std::vector<FinSuppFunction> random_candidate_space(std::mt19937_64& rng, unsigned conductor,
                                                    std::size_t max_dim = 5, long radius = 20);

struct RhsHomDims {
  /// dim Hom_{K cap gH}(chi1, g-chi2) for g = g_n, n in [-W, W]
  std::vector<std::pair<long, std::size_t>> gn_dims;
  std::size_t gprime_dim = 0;
  std::size_t total = 0;  // the G_n classes contribute 0 for every n
  bool gn_centralizes_h = false;             // g_n h g_n^-1 = h on the window
  bool gprime_conjugate_is_vertical = false;  // g' (Z x 0) g'^-1 = 0 x Z
  bool gprime_intersection_trivial = false;   // (Z x 0) cap (0 x Z) = {1}
};

/// Throws PreconditionViolated ("equal characters") when chi1 == chi2.
RhsHomDims rhs_hom_dims(const ZCharacter& chi1, const ZCharacter& chi2, long window = 10);

struct Obligation {
  std::string name;
  /// "decided": exact scalar or group-law equality.
  /// "property-tested": exact checks over a randomized family.
  std::string kind;
  bool discharged = false;
  std::string detail;
};

struct DiscreteReport {
  std::string lambda1;
  std::string lambda2;
  unsigned conductor = 1;
  long window = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  WindowPartitionResult partition;
  RhsHomDims rhs;
  std::vector<Obligation> lhs_obligations;
  std::size_t refuter_successes = 0;
  std::size_t lhs_total = 0;
  bool lhs_established = false;  // every obligation discharged
  bool mismatch = false;          // LHS total != RHS total
  bool reproduces_counterexample() const noexcept {
    return partition.ok() && lhs_established && lhs_total == 0 && rhs.total == 1 && mismatch;
  }
};

/// The full chain for the left-hand side next to the right-hand count.
/// Throws PreconditionViolated ("equal characters") when chi1 == chi2.
DiscreteReport lhs_hom_report(const ZCharacter& chi1, const ZCharacter& chi2, long window,
                              std::size_t trials, std::uint64_t seed);

}  // namespace mackey::discrete
