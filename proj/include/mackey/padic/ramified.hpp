#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mackey/exact/cyclo.hpp"

/// Truncated arithmetic in E = Q_p(sqrt p), a ramified quadratic extension of
/// F = Q_p, with uniformizer w = sqrt p so that w^2 = p exactly.
///
/// An element is w^v * u with u = A + B w a unit of O_E = Z_p[w] known modulo
/// w^r (r = relative precision).  Modulo w^r the pair is A mod p^ceil(r/2),
/// B mod p^floor(r/2).  Base-w digits interleave the base-p digits of A (even
/// positions) and B (odd positions); F is exactly the set of elements whose
/// odd-position digits vanish.
namespace mackey::padic {

using exact::Integer;

class RamifiedQuadElement {
 public:
  /// Absolute precision given to exact zeros.
  static constexpr long kExact = 1L << 40;

  /// The exact zero of an unspecified prime; only useful as a placeholder.
  RamifiedQuadElement() = default;
  /// Zero known modulo w^absolute_precision.
  static RamifiedQuadElement zero(unsigned p, long absolute_precision);
  /// Integers are given relative precision `precision`; 0 is an exact zero.
  static RamifiedQuadElement from_integer(unsigned p, long value, long precision);
  /// w^k (k of either sign), relative precision `precision`.
  static RamifiedQuadElement uniformizer_power(unsigned p, long k, long precision);
  /// sum_i digits[i] w^(valuation + i), digits in [0, p); leading zeros are
  /// stripped.  Known modulo w^(valuation + digits.size()).
  static RamifiedQuadElement from_digits(unsigned p, long valuation, const std::vector<int>& digits);

  unsigned prime() const noexcept { return p_; }
  /// True when every tracked digit is zero; the valuation is then unknown
  /// beyond absolute_precision().
  bool is_zero_to_precision() const noexcept { return zero_; }
  /// Throws PrecisionExhausted for zero-to-precision elements.
  long valuation() const;
  /// Digits of the unit part; empty for zero-to-precision.
  long relative_precision() const noexcept { return zero_ ? 0 : rel_; }
  /// The element is known modulo w^absolute_precision().
  long absolute_precision() const noexcept { return zero_ ? abs_zero_ : val_ + rel_; }
  /// Base-w digit at absolute position i (0 outside the tracked range below
  /// the valuation); throws PrecisionExhausted at or beyond the precision.
  int digit(long position) const;
  std::vector<int> unit_digits() const;

  /// Coarsened copy known only modulo w^absolute.
  RamifiedQuadElement truncated(long absolute) const;

  /// Valuation >= k, deciding from known digits; throws PrecisionExhausted if
  /// the known digits do not decide it.
  bool valuation_at_least(long k) const;

  RamifiedQuadElement operator-() const;
  friend RamifiedQuadElement operator+(const RamifiedQuadElement& a, const RamifiedQuadElement& b);
  friend RamifiedQuadElement operator-(const RamifiedQuadElement& a, const RamifiedQuadElement& b);
  friend RamifiedQuadElement operator*(const RamifiedQuadElement& a, const RamifiedQuadElement& b);
  /// Throws DivisionByZero when b is zero-to-precision.
  friend RamifiedQuadElement operator/(const RamifiedQuadElement& a, const RamifiedQuadElement& b);
  RamifiedQuadElement inverse() const;

  /// Same value to the smaller of the two precisions.
  bool agrees_with(const RamifiedQuadElement& other) const;

  /// "w^v * (d0 d1 d2 ...)" or "O(w^k)".
  std::string to_string() const;

 private:
  // Normalizes A + B w, known modulo w^r, times w^offset.
  static RamifiedQuadElement normalize(unsigned p, long offset, Integer a, Integer b, long r);

  unsigned p_ = 0;
  bool zero_ = true;
  long abs_zero_ = kExact;  // absolute precision when zero_
  long val_ = 0;
  long rel_ = 0;
  Integer a_;
  Integer b_;
};

enum class RqOp { add, sub, mul, div };
RamifiedQuadElement rq_arith(const RamifiedQuadElement& a, const RamifiedQuadElement& b, RqOp op);

/// All odd-position digits vanish to precision.  A determinate odd valuation
/// returns false definitively; zero-to-precision returns true.
bool is_in_base_field(const RamifiedQuadElement& x);

/// Uniform digits at absolute positions [min_valuation, absolute_precision).
RamifiedQuadElement random_element(std::mt19937_64& rng, unsigned p, long min_valuation,
                                   long absolute_precision);

struct PadicMatrix2 {
  std::array<RamifiedQuadElement, 4> e;  // row-major

  const RamifiedQuadElement& operator()(int r, int c) const { return e[2 * r + c]; }
  static PadicMatrix2 identity(unsigned p, long precision);
  static PadicMatrix2 diagonal(const RamifiedQuadElement& x, const RamifiedQuadElement& y);
  RamifiedQuadElement determinant() const;
  friend PadicMatrix2 operator*(const PadicMatrix2& a, const PadicMatrix2& b);
  /// One line per entry: valuation and unit digits.
  std::vector<std::string> listing() const;
};

struct PadicParams {
  unsigned p = 5;
  long precision = 40;
  /// H = [[1 + p_E^k, p_E^k], [p_E^k, 1 + p_E^k]]; k = 1 is the standard
  /// choice, deeper levels are an experiment.
  long h_level = 1;
};

/// Diagonal in 1 + p_E^k and off-diagonal in p_E^k (k = h_level).
bool in_H(const PadicMatrix2& m, long h_level = 1);
/// Entries in F and determinant nonzero to precision.
bool in_K(const PadicMatrix2& m);
/// M - 1 has all entries in p_E^m.
bool in_U(const PadicMatrix2& m, long level);

/// [[1, w^(2n+1)], [0, 1]]
PadicMatrix2 build_u_n(long n, const PadicParams& params);

/// v_E((1 + a) p^-(n+1) w^(2n+1) + b) for a, b in p_E.  Throws
/// PreconditionViolated when v(a) or v(b) is below 1.
long witness_valuation(long n, const RamifiedQuadElement& a, const RamifiedQuadElement& b,
                       const PadicParams& params);

/// Random element of H at the given level.
PadicMatrix2 random_h(std::mt19937_64& rng, const PadicParams& params);

struct HkRefutation {
  long n = 0;
  std::size_t trials = 0;
  PadicMatrix2 m_n;                     // diag(1, p^(n+1)) u_n diag(1, p^-(n+1))
  bool m_n_entry_matches = false;       // top-right = p^-(n+1) w^(2n+1)
  bool identity_check = false;          // h = 1: entry has valuation -1 and is not in F
  bool parity_check = false;            // v((1+a)X) = -1 < h_level <= v(b) forces -1 for all h
  std::size_t outside_k = 0;            // sampled h with h M_n not in K
  std::size_t valuation_minus_one = 0;  // sampled h with top-right valuation exactly -1
  bool refuted() const noexcept {
    return m_n_entry_matches && identity_check && parity_check && outside_k == trials &&
           valuation_minus_one == trials;
  }
};

/// Evidence that M_n is not in HK: no h in H moves it into K.
HkRefutation hk_membership_refuter(long n, std::size_t trials, std::uint64_t seed,
                                   const PadicParams& params);

struct SmoothnessRefutation {
  long level = 0;
  long n = 0;                       // least n with u_n in U_m
  bool n_matches_formula = false;   // n == ceil((m - 1) / 2)
  bool k_factor_in_k = false;       // diag(1, p^(n+1)) in K
  bool u_n_in_u = false;
  PadicMatrix2 element;             // diag(1, p^(n+1)) u_n, in K U_m
  HkRefutation hk;
  bool refuted() const noexcept {
    return n_matches_formula && k_factor_in_k && u_n_in_u && hk.refuted();
  }
};

/// HK U_m != HK at level m.  Throws PreconditionViolated when no n <=
/// search_bound has u_n in U_m.
SmoothnessRefutation smoothness_refuter(long level, long search_bound, std::size_t trials,
                                        std::uint64_t seed, const PadicParams& params);

}  // namespace mackey::padic
