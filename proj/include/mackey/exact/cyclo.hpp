#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mackey::exact {

using Rational = mpq_class;
using Integer = mpz_class;

/// Q(zeta_N) presented as Q[x] / Phi_N(x) with the power basis
/// 1, x, ..., x^{phi(N)-1}.  Instances are interned per conductor and live
/// for the whole program, so raw pointers to them are stable.
class CycloField {
 public:
  static const CycloField& get(unsigned conductor);

  unsigned conductor() const noexcept { return conductor_; }
  std::size_t degree() const noexcept { return cyclotomic_.size() - 1; }

  /// Integer coefficients of Phi_N, constant term first, monic.
  const std::vector<Integer>& cyclotomic_polynomial() const noexcept {
    return cyclotomic_;
  }

  /// x^k reduced modulo Phi_N, for 0 <= k < power_table_size().
  const std::vector<Rational>& power(std::size_t k) const { return powers_.at(k); }
  std::size_t power_table_size() const noexcept { return powers_.size(); }

 private:
  explicit CycloField(unsigned conductor);

  unsigned conductor_;
  std::vector<Integer> cyclotomic_;
  std::vector<std::vector<Rational>> powers_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

/// An exact element of Q(zeta_N).
///
/// Values of different conductors interoperate: arithmetic embeds both
/// operands into Q(zeta_lcm) first.  Conductor 1 (plain rationals) embeds
/// for free, which keeps the common rational case cheap.  Equality is value
/// equality across conductors.
class CycloNumber {
 public:
  CycloNumber();
  CycloNumber(long value);  // NOLINT(google-explicit-constructor)
  CycloNumber(const Rational& value);  // NOLINT(google-explicit-constructor)

  static CycloNumber zeta(unsigned conductor, long exponent = 1);
  static CycloNumber from_coeffs(unsigned conductor, std::vector<Rational> coeffs);

  unsigned conductor() const noexcept { return field_->conductor(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q, whatever the conductor.
  bool is_rational() const;
  /// The rational value; throws if !is_rational().
  Rational to_rational() const;

  /// Same value expressed in Q(zeta_m); m must be a multiple of conductor().
  CycloNumber embed(unsigned m) const;

  /// Complex conjugation, realized as zeta -> zeta^{-1}.
  CycloNumber conj() const;
  CycloNumber inverse() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& rhs);
  CycloNumber& operator-=(const CycloNumber& rhs);
  CycloNumber& operator*=(const CycloNumber& rhs);
  CycloNumber& operator/=(const CycloNumber& rhs);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  /// Polynomial in z, e.g. "1/2 + z^3 - 2*z".  The conductor is not printed.
  std::string to_string() const;

 private:
  CycloNumber(const CycloField* field, std::vector<Rational> coeffs);

  const CycloField* field_;
  std::vector<Rational> coeffs_;
};

enum class ArithOp { add, sub, mul, div };

/// Binary arithmetic with an explicit embedding policy.  With
/// allow_embedding == false, operands of different conductors (other than
/// rationals, which live in every field) raise ConductorMismatch.
CycloNumber cyclo_arith(const CycloNumber& a, const CycloNumber& b, ArithOp op,
                        bool allow_embedding = true);

/// Parses a polynomial in z with rational coefficients and reads z as
/// zeta_conductor.  Grammar:
///   expr  := ['+'|'-'] term (('+'|'-') term)*
///   term  := rational ['*' zpow] | zpow
///   zpow  := 'z' ['^' integer]
///   rational := integer ['/' integer]
/// Whitespace is ignored.  Throws ParseError with the column on failure.
CycloNumber parse_cyclo(std::string_view text, unsigned conductor);

}  // namespace mackey::exact
