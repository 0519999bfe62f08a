#include "mackey/padic/ramified.hpp"

#include <algorithm>
#include <limits>

#include "mackey/error.hpp"

namespace mackey::padic {

namespace {

Integer power_of(unsigned p, long k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(std::max(0L, k)));
  return out;
}

// Moduli of A and B when A + B w is known modulo w^r.
Integer modulus_a(unsigned p, long r) { return power_of(p, (r + 1) / 2); }
Integer modulus_b(unsigned p, long r) { return power_of(p, r / 2); }

Integer reduce(const Integer& x, const Integer& m) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return out;
}

// p-adic valuation of a nonzero integer.
long vp(const Integer& x, unsigned p) {
  Integer tmp = x;
  Integer prime = p;
  return static_cast<long>(mpz_remove(tmp.get_mpz_t(), tmp.get_mpz_t(), prime.get_mpz_t()));
}

// Base-p digit j of a non-negative integer.
int base_p_digit(const Integer& x, unsigned p, long j) {
  Integer q = x / power_of(p, j);
  return static_cast<int>(reduce(q, Integer(p)).get_si());
}

void require_same_prime(const RamifiedQuadElement& a, const RamifiedQuadElement& b) {
  if (a.prime() != b.prime()) throw PreconditionViolated("elements of different p-adic fields");
}

}  // namespace

RamifiedQuadElement RamifiedQuadElement::zero(unsigned p, long absolute_precision) {
  RamifiedQuadElement x;
  x.p_ = p;
  x.zero_ = true;
  x.abs_zero_ = std::min(absolute_precision, kExact);
  return x;
}

RamifiedQuadElement RamifiedQuadElement::normalize(unsigned p, long offset, Integer a, Integer b,
                                                   long r) {
  if (r <= 0) return zero(p, offset + r);
  a = reduce(a, modulus_a(p, r));
  b = reduce(b, modulus_b(p, r));
  if (a == 0 && b == 0) return zero(p, offset + r);
  long t = std::numeric_limits<long>::max();
  if (a != 0) t = 2 * vp(a, p);
  if (b != 0) t = std::min(t, 2 * vp(b, p) + 1);
  RamifiedQuadElement x;
  x.p_ = p;
  x.zero_ = false;
  x.val_ = offset + t;
  x.rel_ = r - t;
  const long s = t / 2;
  if (t % 2 == 0) {
    x.a_ = a / power_of(p, s);
    x.b_ = b / power_of(p, s);
  } else {
    // (A + B w) / w^(2s+1) = B / p^s + (A / p^(s+1)) w
    x.a_ = b / power_of(p, s);
    x.b_ = a / power_of(p, s + 1);
  }
  x.a_ = reduce(x.a_, modulus_a(p, x.rel_));
  x.b_ = reduce(x.b_, modulus_b(p, x.rel_));
  return x;
}

RamifiedQuadElement RamifiedQuadElement::from_integer(unsigned p, long value, long precision) {
  if (value == 0) return zero(p, kExact);
  const long s = vp(Integer(value), p);
  return normalize(p, 0, Integer(value), Integer(0), 2 * s + precision);
}

RamifiedQuadElement RamifiedQuadElement::uniformizer_power(unsigned p, long k, long precision) {
  return normalize(p, k, Integer(1), Integer(0), precision);
}

RamifiedQuadElement RamifiedQuadElement::from_digits(unsigned p, long valuation,
                                                     const std::vector<int>& digits) {
  Integer a = 0;
  Integer b = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= static_cast<int>(p)) {
      throw PreconditionViolated("digit out of range");
    }
    const long j = static_cast<long>(i / 2);
    (i % 2 == 0 ? a : b) += digits[i] * power_of(p, j);
  }
  return normalize(p, valuation, a, b, static_cast<long>(digits.size()));
}

long RamifiedQuadElement::valuation() const {
  if (zero_) {
    throw PrecisionExhausted("valuation undetermined: zero modulo w^" + std::to_string(abs_zero_));
  }
  return val_;
}

int RamifiedQuadElement::digit(long position) const {
  if (position >= absolute_precision()) {
    throw PrecisionExhausted("digit " + std::to_string(position) + " is beyond the precision");
  }
  if (zero_ || position < val_) return 0;
  const long i = position - val_;
  return i % 2 == 0 ? base_p_digit(a_, p_, i / 2) : base_p_digit(b_, p_, i / 2);
}

std::vector<int> RamifiedQuadElement::unit_digits() const {
  std::vector<int> out;
  if (zero_) return out;
  for (long i = 0; i < rel_; ++i) out.push_back(digit(val_ + i));
  return out;
}

RamifiedQuadElement RamifiedQuadElement::truncated(long absolute) const {
  if (zero_) return zero(p_, std::min(abs_zero_, absolute));
  return normalize(p_, val_, a_, b_, std::min(rel_, absolute - val_));
}

bool RamifiedQuadElement::valuation_at_least(long k) const {
  if (!zero_) return val_ >= k;
  if (abs_zero_ >= k) return true;
  throw PrecisionExhausted("cannot decide valuation >= " + std::to_string(k) + " from zero modulo w^" +
                           std::to_string(abs_zero_));
}

RamifiedQuadElement RamifiedQuadElement::operator-() const {
  if (zero_) return *this;
  return normalize(p_, val_, -a_, -b_, rel_);
}

RamifiedQuadElement operator+(const RamifiedQuadElement& x, const RamifiedQuadElement& y) {
  require_same_prime(x, y);
  const unsigned p = x.p_;
  const long precision = std::min(x.absolute_precision(), y.absolute_precision());
  if (x.zero_ && y.zero_) return RamifiedQuadElement::zero(p, precision);
  long m = std::numeric_limits<long>::max();
  if (!x.zero_) m = x.val_;
  if (!y.zero_) m = std::min(m, y.val_);
  if (m >= precision) return RamifiedQuadElement::zero(p, precision);
  // Express both as w^m (A + B w).
  Integer a = 0;
  Integer b = 0;
  for (const auto* z : {&x, &y}) {
    if (z->zero_) continue;
    const long s = z->val_ - m;
    const Integer scale = power_of(p, s / 2);
    if (s % 2 == 0) {
      a += scale * z->a_;
      b += scale * z->b_;
    } else {
      a += scale * p * z->b_;
      b += scale * z->a_;
    }
  }
  return RamifiedQuadElement::normalize(p, m, a, b, precision - m);
}

RamifiedQuadElement operator-(const RamifiedQuadElement& x, const RamifiedQuadElement& y) {
  return x + (-y);
}

RamifiedQuadElement operator*(const RamifiedQuadElement& x, const RamifiedQuadElement& y) {
  require_same_prime(x, y);
  const unsigned p = x.p_;
  if (x.zero_ || y.zero_) {
    // x = 0 mod w^P and v(y) >= ... : the product is 0 modulo w^(P + v(y))
    const long px = x.zero_ ? x.abs_zero_ : x.val_;
    const long py = y.zero_ ? y.abs_zero_ : y.val_;
    return RamifiedQuadElement::zero(p, px + py);
  }
  const long r = std::min(x.rel_, y.rel_);
  Integer a = x.a_ * y.a_ + p * x.b_ * y.b_;
  Integer b = x.a_ * y.b_ + x.b_ * y.a_;
  return RamifiedQuadElement::normalize(p, x.val_ + y.val_, a, b, r);
}

RamifiedQuadElement RamifiedQuadElement::inverse() const {
  if (zero_) throw DivisionByZero("division by an element that is zero to precision");
  // (A + B w)^-1 = (A - B w) / (A^2 - p B^2); the norm is a unit since A is.
  const Integer mod = modulus_a(p_, rel_);
  Integer norm = reduce(a_ * a_ - p_ * b_ * b_, mod);
  Integer norm_inv;
  if (mod == 1) {
    norm_inv = 0;
  } else if (mpz_invert(norm_inv.get_mpz_t(), norm.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw DivisionByZero("non-invertible unit part");
  }
  return normalize(p_, -val_, a_ * norm_inv, -b_ * norm_inv, rel_);
}

RamifiedQuadElement operator/(const RamifiedQuadElement& x, const RamifiedQuadElement& y) {
  return x * y.inverse();
}

bool RamifiedQuadElement::agrees_with(const RamifiedQuadElement& other) const {
  if (p_ != other.p_) return false;
  const long precision = std::min(absolute_precision(), other.absolute_precision());
  const auto a = truncated(precision);
  const auto b = other.truncated(precision);
  if (a.zero_ || b.zero_) return a.zero_ && b.zero_;
  return a.val_ == b.val_ && a.rel_ == b.rel_ && a.a_ == b.a_ && a.b_ == b.b_;
}

std::string RamifiedQuadElement::to_string() const {
  if (zero_) return abs_zero_ >= kExact ? "0" : "O(w^" + std::to_string(abs_zero_) + ")";
  std::string digits;
  for (int d : unit_digits()) digits += (digits.empty() ? "" : " ") + std::to_string(d);
  return "w^" + std::to_string(val_) + " * (" + digits + ")";
}

RamifiedQuadElement rq_arith(const RamifiedQuadElement& a, const RamifiedQuadElement& b, RqOp op) {
  switch (op) {
    case RqOp::add: return a + b;
    case RqOp::sub: return a - b;
    case RqOp::mul: return a * b;
    case RqOp::div: return a / b;
  }
  throw PreconditionViolated("unknown operation");
}

bool is_in_base_field(const RamifiedQuadElement& x) {
  if (x.is_zero_to_precision()) return true;
  const long v = x.valuation();
  if (v % 2 != 0) return false;
  const auto digits = x.unit_digits();
  for (std::size_t i = 1; i < digits.size(); i += 2) {
    if (digits[i] != 0) return false;
  }
  return true;
}

RamifiedQuadElement random_element(std::mt19937_64& rng, unsigned p, long min_valuation,
                                   long absolute_precision) {
  std::uniform_int_distribution<int> digit(0, static_cast<int>(p) - 1);
  std::vector<int> digits;
  for (long i = min_valuation; i < absolute_precision; ++i) digits.push_back(digit(rng));
  return RamifiedQuadElement::from_digits(p, min_valuation, digits);
}

PadicMatrix2 PadicMatrix2::identity(unsigned p, long precision) {
  const auto one = RamifiedQuadElement::from_integer(p, 1, precision);
  const auto zero = RamifiedQuadElement::zero(p, RamifiedQuadElement::kExact);
  return {{one, zero, zero, one}};
}

PadicMatrix2 PadicMatrix2::diagonal(const RamifiedQuadElement& x, const RamifiedQuadElement& y) {
  const auto zero = RamifiedQuadElement::zero(x.prime(), RamifiedQuadElement::kExact);
  return {{x, zero, zero, y}};
}

RamifiedQuadElement PadicMatrix2::determinant() const { return e[0] * e[3] - e[1] * e[2]; }

PadicMatrix2 operator*(const PadicMatrix2& a, const PadicMatrix2& b) {
  PadicMatrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out.e[2 * r + c] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  }
  return out;
}

std::vector<std::string> PadicMatrix2::listing() const {
  std::vector<std::string> out;
  for (int i = 0; i < 4; ++i) {
    const auto& x = e[i];
    std::string line = "[" + std::to_string(i / 2 + 1) + "," + std::to_string(i % 2 + 1) + "] ";
    if (x.is_zero_to_precision()) {
      line += x.to_string();
    } else {
      line += "v=" + std::to_string(x.valuation()) + " digits=";
      for (int d : x.unit_digits()) line += std::to_string(d);
    }
    out.push_back(std::move(line));
  }
  return out;
}

namespace {

// 1 known at least as precisely as the diagonal of m.
RamifiedQuadElement one_for_diagonal(const PadicMatrix2& m) {
  const long precision = std::clamp(std::max(m(0, 0).absolute_precision(), m(1, 1).absolute_precision()),
                                    1L, 4096L);
  return RamifiedQuadElement::from_integer(m(0, 0).prime(), 1, precision);
}

}  // namespace

bool in_H(const PadicMatrix2& m, long h_level) {
  const auto one = one_for_diagonal(m);
  return (m(0, 0) - one).valuation_at_least(h_level) && m(0, 1).valuation_at_least(h_level) &&
         m(1, 0).valuation_at_least(h_level) && (m(1, 1) - one).valuation_at_least(h_level);
}

bool in_K(const PadicMatrix2& m) {
  for (const auto& x : m.e) {
    if (!is_in_base_field(x)) return false;
  }
  const auto det = m.determinant();
  if (det.is_zero_to_precision()) {
    throw PrecisionExhausted("determinant is zero to precision; invertibility undecided");
  }
  return true;
}

bool in_U(const PadicMatrix2& m, long level) {
  const auto one = one_for_diagonal(m);
  return (m(0, 0) - one).valuation_at_least(level) && m(0, 1).valuation_at_least(level) &&
         m(1, 0).valuation_at_least(level) && (m(1, 1) - one).valuation_at_least(level);
}

PadicMatrix2 build_u_n(long n, const PadicParams& params) {
  if (n < 0) throw PreconditionViolated("u_n needs n >= 0");
  if (2 * n + 1 >= params.precision) throw PreconditionViolated("2n+1 exceeds the precision budget");
  auto m = PadicMatrix2::identity(params.p, params.precision);
  m.e[1] = RamifiedQuadElement::uniformizer_power(params.p, 2 * n + 1, params.precision);
  return m;
}

namespace {

// p^-(n+1) w^(2n+1), the top-right entry of M_n.
RamifiedQuadElement witness_entry(long n, const PadicParams& params) {
  const auto pf = RamifiedQuadElement::from_integer(params.p, static_cast<long>(params.p), params.precision);
  auto pf_power = RamifiedQuadElement::from_integer(params.p, 1, params.precision);
  for (long i = 0; i < n + 1; ++i) pf_power = pf_power * pf;
  return RamifiedQuadElement::uniformizer_power(params.p, 2 * n + 1, params.precision) / pf_power;
}

}  // namespace

long witness_valuation(long n, const RamifiedQuadElement& a, const RamifiedQuadElement& b,
                       const PadicParams& params) {
  if (n < 0) throw PreconditionViolated("n must be non-negative");
  if (!a.valuation_at_least(1) || !b.valuation_at_least(1)) {
    throw PreconditionViolated("a and b must lie in the maximal ideal");
  }
  const auto one = RamifiedQuadElement::from_integer(params.p, 1, params.precision);
  return ((one + a) * witness_entry(n, params) + b).valuation();
}

PadicMatrix2 random_h(std::mt19937_64& rng, const PadicParams& params) {
  const long k = params.h_level;
  const long top = k + params.precision;
  const auto one = RamifiedQuadElement::from_integer(params.p, 1, top);
  PadicMatrix2 h;
  h.e[0] = one + random_element(rng, params.p, k, top);
  h.e[1] = random_element(rng, params.p, k, top);
  h.e[2] = random_element(rng, params.p, k, top);
  h.e[3] = one + random_element(rng, params.p, k, top);
  return h;
}

HkRefutation hk_membership_refuter(long n, std::size_t trials, std::uint64_t seed,
                                   const PadicParams& params) {
  if (n < 0) throw PreconditionViolated("n must be non-negative");
  if (params.h_level < 1) throw PreconditionViolated("H needs level >= 1");
  HkRefutation r;
  r.n = n;
  r.trials = trials;
  const unsigned p = params.p;
  const auto pf = RamifiedQuadElement::from_integer(p, static_cast<long>(p), params.precision);
  auto pf_power = RamifiedQuadElement::from_integer(p, 1, params.precision);
  for (long i = 0; i < n + 1; ++i) pf_power = pf_power * pf;
  const auto one = RamifiedQuadElement::from_integer(p, 1, params.precision);
  r.m_n = PadicMatrix2::diagonal(one, pf_power) * build_u_n(n, params) *
          PadicMatrix2::diagonal(one, pf_power.inverse());
  const auto x = witness_entry(n, params);
  r.m_n_entry_matches = r.m_n(0, 1).agrees_with(x) && !r.m_n(0, 1).is_zero_to_precision() &&
                        r.m_n(0, 1).valuation() == -1;

  // Parity: v(1 + a) = 0 and v(b) >= level > -1 = v(X), so v((1+a)X + b) = -1 for every h in H.
  r.parity_check = x.valuation() == -1 && params.h_level >= 1 && x.valuation() < params.h_level;
  // h = 1
  r.identity_check = witness_valuation(n, RamifiedQuadElement::zero(p, RamifiedQuadElement::kExact),
                                       RamifiedQuadElement::zero(p, RamifiedQuadElement::kExact),
                                       params) == -1 &&
                     !in_K(r.m_n);

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto h = random_h(rng, params);
    const auto hm = h * r.m_n;
    if (!hm(0, 1).is_zero_to_precision() && hm(0, 1).valuation() == -1) ++r.valuation_minus_one;
    if (!in_K(hm)) ++r.outside_k;
  }
  return r;
}

SmoothnessRefutation smoothness_refuter(long level, long search_bound, std::size_t trials,
                                        std::uint64_t seed, const PadicParams& params) {
  if (level < 1) throw PreconditionViolated("level must be at least 1");
  SmoothnessRefutation r;
  r.level = level;
  std::optional<long> found;
  for (long n = 0; n <= search_bound && !found; ++n) {
    if (in_U(build_u_n(n, params), level)) found = n;
  }
  if (!found) {
    throw PreconditionViolated("search bound " + std::to_string(search_bound) +
                               " exceeded: no u_n in U_" + std::to_string(level));
  }
  r.n = *found;
  r.n_matches_formula = r.n == level / 2;  // ceil((m - 1) / 2)
  const unsigned p = params.p;
  const auto pf = RamifiedQuadElement::from_integer(p, static_cast<long>(p), params.precision);
  auto pf_power = RamifiedQuadElement::from_integer(p, 1, params.precision);
  for (long i = 0; i < r.n + 1; ++i) pf_power = pf_power * pf;
  const auto k_factor =
      PadicMatrix2::diagonal(RamifiedQuadElement::from_integer(p, 1, params.precision), pf_power);
  const auto u = build_u_n(r.n, params);
  r.k_factor_in_k = in_K(k_factor);
  r.u_n_in_u = in_U(u, level);
  r.element = k_factor * u;
  r.hk = hk_membership_refuter(r.n, trials, seed, params);
  return r;
}

}  // namespace mackey::padic
