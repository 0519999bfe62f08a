#include "mackey/exact/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

#include "mackey/error.hpp"

namespace mackey::exact {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Quotient and remainder of a by a nonzero b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (sgn(a[i]) == 0) continue;
    Rational c = a[i] / lead;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw PreconditionViolated("cyclotomic polynomial needs n >= 1");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<Integer> den = cyclotomic_polynomial(d);
    std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
    for (std::size_t i = num.size(); i-- >= den.size();) {
      Integer c = num[i];  // den is monic
      std::size_t shift = i - (den.size() - 1);
      quot[shift] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

CycloField::CycloField(unsigned conductor)
    : conductor_(conductor), cyclotomic_(exact::cyclotomic_polynomial(conductor)) {
  const std::size_t d = degree();
  const std::size_t table = std::max<std::size_t>(conductor, 2 * d - 1);
  powers_.reserve(table);
  std::vector<Rational> cur(d, Rational(0));
  cur[0] = 1;
  for (std::size_t k = 0; k < table; ++k) {
    powers_.push_back(cur);
    // multiply by x and reduce with x^d = -sum_{i<d} phi_i x^i
    Rational top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (sgn(top) != 0) {
      for (std::size_t i = 0; i < d; ++i) cur[i] -= top * Rational(cyclotomic_[i]);
    }
  }
}

const CycloField& CycloField::get(unsigned conductor) {
  if (conductor == 0) throw PreconditionViolated("conductor must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CycloField>> fields;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = fields.find(conductor);
  if (it == fields.end()) {
    it = fields.emplace(conductor, std::unique_ptr<CycloField>(new CycloField(conductor)))
             .first;
  }
  return *it->second;
}

CycloNumber::CycloNumber() : field_(&CycloField::get(1)), coeffs_(1, Rational(0)) {}

CycloNumber::CycloNumber(long value)
    : field_(&CycloField::get(1)), coeffs_(1, Rational(value)) {}

CycloNumber::CycloNumber(const Rational& value)
    : field_(&CycloField::get(1)), coeffs_(1, value) {
  coeffs_[0].canonicalize();
}

CycloNumber::CycloNumber(const CycloField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

CycloNumber CycloNumber::zeta(unsigned conductor, long exponent) {
  const CycloField& f = CycloField::get(conductor);
  long k = exponent % static_cast<long>(conductor);
  if (k < 0) k += conductor;
  return CycloNumber(&f, f.power(static_cast<std::size_t>(k)));
}

CycloNumber CycloNumber::from_coeffs(unsigned conductor, std::vector<Rational> coeffs) {
  const CycloField& f = CycloField::get(conductor);
  if (coeffs.size() > f.degree()) {
    // reduce a longer polynomial modulo Phi_N
    std::vector<Rational> reduced(f.degree(), Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (sgn(coeffs[k]) == 0) continue;
      const auto& pk = f.power(k % conductor);
      for (std::size_t i = 0; i < reduced.size(); ++i) reduced[i] += coeffs[k] * pk[i];
    }
    coeffs = std::move(reduced);
  }
  coeffs.resize(f.degree(), Rational(0));
  for (auto& c : coeffs) c.canonicalize();
  return CycloNumber(&f, std::move(coeffs));
}

bool CycloNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

bool CycloNumber::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

bool CycloNumber::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational CycloNumber::to_rational() const {
  if (!is_rational()) throw PreconditionViolated("value is not rational: " + to_string());
  return coeffs_[0];
}

CycloNumber CycloNumber::embed(unsigned m) const {
  const unsigned n = conductor();
  if (m % n != 0) {
    throw ConductorMismatch("cannot embed conductor " + std::to_string(n) + " into " +
                            std::to_string(m));
  }
  if (m == n) return *this;
  const CycloField& target = CycloField::get(m);
  std::vector<Rational> out(target.degree(), Rational(0));
  const std::size_t step = m / n;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const auto& pk = target.power(i * step);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs_[i] * pk[j];
  }
  return CycloNumber(&target, std::move(out));
}

CycloNumber CycloNumber::conj() const {
  const unsigned n = conductor();
  if (n <= 2) return *this;
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  out[0] = coeffs_[0];
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const auto& pk = field_->power(n - i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs_[i] * pk[j];
  }
  return CycloNumber(field_, std::move(out));
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    CycloNumber r(field_, std::vector<Rational>(coeffs_.size(), Rational(0)));
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  Poly modulus;
  for (const auto& c : field_->cyclotomic_polynomial()) modulus.emplace_back(c);
  Poly r0 = modulus;
  Poly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_N is irreducible
  Rational scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  return from_coeffs(conductor(), std::move(s0));
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
  if (field_ == rhs.field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else if (rhs.conductor() == 1) {
    coeffs_[0] += rhs.coeffs_[0];
  } else if (conductor() == 1) {
    Rational c = coeffs_[0];
    *this = rhs;
    coeffs_[0] += c;
  } else {
    unsigned m = lcm_u(conductor(), rhs.conductor());
    *this = embed(m);
    *this += rhs.embed(m);
  }
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) { return *this += -rhs; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs) {
  if (rhs.conductor() == 1) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (conductor() == 1) {
    Rational c = coeffs_[0];
    *this = rhs;
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  if (field_ != rhs.field_) {
    unsigned m = lcm_u(conductor(), rhs.conductor());
    *this = embed(m);
    return *this *= rhs.embed(m);
  }
  const std::size_t d = coeffs_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& pk = field_->power(k);
    for (std::size_t i = 0; i < d; ++i) prod[i] += prod[k] * pk[i];
  }
  prod.resize(d);
  coeffs_ = std::move(prod);
  return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& rhs) { return *this *= rhs.inverse(); }

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (a.conductor() == 1) return b.is_rational() && b.coeffs_[0] == a.coeffs_[0];
  if (b.conductor() == 1) return a.is_rational() && a.coeffs_[0] == b.coeffs_[0];
  unsigned m = lcm_u(a.conductor(), b.conductor());
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::string CycloNumber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CycloNumber cyclo_arith(const CycloNumber& a, const CycloNumber& b, ArithOp op,
                        bool allow_embedding) {
  if (!allow_embedding && a.conductor() != b.conductor() && a.conductor() != 1 &&
      b.conductor() != 1) {
    throw ConductorMismatch("conductors " + std::to_string(a.conductor()) + " and " +
                            std::to_string(b.conductor()) + " differ");
  }
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return a;
}

namespace {

class CycloParser {
 public:
  CycloParser(std::string_view text, unsigned conductor)
      : text_(text), conductor_(conductor) {}

  CycloNumber parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    CycloNumber acc;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      CycloNumber t = term();
      acc += sign < 0 ? -t : t;
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return acc;
  }

 private:
  CycloNumber term() {
    skip_ws();
    if (peek() == 'z') return zpow();
    Rational c = rational();
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() != 'z') fail("expected 'z' after '*'");
      return CycloNumber(c) * zpow();
    }
    return CycloNumber(c);
  }

  CycloNumber zpow() {
    ++pos_;  // 'z'
    skip_ws();
    long e = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      Integer v = integer();
      if (!v.fits_slong_p()) fail("exponent too large");
      e = neg ? -v.get_si() : v.get_si();
    }
    return CycloNumber::zeta(conductor_, e);
  }

  Rational rational() {
    Integer num = integer();
    skip_ws();
    if (peek() != '/') return Rational(num);
    ++pos_;
    skip_ws();
    Integer den = integer();
    if (den == 0) fail("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cyclotomic expression '" + std::string(text_) + "': " + msg, 1,
                     pos_ + 1);
  }

  std::string_view text_;
  unsigned conductor_;
  std::size_t pos_ = 0;
};

}  // namespace

CycloNumber parse_cyclo(std::string_view text, unsigned conductor) {
  return CycloParser(text, conductor).parse();
}

}  // namespace mackey::exact
