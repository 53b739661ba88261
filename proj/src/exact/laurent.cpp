#include "charkit/laurent.hpp"

#include <ostream>
#include <vector>

#include "charkit/errors.hpp"

namespace charkit {

LaurentPoly::LaurentPoly(const CycNum& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int k, const CycNum& c) {
  LaurentPoly p;
  p.add_term(k, c);
  return p;
}

void LaurentPoly::add_term(int k, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CycNum LaurentPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? CycNum() : it->second;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
  if (terms_.empty()) throw std::logic_error("low degree of zero Laurent polynomial");
  return terms_.begin()->first;
}

CycNum LaurentPoly::at_one() const {
  CycNum s;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::conj_coeffs() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.conj());
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [i, x] : a.terms_)
    for (const auto& [j, y] : b.terms_) r.add_term(i + j, x * y);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const CycNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

namespace {

std::string monomial_str(int k) {
  if (k == 0) return "";
  if (k == 1) return "v";
  return "v^" + std::to_string(k);
}

bool single_term(const std::string& s) {
  return s.find(" + ") == std::string::npos && s.find(" - ") == std::string::npos;
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string cs = c.str();
    bool neg = false;
    if (single_term(cs)) {
      if (cs[0] == '-') {
        neg = true;
        cs.erase(0, 1);
      }
    } else {
      cs = "(" + cs + ")";
    }
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_str(k);
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

std::map<int, std::string> LaurentPoly::to_term_strings() const {
  std::map<int, std::string> out;
  for (const auto& [k, c] : terms_) out.emplace(k, c.str());
  return out;
}

LaurentPoly LaurentPoly::from_term_strings(const std::map<int, std::string>& terms) {
  LaurentPoly p;
  for (const auto& [k, s] : terms) p.add_term(k, CycNum::parse(s));
  return p;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

std::pair<LaurentPoly, LaurentPoly> poly_divrem(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!a.is_zero() && a.low_degree() < 0) throw std::invalid_argument("poly_divrem needs a polynomial dividend");
  if (b.low_degree() < 0) throw std::invalid_argument("poly_divrem needs a polynomial divisor");
  const int db = b.degree();
  const CycNum lead_inv = b.leading().inverse();
  LaurentPoly quot;
  LaurentPoly rem = a;
  while (!rem.is_zero() && rem.degree() >= db) {
    const int k = rem.degree() - db;
    const CycNum c = rem.leading() * lead_inv;
    LaurentPoly t = LaurentPoly::monomial(k, c);
    quot += t;
    rem -= t * b;
  }
  return {quot, rem};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = poly_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * a.leading().inverse();
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int k = den_.low_degree();
  if (k != 0) {
    den_ = den_.shifted(-k);
    num_ = num_.shifted(-k);
  }
  if (den_.degree() > 0) {
    const int l = num_.low_degree();
    const LaurentPoly g = poly_gcd(num_.shifted(-l), den_);
    if (g.degree() > 0) {
      num_ = poly_divrem(num_.shifted(-l), g).first.shifted(l);
      den_ = poly_divrem(den_, g).first;
    }
  }
  const CycNum lead = den_.leading();
  if (!lead.is_one()) {
    const CycNum inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

LaurentPoly RatFunc::to_laurent() const {
  if (!is_laurent()) throw InvariantViolation("rational function is not a Laurent polynomial: " + str());
  return num_;
}

CycNum RatFunc::at_one() const {
  const CycNum d = den_.at_one();
  if (d.is_zero()) throw DivisionByZero("denominator vanishes at v = 1: " + str());
  return num_.at_one() / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  num_ *= o.num_;
  den_ *= o.den_;
  if (den_.degree() > 0) normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("rational function division by zero");
  if (is_zero()) return *this;
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RatFunc::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned long pow_mod(unsigned long b, unsigned long e, unsigned long m) {
  unsigned long long r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<unsigned long>(r);
}

Rational prime_power(unsigned long p, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(r);
  return Rational(mpz_class(1), r);
}

}  // namespace

CycNum sqrt_prime_cyc(unsigned long p) {
  if (!is_prime(p)) throw UnsupportedSpecialization("sqrt of non-prime " + std::to_string(p));
  if (p == 2) return CycNum::root_of_unity(8, 1) - CycNum::root_of_unity(8, 3);
  // quadratic Gauss sum: sqrt(p) for p = 1 mod 4, i*sqrt(p) for p = 3 mod 4
  std::vector<Rational> c(p);
  for (unsigned long a = 1; a < p; ++a) c[a] = pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
  CycNum g = CycNum::from_powers(static_cast<unsigned>(p), std::move(c));
  if (p % 4 == 1) return g;
  return -CycNum::root_of_unity(4, 1) * g;
}

CycNum QuadraticValue::to_cyc() const {
  if (is_rational()) return rational;
  return rational + sqrt_coeff * sqrt_prime_cyc(p);
}

std::string QuadraticValue::str() const {
  const std::string root = "sqrt(" + std::to_string(p) + ")";
  if (is_rational()) return rational.str();
  std::string b = sqrt_coeff.str();
  if (b.find(' ') != std::string::npos) b = "(" + b + ")";
  std::string tail = b == "1" ? root : (b == "-1" ? "-" + root : b + "*" + root);
  if (rational.is_zero()) return tail;
  return rational.str() + " + " + tail;
}

QuadraticValue laurent_specialize(const LaurentPoly& f, unsigned long p, unsigned fexp) {
  if (!is_prime(p)) throw UnsupportedSpecialization("p = " + std::to_string(p) + " is not prime");
  if (fexp < 1) throw UnsupportedSpecialization("exponent f must be positive");
  QuadraticValue out;
  out.p = p;
  for (const auto& [k, c] : f.terms()) {
    // v^k = sqrt(p)^(k*fexp)
    const long e = static_cast<long>(k) * static_cast<long>(fexp);
    if (e % 2 == 0) {
      out.rational += c * CycNum(prime_power(p, e / 2));
    } else {
      out.sqrt_coeff += c * CycNum(prime_power(p, (e - 1) / 2));
    }
  }
  return out;
}

}  // namespace charkit
