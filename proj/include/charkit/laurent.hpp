#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "charkit/cyclotomic.hpp"

namespace charkit {

/// Laurent polynomial in v with cyclotomic coefficients; q = v^2.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const CycNum& c);  // NOLINT: constants embed implicitly
  LaurentPoly(int c) : LaurentPoly(CycNum(c)) {}  // NOLINT

  /// c * v^k.
  static LaurentPoly monomial(int k, const CycNum& c = CycNum(1));
  static LaurentPoly v(int k = 1) { return monomial(k); }
  static LaurentPoly q(int k = 1) { return monomial(2 * k); }

  const std::map<int, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of v^k (zero if absent).
  CycNum coeff(int k) const;
  /// Highest and lowest exponents; the polynomial must be nonzero.
  int degree() const;
  int low_degree() const;
  CycNum leading() const { return terms_.rbegin()->second; }

  /// The ring map v -> 1.
  CycNum at_one() const;
  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;
  /// Applies cyc_conj to every coefficient (v is fixed).
  LaurentPoly conj_coeffs() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const CycNum& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const CycNum& c) { return a *= c; }
  friend LaurentPoly operator*(const CycNum& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(LaurentPoly a, int c) { return a *= CycNum(c); }
  friend LaurentPoly operator*(int c, LaurentPoly a) { return a *= CycNum(c); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// "c*v^k + ..." by descending exponent; "0" for zero.
  std::string str() const;

  /// Exponent -> canonical coefficient string.
  std::map<int, std::string> to_term_strings() const;
  static LaurentPoly from_term_strings(const std::map<int, std::string>& terms);

 private:
  void add_term(int k, const CycNum& c);
  std::map<int, CycNum> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Polynomial division in v over the cyclotomic coefficient field.
/// Both arguments are treated as ordinary polynomials (low_degree >= 0).
std::pair<LaurentPoly, LaurentPoly> poly_divrem(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd of two polynomials (low_degree >= 0); gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

/// Quotient of Laurent polynomials in lowest terms. The denominator is kept
/// monic with nonzero constant term, which makes the representation unique.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(int c) : num_(c), den_(1) {}                 // NOLINT
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly(1); }
  /// Throws InvariantViolation unless is_laurent().
  LaurentPoly to_laurent() const;
  /// The ring map v -> 1; throws DivisionByZero if the denominator vanishes there.
  CycNum at_one() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string str() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

/// a + b*sqrt(p), with a and b cyclotomic.
struct QuadraticValue {
  CycNum rational;
  CycNum sqrt_coeff;
  unsigned long p = 2;

  bool is_rational() const { return sqrt_coeff.is_zero(); }
  /// The same number inside a cyclotomic field (sqrt(p) via a Gauss sum).
  CycNum to_cyc() const;
  std::string str() const;
  friend bool operator==(const QuadraticValue& a, const QuadraticValue& b) {
    return a.p == b.p && a.rational == b.rational && a.sqrt_coeff == b.sqrt_coeff;
  }
};

/// sqrt(p) as an element of Q(z_m) with m = 8 (p = 2), p (p = 1 mod 4) or 4p.
CycNum sqrt_prime_cyc(unsigned long p);

/// Substitutes v -> sqrt(q) with q = p^fexp, sqrt(q) = sqrt(p)^fexp taken positive.
/// Throws UnsupportedSpecialization unless p is prime and fexp >= 1.
QuadraticValue laurent_specialize(const LaurentPoly& f, unsigned long p, unsigned fexp);

}  // namespace charkit
