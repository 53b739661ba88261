#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace charkit {

using Rational = mpq_class;

/// Euler totient.
unsigned euler_phi(unsigned m);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(unsigned m);

/// Element of the cyclotomic field Q(z_m), stored in the power basis
/// 1, z, ..., z^(phi(m)-1) modulo the m-th cyclotomic polynomial.
///
/// Values of different orders are lifted to the lcm order before combining.
/// Equality is exact and independent of the order each operand is stored at.
class CycNum {
 public:
  CycNum() : order_(1), coeffs_(1) {}
  CycNum(const Rational& r) : order_(1), coeffs_{r} { coeffs_[0].canonicalize(); }  // NOLINT: implicit scalar
  CycNum(long r) : order_(1), coeffs_{Rational(r)} {}   // NOLINT
  CycNum(int r) : CycNum(static_cast<long>(r)) {}       // NOLINT

  /// z_m^k for any integer k.
  static CycNum root_of_unity(unsigned m, long k = 1);

  /// Reduces an arbitrary-length power-basis vector sum_k c[k] z_m^k.
  static CycNum from_powers(unsigned m, std::vector<Rational> c);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational() const;

  /// Same value stored at order n, which must be a multiple of order().
  CycNum lifted(unsigned n) const;
  /// Same value stored at the smallest order whose field contains it.
  CycNum normalized() const;

  /// Image under z -> z^a for gcd(a, order) = 1.
  CycNum galois(long a) const;
  /// Complex conjugation: every root of unity goes to its inverse.
  CycNum conj() const { return galois(-1); }
  /// Throws DivisionByZero on zero.
  CycNum inverse() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Deterministic total order (not a field order); used for canonical sorting.
  friend std::strong_ordering compare(const CycNum& a, const CycNum& b);

  /// Canonical text: "a0 + a1*z4 + a2*z4^2", at the minimal order.
  std::string str() const;
  /// Parses the canonical text form (also accepts "zm^k" with any k >= 0).
  static CycNum parse(std::string_view text);

 private:
  CycNum(unsigned m, std::vector<Rational> reduced) : order_(m), coeffs_(std::move(reduced)) {}
  static void reduce_in_place(unsigned m, std::vector<Rational>& c);

  unsigned order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

/// Canonical rendering of a rational ("3/2", "-1", "0").
std::string rational_str(const Rational& r);

}  // namespace charkit
