#include "charkit/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

#include "charkit/errors.hpp"

namespace charkit {

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long long> poly_exact_div(std::vector<long long> num, const std::vector<long long>& den) {
  // den is monic
  const size_t dn = den.size();
  std::vector<long long> quot(num.size() - dn + 1, 0);
  for (size_t k = quot.size(); k-- > 0;) {
    const long long c = num[k + dn - 1];
    quot[k] = c;
    if (c != 0) {
      for (size_t j = 0; j < dn; ++j) num[k + j] -= c * den[j];
    }
  }
  return quot;
}

std::vector<long long> compute_cyclotomic(unsigned m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m
  std::vector<long long> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_exact_div(p, cyclotomic_polynomial(d));
  }
  return p;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<long long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<long long> p = m == 1 ? std::vector<long long>{-1, 1} : compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(p)).first->second;
}

void CycNum::reduce_in_place(unsigned m, std::vector<Rational>& c) {
  const auto& phi = cyclotomic_polynomial(m);
  const size_t deg = phi.size() - 1;
  // z^m = 1 first, so the polynomial division below stays short
  if (c.size() > m) {
    for (size_t k = m; k < c.size(); ++k) c[k % m] += c[k];
    c.resize(m);
  }
  for (size_t i = c.size(); i-- > deg;) {
    if (sgn(c[i]) == 0) continue;
    Rational lead = c[i];
    for (size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) c[i - deg + j] -= lead * static_cast<long>(phi[j]);
    }
    c[i] = 0;
  }
  c.resize(deg);
}

CycNum CycNum::from_powers(unsigned m, std::vector<Rational> c) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  if (c.empty()) c.resize(1);
  reduce_in_place(m, c);
  return CycNum(m, std::move(c));
}

CycNum CycNum::root_of_unity(unsigned m, long k) {
  long r = k % static_cast<long>(m);
  if (r < 0) r += m;
  std::vector<Rational> c(static_cast<size_t>(r) + 1);
  c[r] = 1;
  return from_powers(m, std::move(c));
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational CycNum::rational() const {
  if (!is_rational()) throw std::logic_error("cyclotomic value is not rational: " + str());
  return coeffs_[0];
}

CycNum CycNum::lifted(unsigned n) const {
  if (n == order_) return *this;
  if (n % order_ != 0) throw std::logic_error("cannot lift cyclotomic value to a non-multiple order");
  const unsigned step = n / order_;
  std::vector<Rational> c(step * (coeffs_.size() - 1) + 1);
  for (size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
  return from_powers(n, std::move(c));
}

namespace {

// Solves the linear system A x = b over Q; returns false if inconsistent.
// A is rows x cols, stored row-major.
bool solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) return false;
  x.assign(cols, Rational(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return true;
}

}  // namespace

CycNum CycNum::normalized() const {
  if (order_ == 1) return *this;
  if (is_rational()) return CycNum(coeffs_[0]);
  for (unsigned d = 1; d < order_; ++d) {
    if (order_ % d != 0) continue;
    if (d % 4 == 2) continue;  // Q(z_d) = Q(z_{d/2}) for d = 2 mod 4
    const unsigned phid = euler_phi(d);
    const size_t n = coeffs_.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(phid));
    for (unsigned j = 0; j < phid; ++j) {
      CycNum basis = root_of_unity(d, j).lifted(order_);
      for (size_t i = 0; i < n; ++i) a[i][j] = basis.coeffs_[i];
    }
    std::vector<Rational> x;
    if (solve_rational(a, coeffs_, x)) return CycNum(d, std::move(x));
  }
  return *this;
}

CycNum CycNum::galois(long a) const {
  const long m = order_;
  long am = a % m;
  if (am < 0) am += m;
  if (std::gcd(am, m) != 1 && m > 1) throw std::invalid_argument("galois exponent not coprime to order");
  std::vector<Rational> c(m);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    c[(static_cast<long>(k) * am) % m] += coeffs_[k];
  }
  return from_powers(order_, std::move(c));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic value");
  if (order_ == 1) return CycNum(Rational(1) / coeffs_[0]);
  // columns of the multiplication-by-this matrix are this * z^j
  const size_t n = coeffs_.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (size_t j = 0; j < n; ++j) {
    CycNum col = *this * root_of_unity(order_, static_cast<long>(j));
    for (size_t i = 0; i < n; ++i) a[i][j] = col.coeffs_[i];
  }
  std::vector<Rational> e(n);
  e[0] = 1;
  std::vector<Rational> x;
  if (!solve_rational(a, e, x)) throw DivisionByZero("singular cyclotomic multiplication matrix");
  return CycNum(order_, std::move(x));
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.order_ == order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  const unsigned n = lcm_u(order_, o.order_);
  CycNum a = lifted(n);
  CycNum b = o.lifted(n);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return *this = std::move(a);
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (order_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const unsigned n = lcm_u(order_, o.order_);
  const CycNum a = lifted(n);
  const CycNum b = o.lifted(n);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return *this = from_powers(n, std::move(prod));
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const unsigned n = lcm_u(a.order_, b.order_);
  return a.lifted(n).coeffs_ == b.lifted(n).coeffs_;
}

std::strong_ordering compare(const CycNum& a, const CycNum& b) {
  const CycNum x = a.normalized();
  const CycNum y = b.normalized();
  if (x.order() != y.order()) return x.order() <=> y.order();
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    int c = cmp(x.coeffs()[i], y.coeffs()[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::string CycNum::str() const {
  const CycNum n = normalized();
  std::string out;
  bool first = true;
  for (size_t k = 0; k < n.coeffs_.size(); ++k) {
    const Rational& c = n.coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += rational_str(mag);
      continue;
    }
    if (mag != 1) out += rational_str(mag) + "*";
    out += "z" + std::to_string(n.order_);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return first ? "0" : out;
}

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse cyclotomic '" + std::string(s) + "': " + why);
  }
  unsigned long number() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected digits");
    return std::stoul(std::string(s.substr(start, i - start)));
  }
};

}  // namespace

CycNum CycNum::parse(std::string_view text) {
  Cursor cur{text};
  CycNum total;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    cur.skip();
    if (cur.s[cur.i] == '+' || cur.s[cur.i] == '-') {
      if (cur.s[cur.i] == '-') sign = -1;
      ++cur.i;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    cur.skip();
    Rational coeff = 1;
    if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
      mpz_class num(std::to_string(cur.number()));
      mpz_class den = 1;
      cur.skip();
      if (cur.i < cur.s.size() && cur.s[cur.i] == '/') {
        ++cur.i;
        den = mpz_class(std::to_string(cur.number()));
        if (den == 0) cur.fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      cur.skip();
      if (cur.i < cur.s.size() && cur.s[cur.i] == '*') {
        ++cur.i;
      } else {
        total += CycNum(Rational(sign * coeff));
        continue;
      }
    }
    cur.skip();
    if (cur.i >= cur.s.size() || cur.s[cur.i] != 'z') cur.fail("expected root of unity 'zm'");
    ++cur.i;
    unsigned m = static_cast<unsigned>(cur.number());
    if (m == 0) cur.fail("order must be positive");
    long k = 1;
    cur.skip();
    if (cur.i < cur.s.size() && cur.s[cur.i] == '^') {
      ++cur.i;
      k = static_cast<long>(cur.number());
    }
    total += root_of_unity(m, k) * CycNum(Rational(sign * coeff));
  }
  if (first) cur.fail("empty input");
  return total;
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.str(); }

}  // namespace charkit
