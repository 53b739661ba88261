#include <algorithm>
#include <cmath>
#include <numeric>

#include "charkit/errors.hpp"
#include "charkit/groups.hpp"

namespace charkit {

namespace {

using u64 = unsigned long long;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from(long long x) const {
    long long m = x % static_cast<long long>(p);
    return static_cast<u64>(m < 0 ? m + static_cast<long long>(p) : m);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(const Field& f) {
  std::vector<u64> factors;
  u64 m = f.p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : factors) ok = ok && f.pow(g, (f.p - 1) / q) != 1;
    if (ok) return g;
  }
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(const Field& f, Mat& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = f.inv(a[r][c]);
    for (size_t j = c; j < cols; ++j) a[r][j] = f.mul(a[r][j], inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 m = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

/// Basis of the kernel of a square matrix.
std::vector<Vec> kernel(const Field& f, Mat a) {
  const size_t n = a.size();
  std::vector<size_t> piv = rref(f, a);
  std::vector<bool> is_piv(n, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.sub(0, a[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Characteristic polynomial via Hessenberg reduction, lowest degree first.
Vec char_poly(const Field& f, Mat h) {
  const size_t n = h.size();
  for (size_t k = 0; k + 2 < n; ++k) {
    size_t piv = k + 1;
    while (piv < n && h[piv][k] == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      std::swap(h[piv], h[k + 1]);
      for (size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
    }
    const u64 inv = f.inv(h[k + 1][k]);
    for (size_t i = k + 2; i < n; ++i) {
      const u64 m = f.mul(h[i][k], inv);
      if (m == 0) continue;
      for (size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(m, h[k + 1][j]));
      for (size_t j = 0; j < n; ++j) h[j][k + 1] = f.add(h[j][k + 1], f.mul(m, h[j][i]));
    }
  }
  // p_m(x) = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<Vec> polys{Vec{1}};
  for (size_t m = 0; m < n; ++m) {
    Vec next(m + 2, 0);
    const Vec& prev = polys[m];
    for (size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], prev[d]);
      next[d] = f.sub(next[d], f.mul(h[m][m], prev[d]));
    }
    u64 prod = 1;
    for (size_t i = m; i-- > 0;) {
      prod = f.mul(prod, h[i + 1][i]);
      if (prod == 0) break;
      const u64 coef = f.mul(h[i][m], prod);
      for (size_t d = 0; d < polys[i].size(); ++d) next[d] = f.sub(next[d], f.mul(coef, polys[i][d]));
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

std::vector<u64> roots_of(const Field& f, const Vec& poly) {
  std::vector<u64> roots;
  for (u64 x = 0; x < f.p; ++x) {
    u64 acc = 0;
    for (size_t d = poly.size(); d-- > 0;) acc = f.add(f.mul(acc, x), poly[d]);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

struct Attempt {
  bool ok = false;
  std::vector<std::vector<CycNum>> rows;
};

Attempt try_prime(const ClassStructure& cs, unsigned exponent, u64 p,
                  std::vector<std::vector<std::vector<long long>>>& matrix_cache) {
  const Field f{p};
  const size_t r = cs.class_sizes.size();
  // subspaces stored as RREF row bases
  std::vector<Mat> spaces;
  {
    Mat id(r, Vec(r, 0));
    for (size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  auto all_split = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; });
  };
  for (size_t i = 1; i < r && !all_split(); ++i) {
    if (matrix_cache[i].empty()) matrix_cache[i] = cs.class_matrix(static_cast<int>(i));
    Mat m(r, Vec(r));
    for (size_t a = 0; a < r; ++a)
      for (size_t b = 0; b < r; ++b) m[a][b] = f.from(matrix_cache[i][a][b]);
    std::vector<Mat> next;
    for (Mat& basis : spaces) {
      const size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      Mat work = basis;
      std::vector<size_t> piv = rref(f, work);
      basis = work;
      // restriction X with M b_s = sum_t X[t][s] b_t; read off at pivot coordinates
      std::vector<Vec> images(d, Vec(r, 0));
      for (size_t s = 0; s < d; ++s)
        for (size_t a = 0; a < r; ++a) {
          u64 acc = 0;
          for (size_t b = 0; b < r; ++b)
            if (basis[s][b]) acc = f.add(acc, f.mul(m[a][b], basis[s][b]));
          images[s][a] = acc;
        }
      Mat x(d, Vec(d));
      for (size_t t = 0; t < d; ++t)
        for (size_t s = 0; s < d; ++s) x[t][s] = images[s][piv[t]];
      std::vector<u64> eig = roots_of(f, char_poly(f, x));
      size_t total = 0;
      for (u64 lam : eig) {
        Mat shifted = x;
        for (size_t t = 0; t < d; ++t) shifted[t][t] = f.sub(shifted[t][t], lam);
        Mat sub;
        for (const Vec& y : kernel(f, shifted)) {
          Vec v(r, 0);
          for (size_t s = 0; s < d; ++s)
            if (y[s])
              for (size_t a = 0; a < r; ++a) v[a] = f.add(v[a], f.mul(y[s], basis[s][a]));
          sub.push_back(std::move(v));
        }
        total += sub.size();
        rref(f, sub);
        next.push_back(std::move(sub));
      }
      if (total != d) return {};  // not diagonalizable here: bad prime
    }
    spaces = std::move(next);
  }
  if (!all_split() || spaces.size() != r) return {};

  const u64 z = f.pow(primitive_root(f), (p - 1) / exponent);
  const u64 order_g = cs.group_order % p;
  Attempt out;
  for (const Mat& s : spaces) {
    Vec w = s[0];
    if (w[0] == 0) return {};
    const u64 inv0 = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, inv0);
    // chi(1)^2 = |G| / sum_k w_k w_k' / |C_k|
    u64 sum = 0;
    for (size_t k = 0; k < r; ++k)
      sum = f.add(sum, f.mul(f.mul(w[k], w[cs.inverse_class[k]]), f.inv(cs.class_sizes[k] % p)));
    if (sum == 0) return {};
    const u64 deg_sq = f.mul(order_g, f.inv(sum));
    u64 deg = 0;
    const u64 bound = static_cast<u64>(std::sqrt(static_cast<double>(cs.group_order))) + 1;
    for (u64 d = 1; d <= bound; ++d)
      if (d * d % p == deg_sq && cs.group_order % d == 0) {
        deg = d;
        break;
      }
    if (deg == 0) return {};
    Vec chi(r);
    for (size_t k = 0; k < r; ++k) chi[k] = f.mul(f.mul(w[k], deg), f.inv(cs.class_sizes[k] % p));
    std::vector<CycNum> row(r);
    for (size_t k = 0; k < r; ++k) {
      const unsigned o = static_cast<unsigned>(cs.element_orders[k]);
      const u64 zk = f.pow(z, exponent / o);
      Vec vals(o);
      for (unsigned j = 0; j < o; ++j) vals[j] = chi[cs.power_class(static_cast<int>(k), static_cast<int>(j))];
      // multiplicity of each eigenvalue zeta_o^l of the representing matrix
      std::vector<Rational> mult(o);
      const u64 inv_o = f.inv(o);
      for (unsigned l = 0; l < o; ++l) {
        u64 acc = 0;
        const u64 step = f.inv(f.pow(zk, l));
        u64 t = 1;
        for (unsigned j = 0; j < o; ++j) {
          acc = f.add(acc, f.mul(vals[j], t));
          t = f.mul(t, step);
        }
        acc = f.mul(acc, inv_o);
        if (acc > deg) return {};
        mult[l] = static_cast<long>(acc);
      }
      row[k] = CycNum::from_powers(o, std::move(mult));
    }
    if (row[0] != CycNum(static_cast<long>(deg))) return {};
    out.rows.push_back(std::move(row));
  }
  out.ok = true;
  return out;
}

}  // namespace

CharTable dixon_schneider(const ClassStructure& cs, unsigned exponent) {
  const size_t r = cs.class_sizes.size();
  if (r == 0 || cs.class_sizes[0] != 1) throw std::invalid_argument("class 0 must be the identity class");
  const double root = std::sqrt(static_cast<double>(cs.group_order));
  u64 bound = std::max<u64>(100, static_cast<u64>(2 * root) + 1);
  std::vector<std::vector<std::vector<long long>>> cache(r);
  CharTable t;
  t.group_order = cs.group_order;
  t.class_sizes = cs.class_sizes;
  t.inverse_class = cs.inverse_class;
  u64 p = (bound / exponent + 1) * exponent + 1;
  for (int attempts = 0; attempts < 64; p += exponent) {
    if (!is_prime(p) || cs.group_order % p == 0) continue;
    ++attempts;
    Attempt a = try_prime(cs, exponent, p, cache);
    if (!a.ok) continue;
    t.table = std::move(a.rows);
    std::sort(t.table.begin(), t.table.end(), [](const auto& x, const auto& y) {
      const bool tx = std::all_of(x.begin(), x.end(), [](const CycNum& c) { return c.is_one(); });
      const bool ty = std::all_of(y.begin(), y.end(), [](const CycNum& c) { return c.is_one(); });
      if (tx != ty) return tx;
      const Rational dx = x[0].rational(), dy = y[0].rational();
      if (dx != dy) return dx < dy;
      for (size_t k = 0; k < x.size(); ++k) {
        auto c = compare(x[k], y[k]);
        if (c != 0) return c < 0;
      }
      return false;
    });
    return t;
  }
  throw InvariantViolation("Dixon-Schneider failed to split the class algebra");
}

}  // namespace charkit
