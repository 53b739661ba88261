#include "charkit/sandbox.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "charkit/coxeter.hpp"
#include "charkit/hecke.hpp"
#include "json.hpp"

namespace charkit {

FiniteField::FiniteField(int q) : q_(q) {
  if (q != 2 && q != 3 && q != 4) throw UnsupportedSpecialization("field size " + std::to_string(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (q == 4) {
        add_[a][b] = static_cast<uint8_t>(a ^ b);
        // carry-less product reduced by x^2 = x + 1
        int p = 0;
        for (int i = 0; i < 2; ++i)
          if (b >> i & 1) p ^= a << i;
        if (p & 4) p ^= 0b111;
        mul_[a][b] = static_cast<uint8_t>(p);
      } else {
        add_[a][b] = static_cast<uint8_t>((a + b) % q);
        mul_[a][b] = static_cast<uint8_t>((a * b) % q);
      }
    }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (add_[a][b] == 0) neg_[a] = static_cast<uint8_t>(b);
      if (mul_[a][b] == 1) inv_[a] = static_cast<uint8_t>(b);
    }
}

std::vector<int> SnPerm::reduced_word() const {
  std::vector<int> p = images, word;
  for (bool again = true; again;) {
    again = false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(static_cast<int>(i));
        again = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string SnPerm::str() const {
  std::string s = "[";
  for (size_t i = 0; i < images.size(); ++i) s += (i ? "," : "") + std::to_string(images[i] + 1);
  return s + "]";
}

namespace {

size_t ipow(size_t b, int e) {
  size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<std::vector<int>> partitions_desc(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = std::min(n, max_part); p >= 1; --p)
    for (auto rest : partitions_desc(n - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(std::move(rest));
    }
  return out;
}

}  // namespace

uint32_t LieGroupSandbox::code(const SmallMat& m) const {
  uint32_t c = 0;
  for (int i = n_ * n_ - 1; i >= 0; --i) c = c * static_cast<uint32_t>(q()) + m[i];
  return c;
}

SmallMat LieGroupSandbox::mat_mul(const SmallMat& a, const SmallMat& b) const {
  SmallMat c{};
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      uint8_t s = 0;
      for (int k = 0; k < n_; ++k) s = field_.add(s, field_.mul(a[i * n_ + k], b[k * n_ + j]));
      c[i * n_ + j] = s;
    }
  return c;
}

SmallMat LieGroupSandbox::invert(const SmallMat& m) const {
  SmallMat a = m, b{};
  for (int i = 0; i < n_; ++i) b[i * n_ + i] = 1;
  for (int c = 0; c < n_; ++c) {
    int piv = c;
    while (!a[piv * n_ + c]) ++piv;
    for (int k = 0; k < n_; ++k) {
      std::swap(a[c * n_ + k], a[piv * n_ + k]);
      std::swap(b[c * n_ + k], b[piv * n_ + k]);
    }
    const uint8_t inv = field_.inv(a[c * n_ + c]);
    for (int k = 0; k < n_; ++k) {
      a[c * n_ + k] = field_.mul(inv, a[c * n_ + k]);
      b[c * n_ + k] = field_.mul(inv, b[c * n_ + k]);
    }
    for (int i = 0; i < n_; ++i) {
      if (i == c || !a[i * n_ + c]) continue;
      const uint8_t f = a[i * n_ + c];
      for (int k = 0; k < n_; ++k) {
        a[i * n_ + k] = field_.sub(a[i * n_ + k], field_.mul(f, a[c * n_ + k]));
        b[i * n_ + k] = field_.sub(b[i * n_ + k], field_.mul(f, b[c * n_ + k]));
      }
    }
  }
  return b;
}

int LieGroupSandbox::rank(const SmallMat& m, int row0, int col1) const {
  std::vector<std::vector<uint8_t>> rows;
  for (int i = row0; i < n_; ++i) rows.emplace_back(m.begin() + i * n_, m.begin() + i * n_ + col1);
  int r = 0;
  for (int c = 0; c < col1 && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const uint8_t inv = field_.inv(rows[r][c]);
    for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
      const uint8_t f = field_.mul(rows[i][c], inv);
      for (int k = c; k < col1; ++k) rows[i][k] = field_.sub(rows[i][k], field_.mul(f, rows[r][k]));
    }
    ++r;
  }
  return r;
}

// g in B w B iff rank of rows >= i, columns < j equals that of the permutation matrix.
int LieGroupSandbox::bruhat(const SmallMat& m) const {
  std::vector<std::vector<int>> r(n_ + 1, std::vector<int>(n_ + 1, 0));
  for (int i = 0; i < n_; ++i)
    for (int j = 1; j <= n_; ++j) r[i][j] = rank(m, i, j);
  SnPerm w;
  w.images.assign(n_, -1);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      if (r[i][j + 1] - r[i][j] - r[i + 1][j + 1] + r[i + 1][j] == 1) w.images[j] = i;
  return weyl_index(w);
}

LieGroupSandbox::LieGroupSandbox(int n, int q) : n_(n), field_(q) {
  if (n < 2) throw UnsupportedSpecialization("sandbox rank must be at least 2");
  // S_n by length
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    SnPerm w{p, 0};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) w.length += p[i] > p[j];
    weyl_.push_back(w);
  } while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(weyl_.begin(), weyl_.end(), [](const SnPerm& a, const SnPerm& b) { return a.length < b.length; });

  const size_t space = ipow(q, n * n);
  index_.assign(space, -1);
  for (size_t c = 0; c < space; ++c) {
    SmallMat m{};
    size_t x = c;
    for (int k = 0; k < n * n; ++k) {
      m[k] = static_cast<uint8_t>(x % q);
      x /= q;
    }
    if (rank(m, 0, n) != n) continue;
    index_[c] = static_cast<int32_t>(elements_.size());
    elements_.push_back(m);
  }
  SmallMat one{};
  for (int i = 0; i < n; ++i) one[i * n + i] = 1;
  identity_ = index_of(one);

  inverse_.resize(order());
  for (size_t a = 0; a < order(); ++a) inverse_[a] = index_of(invert(elements_[a]));

  for (size_t g = 0; g < order(); ++g) {
    const SmallMat& m = elements_[g];
    bool upper = true, diag = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i > j && m[i * n + j]) upper = false;
        if (i != j && m[i * n + j]) diag = false;
      }
    if (upper) borel_.push_back(static_cast<int>(g));
    if (diag) torus_.push_back(static_cast<int>(g));
  }
  for (const SnPerm& w : weyl_) {
    SmallMat m{};
    for (int j = 0; j < n; ++j) m[w.images[j] * n + j] = 1;
    weyl_reps_.push_back(index_of(m));
  }
  cell_.resize(order());
  cell_sizes_.assign(weyl_.size(), 0);
  for (size_t g = 0; g < order(); ++g) {
    cell_[g] = bruhat(elements_[g]);
    ++cell_sizes_[cell_[g]];
  }

  for (const auto& type : partitions_desc(n, n)) {
    SmallMat m = one;
    int pos = 0;
    for (int part : type) {
      for (int k = 0; k + 1 < part; ++k) m[(pos + k) * n + pos + k + 1] = 1;
      pos += part;
    }
    unipotent_types_.push_back(type);
    unipotent_reps_.push_back(index_of(m));
  }

  // subspaces as masks over vector codes
  const size_t nv = ipow(q, n);
  auto vec_add = [&](size_t a, size_t b) {
    size_t c = 0, f = 1;
    for (int k = 0; k < n; ++k, a /= q, b /= q, f *= q) c += f * field_.add(static_cast<uint8_t>(a % q), static_cast<uint8_t>(b % q));
    return c;
  };
  auto vec_scale = [&](uint8_t s, size_t a) {
    size_t c = 0, f = 1;
    for (int k = 0; k < n; ++k, a /= q, f *= q) c += f * field_.mul(s, static_cast<uint8_t>(a % q));
    return c;
  };
  subspaces_.assign(n + 1, {});
  subspaces_[0] = {1};
  for (int d = 1; d <= n; ++d) {
    std::set<uint64_t> found;
    for (uint64_t base : subspaces_[d - 1])
      for (size_t v = 1; v < nv; ++v) {
        if (base >> v & 1) continue;
        uint64_t span = base;
        for (size_t u = 0; u < nv; ++u)
          if (base >> u & 1)
            for (int s = 1; s < q; ++s) span |= uint64_t{1} << vec_add(u, vec_scale(static_cast<uint8_t>(s), v));
        found.insert(span);
      }
    subspaces_[d].assign(found.begin(), found.end());
  }

  // complete flags through the column spans of each element
  std::map<std::vector<uint64_t>, int> flags;
  for (size_t g = 0; g < order(); ++g) {
    std::vector<uint64_t> key;
    uint64_t span = 1;
    for (int j = 0; j + 1 < n; ++j) {
      size_t col = 0, f = 1;
      for (int i = 0; i < n; ++i, f *= q) col += f * elements_[g][i * n + j];
      uint64_t next = span;
      for (size_t u = 0; u < nv; ++u)
        if (span >> u & 1)
          for (int s = 1; s < q; ++s) next |= uint64_t{1} << vec_add(u, vec_scale(static_cast<uint8_t>(s), col));
      span = next;
      key.push_back(span);
    }
    if (flags.emplace(key, static_cast<int>(g)).second) flag_reps_.push_back(static_cast<int>(g));
  }

  // structural invariants
  size_t g_order = 1;
  for (int i = 0; i < n; ++i) g_order *= nv - ipow(q, i);
  const size_t b_order = ipow(q - 1, n) * ipow(q, n * (n - 1) / 2);
  if (order() != g_order) throw InvariantViolation("|GL_n(q)| mismatch");
  if (borel_.size() != b_order) throw InvariantViolation("|B| mismatch");
  if (flag_reps_.size() * b_order != g_order) throw InvariantViolation("|G/B| mismatch");
  size_t total = 0;
  for (size_t w = 0; w < weyl_.size(); ++w) {
    if (cell_sizes_[w] != b_order * ipow(q, weyl_[w].length))
      throw InvariantViolation("cell " + weyl_[w].str() + " has " + std::to_string(cell_sizes_[w]) + " elements");
    total += cell_sizes_[w];
  }
  if (total != g_order) throw InvariantViolation("cells do not partition G");
}

int LieGroupSandbox::index_of(const SmallMat& m) const { return index_[code(m)]; }

int LieGroupSandbox::multiply(int a, int b) const { return index_[code(mat_mul(elements_[a], elements_[b]))]; }

int LieGroupSandbox::weyl_index(const SnPerm& w) const {
  for (size_t i = 0; i < weyl_.size(); ++i)
    if (weyl_[i].images == w.images) return static_cast<int>(i);
  throw IndexOutOfRange("not a permutation of degree " + std::to_string(n_));
}

int LieGroupSandbox::weyl_multiply(int a, int b) const {
  SnPerm c;
  for (int j = 0; j < n_; ++j) c.images.push_back(weyl_[a].images[weyl_[b].images[j]]);
  return weyl_index(c);
}

bool LieGroupSandbox::is_unipotent(int g) const {
  SmallMat u = elements_[g];
  for (int i = 0; i < n_; ++i) u[i * n_ + i] = field_.sub(u[i * n_ + i], 1);
  SmallMat p = u;
  for (int k = 1; k < n_; ++k) p = mat_mul(p, u);
  return std::all_of(p.begin(), p.end(), [](uint8_t x) { return x == 0; });
}

uint64_t LieGroupSandbox::image_mask(const SmallMat& g, uint64_t mask) const {
  const int q = this->q();
  uint64_t out = 0;
  while (mask) {
    size_t v = static_cast<size_t>(std::countr_zero(mask));
    mask &= mask - 1;
    std::vector<uint8_t> x(n_);
    for (int k = 0; k < n_; ++k, v /= q) x[k] = static_cast<uint8_t>(v % q);
    size_t img = 0, f = 1;
    for (int i = 0; i < n_; ++i, f *= q) {
      uint8_t s = 0;
      for (int k = 0; k < n_; ++k) s = field_.add(s, field_.mul(g[i * n_ + k], x[k]));
      img += f * s;
    }
    out |= uint64_t{1} << img;
  }
  return out;
}

long LieGroupSandbox::fixed_partial_flags(int g, const std::vector<int>& dims) const {
  std::vector<std::vector<uint64_t>> fixed;
  for (int d : dims) {
    if (d <= 0 || d >= n_) throw IndexOutOfRange("flag dimension " + std::to_string(d));
    std::vector<uint64_t> f;
    for (uint64_t s : subspaces_[d])
      if (image_mask(elements_[g], s) == s) f.push_back(s);
    fixed.push_back(std::move(f));
  }
  std::function<long(size_t, uint64_t)> count = [&](size_t k, uint64_t below) -> long {
    if (k == fixed.size()) return 1;
    long c = 0;
    for (uint64_t s : fixed[k])
      if ((s & below) == below) c += count(k + 1, s);
    return c;
  };
  return count(0, 1);
}

LieGroupSandbox build_sandbox(int n, int q) {
  if (n > 3 || q > 4) throw SizeCapExceeded("sandboxes are limited to n <= 3, q <= 4");
  return LieGroupSandbox(n, q);
}

bool are_conjugate(const LieGroupSandbox& sb, int a, int b) {
  for (size_t x = 0; x < sb.order(); ++x) {
    const int xi = static_cast<int>(x);
    if (sb.multiply(xi, a) == sb.multiply(b, xi)) return true;
  }
  return false;
}

std::string SandboxReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["n"] = n;
  j["q"] = q;
  j["cases"] = cases;
  j["failures"] = failures;
  return j.dump();
}

std::set<int> cell_product(const LieGroupSandbox& sb, const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  for (int w : a)
    for (int t : b)
      for (int x : sb.borel()) out.insert(sb.cell_label(sb.multiply(sb.multiply(sb.weyl_reps()[w], x), sb.weyl_reps()[t])));
  return out;
}

namespace {

void all_reduced_words(const SnPerm& w, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
  if (w.length == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (size_t i = 0; i + 1 < w.images.size(); ++i)
    if (w.images[i] > w.images[i + 1]) {
      SnPerm shorter = w;
      std::swap(shorter.images[i], shorter.images[i + 1]);
      --shorter.length;
      suffix.push_back(static_cast<int>(i));
      all_reduced_words(shorter, suffix, out);
      suffix.pop_back();
    }
}

std::string word_str(const std::vector<int>& word) {
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s.empty() ? "e" : s;
}

SnPerm simple_transposition(int n, int i) {
  SnPerm s;
  s.images.resize(n);
  std::iota(s.images.begin(), s.images.end(), 0);
  std::swap(s.images[i], s.images[i + 1]);
  s.length = 1;
  return s;
}

}  // namespace

SandboxReport verify_cell_products(const LieGroupSandbox& sb) {
  SandboxReport rep{"cell_products", sb.n(), sb.q(), 0, {}};
  for (size_t w = 0; w < sb.weyl().size(); ++w) {
    std::vector<std::vector<int>> words;
    std::vector<int> suffix;
    all_reduced_words(sb.weyl()[w], suffix, words);
    for (const auto& word : words) {
      ++rep.cases;
      std::set<int> cells{0};
      for (int i : word) cells = cell_product(sb, cells, {sb.weyl_index(simple_transposition(sb.n(), i))});
      if (cells != std::set<int>{static_cast<int>(w)})
        rep.failures.push_back("product of cells along " + word_str(word) + " is not B" + sb.weyl()[w].str() + "B");
    }
  }
  return rep;
}

namespace {

std::vector<std::vector<int>> relative_positions(const LieGroupSandbox& sb) {
  const auto& reps = sb.flag_reps();
  std::vector<std::vector<int>> pos(reps.size(), std::vector<int>(reps.size()));
  for (size_t x = 0; x < reps.size(); ++x)
    for (size_t y = 0; y < reps.size(); ++y) pos[x][y] = sb.cell_label(sb.multiply(sb.inverse(reps[x]), reps[y]));
  return pos;
}

IntMatrix64 operator_from(const std::vector<std::vector<int>>& pos, int w) {
  IntMatrix64 m(pos.size(), std::vector<long long>(pos.size(), 0));
  for (size_t x = 0; x < pos.size(); ++x)
    for (size_t y = 0; y < pos.size(); ++y) m[x][y] = pos[x][y] == w;
  return m;
}

IntMatrix64 mul64(const IntMatrix64& a, const IntMatrix64& b) {
  const size_t n = a.size();
  IntMatrix64 c(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix64 lincomb(long long a, const IntMatrix64& x, long long b, const IntMatrix64& y) {
  IntMatrix64 c = x;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) c[i][j] = a * x[i][j] + b * y[i][j];
  return c;
}

}  // namespace

IntMatrix64 convolution_operator(const LieGroupSandbox& sb, int w) { return operator_from(relative_positions(sb), w); }

SandboxReport convolution_hecke_check(const LieGroupSandbox& sb) {
  SandboxReport rep{"convolution_hecke", sb.n(), sb.q(), 0, {}};
  const auto pos = relative_positions(sb);
  std::vector<IntMatrix64> t;
  for (size_t w = 0; w < sb.weyl().size(); ++w) t.push_back(operator_from(pos, static_cast<int>(w)));
  const long long q = sb.q();
  const size_t nf = pos.size();
  IntMatrix64 one(nf, std::vector<long long>(nf, 0));
  for (size_t i = 0; i < nf; ++i) one[i][i] = 1;
  ++rep.cases;
  if (t[0] != one) rep.failures.push_back("T_e is not the identity");
  std::vector<int> simple;
  for (int i = 0; i + 1 < sb.n(); ++i) simple.push_back(sb.weyl_index(simple_transposition(sb.n(), i)));
  for (size_t i = 0; i < simple.size(); ++i) {
    const int s = simple[i];
    for (size_t w = 0; w < t.size(); ++w) {
      ++rep.cases;
      const int sw = sb.weyl_multiply(s, static_cast<int>(w));
      const IntMatrix64 lhs = mul64(t[s], t[w]);
      const IntMatrix64 rhs = sb.weyl()[sw].length > sb.weyl()[w].length ? t[sw] : lincomb(q, t[sw], q - 1, t[w]);
      if (lhs != rhs) rep.failures.push_back("T_s" + std::to_string(i + 1) + " T_" + sb.weyl()[w].str() + " breaks the product rule");
    }
  }
  for (size_t i = 0; i + 1 < simple.size(); ++i) {
    ++rep.cases;
    const auto& a = t[simple[i]];
    const auto& b = t[simple[i + 1]];
    if (mul64(mul64(a, b), a) != mul64(mul64(b, a), b))
      rep.failures.push_back("braid relation fails for s" + std::to_string(i + 1) + ", s" + std::to_string(i + 2));
  }
  return rep;
}

namespace {

std::string partition_label(const std::vector<int>& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace

std::vector<long> principal_series_values(const LieGroupSandbox& sb, int g) {
  const int n = sb.n();
  // Curtis-Solomon: St = sum over J of (-1)^|J| Ind_{P_J}^G 1, P_J fixing the flags with dims outside J
  long st = 0;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> dims;
    for (int i = 1; i < n; ++i)
      if (!(mask >> (i - 1) & 1)) dims.push_back(i);
    st += (std::popcount(mask) % 2 ? -1 : 1) * sb.fixed_partial_flags(g, dims);
  }
  std::vector<int> all(n - 1);
  std::iota(all.begin(), all.end(), 1);
  const long pi = sb.fixed_partial_flags(g, all);
  if (n == 2) {
    if (pi != 1 + st) throw NonIntegerCharacter("permutation character is not 1 + St");
    return {1, st};
  }
  const long rest = pi - 1 - st;
  if (rest % 2 != 0) throw NonIntegerCharacter("(pi - 1 - St)/2 is not an integer at element " + std::to_string(g));
  return {1, rest / 2, st};
}

SandboxCharTable sandbox_char_table(const LieGroupSandbox& sb) {
  SandboxCharTable t;
  if (sb.n() == 2) {
    t.labels = {"[2]", "[1,1]"};
    t.phi_degrees = {1, 1};
  } else {
    t.labels = {"[3]", "[2,1]", "[1,1,1]"};
    t.phi_degrees = {1, 2, 1};
  }
  t.values.assign(t.labels.size(), {});
  for (int g : sb.unipotent_reps()) {
    const auto vals = principal_series_values(sb, g);
    for (size_t i = 0; i < vals.size(); ++i) t.values[i].push_back(vals[i]);
  }
  return t;
}

Rational eval_at_q(const LaurentPoly& p, long q) {
  Rational out = 0;
  for (const auto& [k, c] : p.terms()) {
    if (k % 2 != 0) throw UnsupportedSpecialization("odd power of v in " + p.str());
    if (!c.is_rational()) throw UnsupportedSpecialization("irrational coefficient in " + p.str());
    Rational qk = 1;
    for (int i = 0; i < std::abs(k / 2); ++i) qk *= q;
    out += c.rational() * (k >= 0 ? qk : Rational(1) / qk);
  }
  return out;
}

namespace {

/// Counts |{x : x g x^-1 in BwB}| / |B| for every w at once.
std::vector<Rational> heckeuch_lhs(const LieGroupSandbox& sb, int g) {
  std::vector<long> hits(sb.weyl().size(), 0);
  long cent = 0;
  std::vector<bool> seen(sb.order(), false);
  std::vector<long> orbit_hits(sb.weyl().size(), 0);
  for (size_t x = 0; x < sb.order(); ++x) {
    const int xi = static_cast<int>(x);
    const int c = sb.multiply(sb.multiply(xi, g), sb.inverse(xi));
    if (c == g) ++cent;
    if (!seen[c]) {
      seen[c] = true;
      ++orbit_hits[sb.cell_label(c)];
    }
  }
  std::vector<Rational> lhs;
  const long b = static_cast<long>(sb.borel().size());
  for (long h : orbit_hits) lhs.push_back(Rational(h * cent, b));
  for (auto& r : lhs) r.canonicalize();
  return lhs;
}

std::vector<std::vector<Rational>> traces_at_q(const LieGroupSandbox& sb, const std::vector<std::string>& labels) {
  const CartanDatum d = parse_cartan("A" + std::to_string(sb.n() - 1));
  std::vector<std::vector<Rational>> tr;
  for (const auto& label : labels) {
    const IrrepModel m = build_irrep_model(d, label);
    std::vector<Rational> row;
    for (const SnPerm& w : sb.weyl()) row.push_back(eval_at_q(hecke_trace_word(m, w.reduced_word()), sb.q()));
    tr.push_back(std::move(row));
  }
  return tr;
}

Rational heckeuch_rhs(const std::vector<long>& rho, const std::vector<std::vector<Rational>>& tr, int w) {
  Rational r = 0;
  for (size_t i = 0; i < rho.size(); ++i) r += rho[i] * tr[i][w];
  return r;
}

}  // namespace

HeckeUchResult heckeuch_verify(const LieGroupSandbox& sb, int g, int w) {
  if (w < 0 || w >= static_cast<int>(sb.weyl().size())) throw IndexOutOfRange("Weyl label " + std::to_string(w));
  const SandboxCharTable t = sandbox_char_table(sb);
  HeckeUchResult res;
  res.lhs = heckeuch_lhs(sb, g)[w];
  res.rhs = heckeuch_rhs(principal_series_values(sb, g), traces_at_q(sb, t.labels), w);
  res.equal = res.lhs == res.rhs;
  return res;
}

SandboxReport heckeuch_report(const LieGroupSandbox& sb, bool all_elements) {
  SandboxReport rep{all_elements ? "heckeuch_all" : "heckeuch", sb.n(), sb.q(), 0, {}};
  const SandboxCharTable t = sandbox_char_table(sb);
  const auto tr = traces_at_q(sb, t.labels);
  auto check = [&](const std::vector<Rational>& lhs, const std::vector<long>& rho, const std::string& name) {
    for (size_t w = 0; w < sb.weyl().size(); ++w) {
      ++rep.cases;
      const Rational rhs = heckeuch_rhs(rho, tr, static_cast<int>(w));
      if (lhs[w] != rhs)
        rep.failures.push_back(name + ", w = " + sb.weyl()[w].str() + ": " + lhs[w].get_str() + " != " + rhs.get_str());
    }
  };
  if (!all_elements) {
    for (size_t c = 0; c < sb.unipotent_reps().size(); ++c) {
      std::vector<long> rho;
      for (const auto& row : t.values) rho.push_back(row[c]);
      check(heckeuch_lhs(sb, sb.unipotent_reps()[c]), rho, "class " + partition_label(sb.unipotent_types()[c]));
    }
    return rep;
  }
  std::vector<int> class_of(sb.order(), -1);
  std::vector<std::vector<Rational>> class_lhs;
  for (size_t g = 0; g < sb.order(); ++g) {
    const int gi = static_cast<int>(g);
    if (class_of[g] < 0) {
      const int c = static_cast<int>(class_lhs.size());
      for (size_t x = 0; x < sb.order(); ++x) {
        const int xi = static_cast<int>(x);
        class_of[sb.multiply(sb.multiply(xi, gi), sb.inverse(xi))] = c;
      }
      class_lhs.push_back(heckeuch_lhs(sb, gi));
    }
    check(class_lhs[class_of[g]], principal_series_values(sb, gi), "element " + std::to_string(g));
  }
  return rep;
}

}  // namespace charkit
