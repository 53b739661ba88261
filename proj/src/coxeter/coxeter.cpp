#include "charkit/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <optional>
#include <set>

#include "charkit/cyclotomic.hpp"
#include "charkit/errors.hpp"

namespace charkit {

namespace {

IntMatrix zero_matrix(int n) { return IntMatrix(n, std::vector<int>(n, 0)); }

void link(IntMatrix& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

IntMatrix irreducible_cartan(char family, int n) {
  IntMatrix a = zero_matrix(n);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (family) {
    case 'A':
      if (n < 1) break;
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      return a;
    case 'B':
    case 'C':
      if (n < 2) break;
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      // alpha_n is short in B_n and long in C_n
      if (family == 'B') {
        a[n - 1][n - 2] = -2;
      } else {
        a[n - 2][n - 1] = -2;
      }
      return a;
    case 'D':
      if (n < 3) break;
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      return a;
    case 'E':
      if (n < 6 || n > 8) break;
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      return a;
    case 'F':
      if (n != 4) break;
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a[2][1] = -2;
      return a;
    case 'G':
      if (n != 2) break;
      a[0][1] = -3;
      a[1][0] = -1;
      return a;
    default:
      break;
  }
  throw InvalidCartan(std::string("unsupported Cartan type ") + family + std::to_string(n));
}

}  // namespace

void validate_cartan(const IntMatrix& a) {
  const size_t n = a.size();
  if (n == 0) throw InvalidCartan("empty Cartan matrix");
  for (const auto& row : a)
    if (row.size() != n) throw InvalidCartan("Cartan matrix is not square");
  for (size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw InvalidCartan("diagonal entry is not 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw InvalidCartan("positive off-diagonal entry");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw InvalidCartan("zero pattern is not symmetric");
    }
  }
  // symmetrizer d with d_i a_ij = d_j a_ji, fixed per connected component
  std::vector<Rational> d(n, Rational(0));
  for (size_t root = 0; root < n; ++root) {
    if (sgn(d[root]) != 0) continue;
    d[root] = 1;
    std::deque<size_t> queue{root};
    while (!queue.empty()) {
      size_t i = queue.front();
      queue.pop_front();
      for (size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rational want = d[i] * a[i][j] / a[j][i];
        if (sgn(d[j]) == 0) {
          d[j] = want;
          queue.push_back(j);
        } else if (d[j] != want) {
          throw InvalidCartan("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  // positive definiteness: all Gaussian pivots of the symmetrization are positive
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) b[i][j] = d[i] * a[i][j];
  for (size_t k = 0; k < n; ++k) {
    if (sgn(b[k][k]) <= 0) throw InvalidCartan("symmetrized Cartan matrix is not positive definite");
    for (size_t i = k + 1; i < n; ++i) {
      Rational f = b[i][k] / b[k][k];
      for (size_t j = k; j < n; ++j) b[i][j] -= f * b[k][j];
    }
  }
}

CartanDatum cartan_from_matrix(const IntMatrix& a, std::string label) {
  validate_cartan(a);
  CartanDatum d;
  d.type_label = std::move(label);
  d.cartan = a;
  for (size_t i = 0; i < a.size(); ++i) d.node_names.push_back(std::to_string(i + 1));
  return d;
}

CartanDatum parse_cartan(std::string_view label) {
  std::vector<std::pair<char, int>> parts;
  size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("cannot parse Cartan type '" + std::string(label) + "': " + why);
  };
  while (i < label.size()) {
    while (i < label.size() && std::isspace(static_cast<unsigned char>(label[i]))) ++i;
    if (i >= label.size()) fail("trailing separator");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(label[i])));
    if (std::string_view("ABCDEFG").find(fam) == std::string_view::npos) fail("unknown family");
    ++i;
    if (i < label.size() && label[i] == '_') ++i;
    size_t start = i;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (start == i) fail("missing rank");
    parts.emplace_back(fam, std::stoi(std::string(label.substr(start, i - start))));
    while (i < label.size() && std::isspace(static_cast<unsigned char>(label[i]))) ++i;
    if (i < label.size()) {
      if (label[i] != 'x' && label[i] != '*') fail("expected 'x' between components");
      ++i;
    }
  }
  if (parts.empty()) fail("empty label");
  int total = 0;
  for (const auto& [f, n] : parts) total += n;
  IntMatrix a = zero_matrix(total);
  int offset = 0;
  std::string name;
  for (const auto& [f, n] : parts) {
    IntMatrix block = irreducible_cartan(f, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a[offset + r][offset + c] = block[r][c];
    offset += n;
    if (!name.empty()) name += "x";
    name += f + std::to_string(n);
  }
  return cartan_from_matrix(a, name);
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  validate_cartan(datum_.cartan);
  const int n = rank();
  const auto& a = datum_.cartan;
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int s = 0; s < n; ++s) {
    std::vector<int> e(n, 0);
    e[s] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> beta = queue.front();
    queue.pop_front();
    for (int s = 0; s < n; ++s) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += a[s][j] * beta[j];
      std::vector<int> image = beta;
      image[s] -= pairing;
      if (seen.insert(image).second) {
        if (seen.size() > 20000) throw InvalidCartan("root closure does not terminate");
        queue.push_back(std::move(image));
      }
    }
  }
  std::vector<std::vector<int>> positive;
  for (const auto& r : seen) {
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positive.push_back(r);
  }
  std::sort(positive.begin(), positive.end(), [](const auto& x, const auto& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0);
    int hy = std::accumulate(y.begin(), y.end(), 0);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  num_positive_ = static_cast<int>(positive.size());
  if (2 * positive.size() != seen.size()) throw InvalidCartan("roots are not split into positive and negative halves");
  roots_ = positive;
  for (const auto& r : positive) {
    std::vector<int> neg(r.size());
    for (size_t k = 0; k < r.size(); ++k) neg[k] = -r[k];
    roots_.push_back(std::move(neg));
  }
  for (int i = 0; i < num_roots(); ++i) index_.emplace(roots_[i], i);
  refl_.assign(n, std::vector<uint16_t>(num_roots()));
  for (int s = 0; s < n; ++s) {
    for (int r = 0; r < num_roots(); ++r) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += a[s][j] * roots_[r][j];
      std::vector<int> image = roots_[r];
      image[s] -= pairing;
      refl_[s][r] = static_cast<uint16_t>(index_.at(image));
    }
  }
}

int RootSystem::index_of(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::length_of(const std::vector<uint16_t>& perm) const {
  int len = 0;
  for (int r = 0; r < num_positive_; ++r)
    if (!is_positive(perm[r])) ++len;
  return len;
}

WeylElement RootSystem::identity() const {
  WeylElement w;
  w.perm.resize(num_roots());
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

WeylElement RootSystem::simple_reflection(int s) const {
  if (s < 0 || s >= rank()) throw IndexOutOfRange("generator index " + std::to_string(s));
  return WeylElement{refl_[s], 1};
}

WeylElement RootSystem::multiply(const WeylElement& x, const WeylElement& y) const {
  WeylElement r;
  r.perm.resize(num_roots());
  for (int i = 0; i < num_roots(); ++i) r.perm[i] = x.perm[y.perm[i]];
  r.length = length_of(r.perm);
  return r;
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
  WeylElement r;
  r.perm.resize(num_roots());
  for (int i = 0; i < num_roots(); ++i) r.perm[w.perm[i]] = static_cast<uint16_t>(i);
  r.length = w.length;
  return r;
}

WeylElement RootSystem::conjugate(const WeylElement& u, const WeylElement& w) const {
  return multiply(multiply(u, w), inverse(u));
}

bool RootSystem::has_right_descent(const WeylElement& w, int s) const { return !is_positive(w.perm[s]); }

bool RootSystem::has_left_descent(const WeylElement& w, int s) const {
  // w^-1(alpha_s) < 0 iff alpha_s = w(beta) for a negative beta
  for (int r = 0; r < num_roots(); ++r)
    if (w.perm[r] == s) return !is_positive(r);
  return false;
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
  std::vector<int> stripped;
  WeylElement cur = w;
  while (cur.length > 0) {
    int s = 0;
    while (!has_right_descent(cur, s)) ++s;
    stripped.push_back(s);
    cur = multiply(cur, simple_reflection(s));
  }
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

std::shared_ptr<const RootSystem> build_root_system(const CartanDatum& datum) {
  return std::make_shared<const RootSystem>(datum);
}

WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = rs.identity();
  for (int s : word) w = rs.multiply(w, rs.simple_reflection(s));
  return w;
}

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& J) {
  for (int s : J)
    if (s < 0 || s >= rs.rank()) throw IndexOutOfRange("generator index " + std::to_string(s));
  WeylElement w = rs.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int s : J) {
      if (!rs.has_right_descent(w, s)) {
        w = rs.multiply(w, rs.simple_reflection(s));
        grew = true;
      }
    }
  }
  return w;
}

std::vector<WeylElement> relative_weyl_generators(const RootSystem& rs, const std::vector<int>& J) {
  const WeylElement w0j = longest_element(rs, J);
  std::vector<WeylElement> out;
  for (int s = 0; s < rs.rank(); ++s) {
    if (std::find(J.begin(), J.end(), s) != J.end()) continue;
    std::vector<int> js = J;
    js.push_back(s);
    out.push_back(rs.multiply(longest_element(rs, js), w0j));
  }
  return out;
}

unsigned long long generated_order(const RootSystem& rs, const std::vector<WeylElement>& gens,
                                   unsigned long long cap) {
  std::set<std::vector<uint16_t>> seen{rs.identity().perm};
  std::deque<WeylElement> queue{rs.identity()};
  while (!queue.empty()) {
    WeylElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      WeylElement y = rs.multiply(x, g);
      if (seen.insert(y.perm).second) {
        if (seen.size() > cap) throw OrderCapExceeded("subgroup exceeds " + std::to_string(cap) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

unsigned long long parabolic_order(const RootSystem& rs, const std::vector<int>& J) {
  if (J.empty()) return 1;
  const auto& a = rs.datum().cartan;
  const int n = rs.rank();
  const int s = J.back();
  // orbit of the fundamental weight omega_s; its stabilizer in W_J is W_{J - s}
  std::vector<int> omega(n, 0);
  omega[s] = 1;
  std::set<std::vector<int>> orbit{omega};
  std::deque<std::vector<int>> queue{omega};
  while (!queue.empty()) {
    std::vector<int> lam = queue.front();
    queue.pop_front();
    for (int i : J) {
      if (lam[i] == 0) continue;
      std::vector<int> img = lam;
      for (int k = 0; k < n; ++k) img[k] -= lam[i] * a[k][i];
      if (orbit.insert(img).second) queue.push_back(std::move(img));
    }
  }
  std::vector<int> rest(J.begin(), J.end() - 1);
  return orbit.size() * parabolic_order(rs, rest);
}

unsigned long long group_order(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  std::iota(all.begin(), all.end(), 0);
  return parabolic_order(rs, all);
}

namespace {

void check_ordering(const RootSystem& rs, const std::vector<int>& ordering) {
  std::vector<int> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(rs.rank());
  std::iota(expect.begin(), expect.end(), 0);
  if (sorted != expect) throw IndexOutOfRange("node ordering is not a permutation of all nodes");
}

}  // namespace

WeylElement coxeter_element(const RootSystem& rs, const std::vector<int>& ordering) {
  check_ordering(rs, ordering);
  return weyl_from_word(rs, ordering);
}

ConjugatorResult coxeter_conjugator(const RootSystem& rs, const std::vector<int>& source,
                                    const std::vector<int>& target) {
  check_ordering(rs, source);
  check_ordering(rs, target);
  const int n = rs.rank();
  const auto& a = rs.datum().cartan;
  // a Coxeter element is determined by the orientation of the Dynkin diagram
  // it induces: i -> j when s_i precedes s_j
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] != 0) edges.emplace_back(i, j);
  auto orientation = [&](const std::vector<int>& ord) {
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[ord[k]] = k;
    uint64_t bits = 0;
    for (size_t e = 0; e < edges.size(); ++e)
      if (pos[edges[e].first] < pos[edges[e].second]) bits |= uint64_t{1} << e;
    return bits;
  };
  // flipping a source into a sink (or back) is conjugation by that generator
  auto flip = [&](uint64_t bits, int s) -> std::optional<uint64_t> {
    bool all_out = true, all_in = true;
    uint64_t mask = 0;
    for (size_t e = 0; e < edges.size(); ++e) {
      const auto [i, j] = edges[e];
      if (i != s && j != s) continue;
      mask |= uint64_t{1} << e;
      const bool first_before_second = bits >> e & 1;
      const bool s_first = (i == s) == first_before_second;
      if (s_first) {
        all_in = false;
      } else {
        all_out = false;
      }
    }
    if (!all_out && !all_in) return std::nullopt;
    return bits ^ mask;
  };
  const uint64_t start = orientation(source);
  const uint64_t goal = orientation(target);
  std::map<uint64_t, std::pair<uint64_t, int>> parent;
  parent.emplace(start, std::make_pair(start, -1));
  std::deque<uint64_t> queue{start};
  while (!queue.empty() && !parent.count(goal)) {
    uint64_t cur = queue.front();
    queue.pop_front();
    for (int s = 0; s < n; ++s) {
      auto next = flip(cur, s);
      if (next && parent.emplace(*next, std::make_pair(cur, s)).second) queue.push_back(*next);
    }
  }
  ConjugatorResult res;
  if (!parent.count(goal)) return res;
  for (uint64_t cur = goal; cur != start; cur = parent.at(cur).first) res.moves.push_back(parent.at(cur).second);
  std::reverse(res.moves.begin(), res.moves.end());
  res.word.assign(res.moves.rbegin(), res.moves.rend());
  const WeylElement u = weyl_from_word(rs, res.word);
  res.verified = rs.conjugate(u, coxeter_element(rs, source)) == coxeter_element(rs, target);
  return res;
}

std::vector<int> parse_node_list(std::string_view text) {
  std::vector<int> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    if (i >= text.size()) break;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("bad node list '" + std::string(text) + "'");
    int k = std::stoi(std::string(text.substr(start, i - start)));
    if (k < 1) throw ParseError("node indices are 1-based");
    out.push_back(k - 1);
  }
  return out;
}

}  // namespace charkit
