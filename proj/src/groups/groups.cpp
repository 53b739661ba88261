#include "charkit/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "charkit/errors.hpp"

namespace charkit {

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<uint16_t>(i);
  return r;
}

Perm perm_identity(size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

unsigned perm_order(const Perm& a) {
  // lcm of cycle lengths
  std::vector<bool> seen(a.size(), false);
  unsigned long long ord = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, static_cast<unsigned long long>(len));
  }
  return static_cast<unsigned>(ord);
}

size_t PermHash::operator()(const Perm& p) const noexcept {
  size_t h = 1469598103934665603ull;
  for (uint16_t x : p) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

FiniteGroup::FiniteGroup(std::vector<Perm> sorted_elements, std::vector<Perm> generators)
    : elements_(std::move(sorted_elements)), generators_(std::move(generators)) {
  const size_t n = elements_.size();
  index_.reserve(n * 2);
  for (size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<int>(i));
  inverse_.resize(n);
  orders_.resize(n);
  unsigned long long e = 1;
  for (size_t i = 0; i < n; ++i) {
    inverse_[i] = index_.at(perm_inverse(elements_[i]));
    orders_[i] = static_cast<int>(perm_order(elements_[i]));
    e = std::lcm(e, static_cast<unsigned long long>(orders_[i]));
  }
  exponent_ = static_cast<unsigned>(e);
  if (n <= 1500) {
    table_.resize(n * n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(perm_compose(elements_[a], elements_[b]));
  }
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<size_t>(a) * order() + b];
  return index_.at(perm_compose(elements_[a], elements_[b]));
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& members) const {
  std::vector<Perm> elems;
  elems.reserve(members.size());
  for (int m : members) elems.push_back(elements_[m]);
  std::sort(elems.begin(), elems.end());
  // a greedy generating set
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> span{perm_identity(degree())};
  for (const auto& x : elems) {
    if (span.count(x)) continue;
    gens.push_back(x);
    std::deque<Perm> queue(span.begin(), span.end());
    while (!queue.empty()) {
      Perm y = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        Perm z = perm_compose(y, g);
        if (span.insert(z).second) queue.push_back(std::move(z));
      }
    }
  }
  return FiniteGroup(std::move(elems), std::move(gens));
}

FiniteGroup enumerate_group(const std::vector<Perm>& gens, size_t cap) {
  if (gens.empty()) return FiniteGroup({Perm{0}}, {});
  const size_t n = gens[0].size();
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("generators act on different domains");
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != perm_identity(n)) throw std::invalid_argument("generator is not a permutation");
  }
  std::unordered_set<Perm, PermHash> seen{perm_identity(n)};
  std::deque<Perm> queue{perm_identity(n)};
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Perm y = perm_compose(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw OrderCapExceeded("group order exceeds " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Perm> elems(seen.begin(), seen.end());
  std::sort(elems.begin(), elems.end());
  return FiniteGroup(std::move(elems), gens);
}

namespace {

Perm cycle_perm(size_t n, const std::vector<std::vector<int>>& cycles) {
  Perm p = perm_identity(n);
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.size(); ++i) p[c[i]] = static_cast<uint16_t>(c[(i + 1) % c.size()]);
  return p;
}

std::vector<Perm> preset_generators(const std::string& name) {
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '1' && name[1] <= '9') {
    const int n = name[1] - '0';
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    return {cycle_perm(n, {cyc})};
  }
  if (name.size() == 2 && name[0] == 'S' && name[1] >= '1' && name[1] <= '7') {
    const int n = name[1] - '0';
    if (n == 1) return {perm_identity(1)};
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    return {cycle_perm(n, {{0, 1}}), cycle_perm(n, {cyc})};
  }
  if (name == "D4") return {cycle_perm(4, {{0, 1, 2, 3}}), cycle_perm(4, {{0, 2}})};
  if (name == "Q8") return {cycle_perm(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), cycle_perm(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})};
  throw ParseError("unknown group preset '" + name + "'");
}

std::vector<Perm> parse_perm_generators(std::string_view body) {
  std::vector<std::vector<std::vector<int>>> gens;
  int max_point = 0;
  size_t i = 0;
  std::vector<std::vector<int>> cur;
  bool have_cur = false;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("cannot parse permutation generators '" + std::string(body) + "': " + why);
  };
  while (i < body.size()) {
    const char ch = body[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == ';') {
      if (!have_cur) fail("empty generator");
      gens.push_back(std::move(cur));
      cur.clear();
      have_cur = false;
      ++i;
    } else if (ch == '(') {
      ++i;
      std::vector<int> cyc;
      while (true) {
        while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ',')) ++i;
        if (i >= body.size()) fail("unterminated cycle");
        if (body[i] == ')') {
          ++i;
          break;
        }
        size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
        if (start == i) fail("expected a point");
        int pt = std::stoi(std::string(body.substr(start, i - start)));
        if (pt < 1) fail("points are 1-based");
        if (std::find(cyc.begin(), cyc.end(), pt - 1) != cyc.end()) fail("repeated point in cycle");
        cyc.push_back(pt - 1);
        max_point = std::max(max_point, pt);
      }
      cur.push_back(std::move(cyc));
      have_cur = true;
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  if (have_cur) gens.push_back(std::move(cur));
  if (gens.empty()) fail("no generators");
  std::vector<Perm> out;
  const size_t n = std::max(max_point, 1);
  for (const auto& g : gens) {
    // cycles are applied left to right
    Perm p = perm_identity(n);
    for (const auto& cyc : g) p = perm_compose(cycle_perm(n, {cyc}), p);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

FiniteGroup parse_group(std::string_view text) {
  size_t b = 0;
  while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  text.remove_prefix(b);
  if (text.substr(0, 5) == "perm:") return enumerate_group(parse_perm_generators(text.substr(5)));
  std::string name(text);
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
  return enumerate_group(preset_generators(name));
}

ConjugacyData conjugacy_data(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> gen_idx;
  for (const auto& p : g.generators()) gen_idx.push_back(g.index_of(p));
  if (gen_idx.empty()) {
    for (int i = 0; i < n; ++i) gen_idx.push_back(i);
  }
  std::vector<int> raw_class(n, -1);
  std::vector<std::vector<int>> raw;
  for (int x = 0; x < n; ++x) {
    if (raw_class[x] >= 0) continue;
    const int c = static_cast<int>(raw.size());
    raw.push_back({x});
    raw_class[x] = c;
    for (size_t k = 0; k < raw[c].size(); ++k) {
      const int y = raw[c][k];
      for (int h : gen_idx) {
        const int z = g.mul(g.mul(h, y), g.inv(h));
        if (raw_class[z] < 0) {
          raw_class[z] = c;
          raw[c].push_back(z);
        }
      }
    }
    std::sort(raw[c].begin(), raw[c].end());
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  ConjugacyData cd;
  cd.classes = std::move(raw);
  cd.class_of.assign(n, -1);
  for (size_t c = 0; c < cd.classes.size(); ++c) {
    for (int x : cd.classes[c]) cd.class_of[x] = static_cast<int>(c);
    cd.reps.push_back(cd.classes[c].front());
  }
  for (int rep : cd.reps) {
    std::vector<int> cent;
    for (int x = 0; x < n; ++x)
      if (g.mul(x, rep) == g.mul(rep, x)) cent.push_back(x);
    // greedy generators: add the least element outside the current span
    std::vector<int> gens;
    std::vector<char> in_span(n, 0);
    in_span[0] = 1;
    std::vector<int> span{0};
    for (int x : cent) {
      if (in_span[x]) continue;
      gens.push_back(x);
      for (size_t k = 0; k < span.size(); ++k) {
        for (int h : gens) {
          const int z = g.mul(span[k], h);
          if (!in_span[z]) {
            in_span[z] = 1;
            span.push_back(z);
          }
        }
      }
    }
    cd.centralizers.push_back(std::move(cent));
    cd.centralizer_gens.push_back(std::move(gens));
  }
  return cd;
}

ClassStructure class_structure(const FiniteGroup& g, const ConjugacyData& cd) {
  ClassStructure cs;
  const int r = static_cast<int>(cd.classes.size());
  cs.group_order = g.order();
  for (const auto& c : cd.classes) cs.class_sizes.push_back(c.size());
  for (int k = 0; k < r; ++k) {
    cs.inverse_class.push_back(cd.class_of[g.inv(cd.reps[k])]);
    cs.element_orders.push_back(g.element_order(cd.reps[k]));
  }
  cs.power_class = [&g, &cd](int k, int j) {
    int x = 0;
    for (int t = 0; t < j; ++t) x = g.mul(x, cd.reps[k]);
    return cd.class_of[x];
  };
  cs.class_matrix = [&g, &cd, r](int i) {
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    for (int k = 0; k < r; ++k)
      for (int x : cd.classes[i]) ++m[cd.class_of[g.mul(g.inv(x), cd.reps[k])]][k];
    return m;
  };
  return cs;
}

CharTable character_table(const FiniteGroup& g, const ConjugacyData& cd) {
  CharTable t = dixon_schneider(class_structure(g, cd), g.exponent());
  t.class_reps = cd.reps;
  return t;
}

CharTable character_table(const FiniteGroup& g) { return character_table(g, conjugacy_data(g)); }

CycNum class_inner_product(const CharTable& t, const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
  CycNum s;
  for (size_t k = 0; k < t.num_classes(); ++k)
    s += CycNum(static_cast<long>(t.class_sizes[k])) * a[k] * b[k].conj();
  return s / CycNum(Rational(mpz_class(std::to_string(t.group_order))));
}

}  // namespace charkit
