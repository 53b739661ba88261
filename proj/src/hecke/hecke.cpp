#include "charkit/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "charkit/errors.hpp"

namespace charkit {

HeckeElement HeckeElement::basis(std::shared_ptr<const RootSystem> rs, const WeylElement& w, const LaurentPoly& c) {
  HeckeElement h(std::move(rs));
  h.add(w, c);
  return h;
}

HeckeElement HeckeElement::one(std::shared_ptr<const RootSystem> rs) {
  const WeylElement e = rs->identity();
  return basis(std::move(rs), e);
}

HeckeElement HeckeElement::generator(std::shared_ptr<const RootSystem> rs, int s) {
  const WeylElement w = rs->simple_reflection(s);
  return basis(std::move(rs), w);
}

LaurentPoly HeckeElement::coeff(const WeylElement& w) const {
  auto it = support_.find(w);
  return it == support_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const WeylElement& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = support_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) support_.erase(it);
}

namespace {

void require_same_datum(const RootSystem& a, const RootSystem& b) {
  if (&a != &b && !(a.datum() == b.datum()))
    throw DatumMismatch("Hecke elements over " + a.datum().type_label + " and " + b.datum().type_label);
}

}  // namespace

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  require_same_datum(*rs_, *o.rs_);
  for (const auto& [w, c] : o.support_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  require_same_datum(*rs_, *o.rs_);
  for (const auto& [w, c] : o.support_) add(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    support_.clear();
    return *this;
  }
  for (auto& [w, x] : support_) x *= c;
  return *this;
}

HeckeElement HeckeElement::left_mul_generator(int s) const {
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly qm1 = q - 1;
  const WeylElement sw = rs_->simple_reflection(s);
  HeckeElement out(rs_);
  for (const auto& [u, c] : support_) {
    WeylElement su = rs_->multiply(sw, u);
    if (su.length > u.length) {
      out.add(su, c);
    } else {
      out.add(su, c * q);
      out.add(u, c * qm1);
    }
  }
  return out;
}

HeckeElement t_multiply(const HeckeElement& x, const HeckeElement& y) {
  require_same_datum(x.roots(), y.roots());
  HeckeElement out(x.root_system());
  for (const auto& [w, c] : x.support()) {
    const std::vector<int> word = x.roots().reduced_word(w);
    HeckeElement acc = y;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = acc.left_mul_generator(*it);
    out += acc * c;
  }
  return out;
}

int coxeter_m(const CartanDatum& datum, int s, int t) {
  if (s == t) return 1;
  switch (datum.cartan[s][t] * datum.cartan[t][s]) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
    default:
      throw InvalidCartan("Cartan entries do not give a finite Coxeter matrix");
  }
}

namespace {

using RMat = Matrix<RatFunc>;

RMat identity_matrix(int n) {
  RMat m(n, std::vector<RatFunc>(n));
  for (int i = 0; i < n; ++i) m[i][i] = RatFunc(1);
  return m;
}

RMat mat_mul(const RMat& a, const RMat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RMat c(n, std::vector<RatFunc>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

bool is_zero_matrix(const RMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

RMat scalar_matrix(int n, const RatFunc& c) {
  RMat m(n, std::vector<RatFunc>(n));
  for (int i = 0; i < n; ++i) m[i][i] = c;
  return m;
}

RMat mat_add(RMat a, const RMat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

bool is_type_a(const CartanDatum& d) {
  return d.cartan == parse_cartan("A" + std::to_string(d.rank())).cartan;
}

bool is_irreducible_rank2(const CartanDatum& d) { return d.rank() == 2 && d.cartan[0][1] != 0; }

IrrepModel one_dim(const CartanDatum& datum, const std::string& label, const std::vector<bool>& plus) {
  IrrepModel m;
  m.label = label;
  m.datum = datum;
  m.dim = 1;
  for (int s = 0; s < datum.rank(); ++s) {
    RatFunc x = plus[s] ? RatFunc(LaurentPoly::q()) : RatFunc(-1);
    m.matrices.push_back({{x}});
  }
  return m;
}

std::vector<int> parse_partition(const std::string& label) {
  std::vector<int> parts;
  size_t i = 1;
  while (i < label.size()) {
    while (i < label.size() && (label[i] == ',' || label[i] == ' ')) ++i;
    if (i < label.size() && label[i] == ']') {
      ++i;
      break;
    }
    size_t start = i;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (start == i) throw UnsupportedLabel("bad partition label '" + label + "'");
    parts.push_back(std::stoi(label.substr(start, i - start)));
  }
  if (i != label.size() || parts.empty() || !std::is_sorted(parts.rbegin(), parts.rend()) || parts.back() < 1)
    throw UnsupportedLabel("bad partition label '" + label + "'");
  return parts;
}

/// Standard tableaux as cell positions (row, col) of the entries 0..n-1.
std::vector<std::vector<std::pair<int, int>>> standard_tableaux(const std::vector<int>& shape) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> filled(shape.size(), 0);
  std::vector<std::pair<int, int>> pos;
  std::function<void()> rec = [&] {
    if (static_cast<int>(pos.size()) == n) {
      out.push_back(pos);
      return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
      if (filled[r] == shape[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      pos.emplace_back(static_cast<int>(r), filled[r]);
      ++filled[r];
      rec();
      --filled[r];
      pos.pop_back();
    }
  };
  rec();
  return out;
}

IrrepModel seminormal_model(const CartanDatum& datum, const std::string& label) {
  const std::vector<int> shape = parse_partition(label);
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  if (!is_type_a(datum) || n != datum.rank() + 1)
    throw UnsupportedLabel("partition " + label + " does not match " + datum.type_label);
  if (n > 6) throw UnsupportedLabel("seminormal models are provided for n <= 6");
  const auto tabs = standard_tableaux(shape);
  const int dim = static_cast<int>(tabs.size());
  const LaurentPoly q = LaurentPoly::q();
  // diagonal entry for axial distance r
  auto a = [&](int r) { return RatFunc((q - 1) * LaurentPoly::q(r), LaurentPoly::q(r) - 1); };
  IrrepModel m;
  m.label = label;
  m.datum = datum;
  m.dim = dim;
  for (int i = 0; i + 1 < n; ++i) {
    RMat mat(dim, std::vector<RatFunc>(dim));
    for (int t = 0; t < dim; ++t) {
      const auto [ri, ci] = tabs[t][i];
      const auto [rj, cj] = tabs[t][i + 1];
      if (ri == rj) {
        mat[t][t] = RatFunc(q);
        continue;
      }
      if (ci == cj) {
        mat[t][t] = RatFunc(-1);
        continue;
      }
      auto swapped = tabs[t];
      std::swap(swapped[i], swapped[i + 1]);
      const int t2 = static_cast<int>(std::find(tabs.begin(), tabs.end(), swapped) - tabs.begin());
      const int r = (cj - rj) - (ci - ri);
      mat[t][t] = a(r);
      mat[t2][t] = rj > ri ? RatFunc(1) : a(r) * a(-r) + RatFunc(q);
    }
    m.matrices.push_back(std::move(mat));
  }
  return m;
}

IrrepModel dihedral_model(const CartanDatum& datum, const std::string& label, int j) {
  if (!is_irreducible_rank2(datum)) throw UnsupportedLabel("dihedral models need an irreducible rank-2 datum");
  const int mst = coxeter_m(datum, 0, 1);
  if (j < 1 || 2 * j >= mst) throw UnsupportedLabel("dihedral index out of range for m = " + std::to_string(mst));
  const LaurentPoly q = LaurentPoly::q();
  const CycNum z = CycNum::root_of_unity(static_cast<unsigned>(mst), j);
  const LaurentPoly d = q * (CycNum(2) + z + z.conj());
  IrrepModel m;
  m.label = label;
  m.datum = datum;
  m.dim = 2;
  m.matrices.push_back({{RatFunc(-1), RatFunc(0)}, {RatFunc(1), RatFunc(q)}});
  m.matrices.push_back({{RatFunc(q), RatFunc(d)}, {RatFunc(0), RatFunc(-1)}});
  return m;
}

bool is_simply_laced_connected(const CartanDatum& d) {
  const int n = d.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && d.cartan[i][j] != 0 && d.cartan[i][j] != -1) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (!seen[j] && d.cartan[i][j] != 0) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Reflection representation as a W-graph on the simple roots; the sign twist
/// replaces T_s by (q - 1) - T_s.
IrrepModel reflection_model(const CartanDatum& datum, const std::string& label, bool twisted) {
  if (!is_simply_laced_connected(datum) || is_type_a(datum))
    throw UnsupportedLabel("reflection models are provided for types D and E");
  const int n = datum.rank();
  const LaurentPoly q = LaurentPoly::q();
  IrrepModel m;
  m.label = label;
  m.datum = datum;
  m.dim = n;
  for (int s = 0; s < n; ++s) {
    RMat mat(n, std::vector<RatFunc>(n));
    for (int t = 0; t < n; ++t) {
      if (t == s) {
        mat[s][s] = RatFunc(-1);
        continue;
      }
      mat[t][t] = RatFunc(q);
      if (datum.cartan[s][t] != 0) mat[s][t] = RatFunc(LaurentPoly::v(1));
    }
    if (twisted) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat[i][j] = (i == j ? RatFunc(q - 1) : RatFunc(0)) - mat[i][j];
    }
    m.matrices.push_back(std::move(mat));
  }
  return m;
}

}  // namespace

IrrepModel build_irrep_model(const CartanDatum& datum, const std::string& label) {
  const int n = datum.rank();
  if (label == "triv") return one_dim(datum, label, std::vector<bool>(n, true));
  if (label == "sign") return one_dim(datum, label, std::vector<bool>(n, false));
  if (label.rfind("eps:", 0) == 0) {
    const std::string signs = label.substr(4);
    if (static_cast<int>(signs.size()) != n) throw UnsupportedLabel("sign pattern length differs from rank: " + label);
    std::vector<bool> plus(n);
    for (int s = 0; s < n; ++s) {
      if (signs[s] != '+' && signs[s] != '-') throw UnsupportedLabel("bad sign pattern: " + label);
      plus[s] = signs[s] == '+';
    }
    // conjugate generators (odd m) must act by the same scalar
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t)
        if (coxeter_m(datum, s, t) % 2 == 1 && plus[s] != plus[t])
          throw UnsupportedLabel("sign pattern violates an odd braid relation: " + label);
    return one_dim(datum, label, plus);
  }
  if (label.rfind("dihedral:", 0) == 0) {
    int j = 0;
    try {
      j = std::stoi(label.substr(9));
    } catch (const std::exception&) {
      throw UnsupportedLabel("bad dihedral label: " + label);
    }
    return dihedral_model(datum, label, j);
  }
  if (!label.empty() && label[0] == '[') return seminormal_model(datum, label);
  if (label == "refl") return reflection_model(datum, label, false);
  if (label == "refl:sign") return reflection_model(datum, label, true);
  throw UnsupportedLabel("unknown model label '" + label + "' for " + datum.type_label);
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::string> supported_labels(const CartanDatum& datum) {
  const int n = datum.rank();
  std::vector<std::string> out;
  if (is_type_a(datum) && n + 1 <= 6) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(n + 1, n + 1, cur, parts);
    for (const auto& p : parts) {
      std::string s = "[";
      for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
      out.push_back(s + "]");
    }
    return out;
  }
  out = {"triv", "sign"};
  // remaining one-dimensional characters
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::string signs;
    for (int s = 0; s < n; ++s) signs += (mask >> s & 1) ? '-' : '+';
    try {
      build_irrep_model(datum, "eps:" + signs);
      out.push_back("eps:" + signs);
    } catch (const UnsupportedLabel&) {
    }
  }
  if (is_irreducible_rank2(datum)) {
    const int mst = coxeter_m(datum, 0, 1);
    for (int j = 1; 2 * j < mst; ++j) out.push_back("dihedral:" + std::to_string(j));
  }
  if (is_simply_laced_connected(datum) && !is_type_a(datum)) {
    out.push_back("refl");
    out.push_back("refl:sign");
  }
  return out;
}

Matrix<RatFunc> model_word_product(const IrrepModel& model, const std::vector<int>& word) {
  RMat acc = identity_matrix(model.dim);
  for (int s : word) {
    if (s < 0 || s >= static_cast<int>(model.matrices.size())) throw IndexOutOfRange("generator " + std::to_string(s));
    acc = mat_mul(acc, model.matrices[s]);
  }
  return acc;
}

LaurentPoly hecke_trace_word(const IrrepModel& model, const std::vector<int>& word) {
  const RMat p = model_word_product(model, word);
  RatFunc tr;
  for (int i = 0; i < model.dim; ++i) tr += p[i][i];
  return tr.to_laurent();
}

LaurentPoly hecke_trace(const IrrepModel& model, const RootSystem& rs, const WeylElement& w) {
  if (!(rs.datum() == model.datum))
    throw DatumMismatch("model over " + model.datum.type_label + ", element over " + rs.datum().type_label);
  return hecke_trace_word(model, rs.reduced_word(w));
}

ModelRelationReport check_model_relations(const IrrepModel& model) {
  ModelRelationReport rep;
  const int n = model.datum.rank();
  const RatFunc q(LaurentPoly::q());
  for (int s = 0; s < n; ++s) {
    const RMat& m = model.matrices[s];
    const RMat lhs = mat_mul(mat_add(m, scalar_matrix(model.dim, -q)), mat_add(m, scalar_matrix(model.dim, RatFunc(1))));
    if (!is_zero_matrix(lhs)) {
      rep.quadratic_ok = false;
      rep.failures.push_back("quadratic relation fails for s" + std::to_string(s + 1));
    }
  }
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      const int mst = coxeter_m(model.datum, s, t);
      std::vector<int> w1, w2;
      for (int k = 0; k < mst; ++k) {
        w1.push_back(k % 2 ? t : s);
        w2.push_back(k % 2 ? s : t);
      }
      if (!(model_word_product(model, w1) == model_word_product(model, w2))) {
        rep.braid_ok = false;
        rep.failures.push_back("braid relation fails for s" + std::to_string(s + 1) + ", s" + std::to_string(t + 1));
      }
    }
  return rep;
}

LaurentPoly coxeter_trace(long degree, const Rational& reflection_sum, long value_at_c, int num_positive, int h) {
  if (value_at_c == 0) return LaurentPoly();
  Rational e = 2 * (num_positive + reflection_sum / degree) / h;
  e.canonicalize();
  if (e.get_den() != 1) throw InvariantViolation("non-integral exponent " + e.get_str() + " for a nonzero Coxeter value");
  return LaurentPoly::monomial(static_cast<int>(e.get_num().get_si()), CycNum(value_at_c));
}

}  // namespace charkit
