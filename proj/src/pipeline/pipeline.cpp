#include "charkit/pipeline.hpp"

#include <cstdlib>
#include <numeric>

#include "json.hpp"

#ifndef CHARKIT_DATA_DIR
#define CHARKIT_DATA_DIR "data"
#endif

namespace charkit {

std::string default_data_path(const std::string& file) {
  const char* env = std::getenv("CHARKIT_DATA");
  const std::string dir = env && *env ? env : CHARKIT_DATA_DIR;
  return dir + "/" + file;
}

namespace {

const CycNum kZeta = CycNum::root_of_unity(4, 1);
const std::vector<std::string> kRegularClasses{"u0", "u_a0", "u_a0^2", "u_a0^3"};

}  // namespace

RegUnipModel regular_class_model() {
  RegUnipModel m;
  m.component_group = parse_group("Z4");
  const FiniteGroup& g = m.component_group;
  for (size_t i = 0; i < g.order(); ++i)
    if (g.element_order(static_cast<int>(i)) == 4) {
      m.a0 = static_cast<int>(i);
      break;
    }
  if (g.order() != 4 || m.a0 < 0) throw InvariantViolation("A(u0) must be cyclic of order 4");
  int x = 0;  // identity
  for (int j = 0; j < 4; ++j) {
    m.class_elements.push_back(x);
    x = g.mul(x, m.a0);
  }
  m.class_labels = kRegularClasses;
  m.u0_word = {1, 2, 3, 4, 5, 6, 7};
  // F acts trivially on A(u0), so every class of A(u0) gives one rational class
  m.frobenius_trivial = true;
  auto rs = build_root_system(parse_cartan("E7"));
  std::vector<int> forward(7), backward(7);
  std::iota(forward.begin(), forward.end(), 0);
  std::iota(backward.rbegin(), backward.rend(), 0);
  m.reversal_certificate = coxeter_conjugator(*rs, forward, backward);
  m.u0_self_inverse = m.reversal_certificate.verified;
  return m;
}

std::vector<CycNum> component_character(const RegUnipModel& m, const CycNum& value_at_a0) {
  std::vector<CycNum> vals;
  CycNum x(1);
  for (size_t j = 0; j < m.class_elements.size(); ++j) {
    vals.push_back(x);
    x *= value_at_a0;
  }
  // must be a row of the character table of A(u0)
  const CharTable t = character_table(m.component_group);
  for (const auto& row : t.table) {
    bool same = true;
    for (size_t j = 0; j < vals.size(); ++j) {
      const int c = static_cast<int>(std::find_if(t.class_reps.begin(), t.class_reps.end(),
                                                  [&](int rep) { return rep == m.class_elements[j]; }) -
                                     t.class_reps.begin());
      if (c == static_cast<int>(t.class_reps.size()) || row[c] != vals[j]) same = false;
    }
    if (same) return vals;
  }
  throw InvariantViolation("a0 -> " + value_at_a0.str() + " is not a character of A(u0)");
}

const LaurentPoly& CharValueTable::at(const std::string& row, const std::string& col) const {
  const auto r = std::find(row_labels.begin(), row_labels.end(), row);
  const auto c = std::find(col_labels.begin(), col_labels.end(), col);
  if (r == row_labels.end() || c == col_labels.end()) throw KeyMismatch("no entry " + row + " / " + col);
  return entries[r - row_labels.begin()][c - col_labels.begin()];
}

CharValueTable chi_cuspidal_table() {
  const RegUnipModel m = regular_class_model();
  CharValueTable t;
  t.row_labels = {"chi_A1", "chi_A2"};
  t.col_labels = {"elsewhere"};
  t.col_labels.insert(t.col_labels.end(), m.class_labels.begin(), m.class_labels.end());
  for (const CycNum& z : {kZeta, -kZeta}) {
    std::vector<LaurentPoly> row{LaurentPoly()};
    for (const CycNum& s : component_character(m, z)) row.push_back(LaurentPoly::v(7) * s);
    t.entries.push_back(std::move(row));
  }
  return t;
}

namespace {

const FamilyMember& x0_member(const FamilyDataset& fam) {
  for (const auto& m : fam.family_of("phi_56_3").members)
    if (m.kind != "principal") return m;
  throw KeyMismatch("family of phi_56_3 has no non-principal member");
}

}  // namespace

UnipotentValues unipotent_values(const FamilyDataset& fam, const RegularAlmostValues& r) {
  std::map<std::string, LaurentPoly> by_label{{"phi_1_0", r.trivial}, {"E7[z4]", r.x1}, {"E7[-z4]", r.x2}};
  by_label[x0_member(fam).label] = r.x0;
  UnipotentValues out;
  for (const auto& f : fam.families) {
    const FourierMatrix& fm = fourier_matrix(f.group_name);
    AlmostValues a;
    for (const MPair& x : fm.mpairs) a[x] = LaurentPoly();
    bool any = false;
    for (const auto& m : f.members) {
      auto it = by_label.find(m.label);
      if (it != by_label.end() && !it->second.is_zero()) {
        a[m.mpair] = it->second;
        any = true;
      }
    }
    if (!any) {
      for (const auto& m : f.members) out[m.label] = LaurentPoly();
      continue;
    }
    for (auto& [label, val] : almost_transform(f, a)) out[label] = val;
  }
  return out;
}

LaurentPoly hecke_class_sum(const CoxeterTraceDataset& traces, const FamilyDataset& fam, const RegularAlmostValues& r) {
  const UnipotentValues rho = unipotent_values(fam, r);
  LaurentPoly sum;
  for (const auto& [label, tr] : traces.traces) {
    auto it = rho.find(label);
    if (it == rho.end()) throw KeyMismatch("trace label " + label + " is not in the family dataset");
    sum += it->second * tr;
  }
  return sum;
}

namespace {

void require_sign(int s, const char* name) {
  if (s != 1 && s != -1) throw UnsupportedSpecialization(std::string(name) + " must be +1 or -1");
}

bool strictly_positive(const LaurentPoly& p) {
  if (p.is_zero()) return false;
  for (const auto& [k, c] : p.terms())
    if (!c.is_rational() || c.rational() <= 0) return false;
  return true;
}

}  // namespace

LaurentPoly cell_sum(const CoxeterTraceDataset& traces, const FamilyDataset& fam, int xi, int delta) {
  require_sign(xi, "xi");
  require_sign(delta, "delta");
  const CharValueTable chi = chi_cuspidal_table();
  RegularAlmostValues r;
  r.trivial = LaurentPoly(1);
  r.x1 = chi.at("chi_A1", "u0") * CycNum(xi);
  r.x2 = chi.at("chi_A2", "u0") * CycNum(xi);
  r.x0 = LaurentPoly::q(2) * CycNum(delta);
  const LaurentPoly sum = hecke_class_sum(traces, fam, r);
  const LaurentPoly closed = LaurentPoly::q(7) * CycNum(1 + 2 * xi + delta);
  if (sum != closed)
    throw PinningError("cell sum at u0 is " + sum.str() + ", expected q^7 (1 + 2 xi + delta) = " + closed.str());
  return sum;
}

std::string SignSolution::to_json() const {
  nlohmann::ordered_json j;
  j["xi"] = xi;
  j["admissible_delta"] = admissible_delta;
  j["audit"] = nlohmann::ordered_json::array();
  for (const auto& a : audit) j["audit"].push_back({{"kind", a.kind}, {"statement", a.statement}, {"anchor", a.anchor}});
  return j.dump(2);
}

SignSolution solve_signs(const CoxeterTraceDataset& traces, const FamilyDataset& fam, bool positivity_axiom) {
  SignSolution sol;
  auto& audit = sol.audit;
  const LaurentPoly combo = traces.traces.at("phi_56_3") - traces.traces.at("phi_35_4") - traces.traces.at("phi_21_6");
  audit.push_back({"computation", "Tr(T_wc) on phi_56_3 - phi_35_4 - phi_21_6 = " + combo.str(), "trace dataset"});
  audit.push_back({"axiom", "R_{x1} = xi chi_{A1}, R_{x2} = xi chi_{A2} with one common xi in {+1,-1}",
                   "u0 is conjugate to u0^-1 (reversal certificate) and E7[-z4] is the complex conjugate of E7[z4]"});
  audit.push_back({"axiom", "R_{x0}(u0) = delta q^2 with delta in {+1,-1}",
                   "D4-series almost character at u0, Frobenius normalized by q^2, real since u0 ~ u0^-1"});
  audit.push_back({"axiom", "the only almost characters nonzero at u0 are R_{1_W}, R_{x1}, R_{x2}, R_{x0}",
                   "generalized Springer correspondence on the regular class"});
  if (positivity_axiom)
    audit.push_back({"axiom", "|O_u0 meet B w_c B| > 0, so the left side of the class count is strictly positive",
                     "w0 u0 w0^-1 lies in B s1 B ... B s7 B = B w_c B"});
  std::vector<std::pair<int, int>> kept;
  for (int xi : {1, -1})
    for (int delta : {1, -1}) {
      const LaurentPoly s = cell_sum(traces, fam, xi, delta);
      const bool ok = !positivity_axiom || strictly_positive(s);
      audit.push_back({"computation",
                       "xi = " + std::to_string(xi) + ", delta = " + std::to_string(delta) + ": sum at u0 = " + s.str() +
                           (ok ? " (kept)" : " (excluded)"),
                       "Fourier transform of the family dataset against the trace dataset"});
      if (ok) kept.emplace_back(xi, delta);
    }
  if (kept.empty()) throw AmbiguousSign("no (xi, delta) survives");
  for (const auto& [xi, delta] : kept)
    if (xi != kept.front().first) throw AmbiguousSign("surviving pairs disagree on xi");
  sol.xi = kept.front().first;
  for (const auto& [xi, delta] : kept) sol.admissible_delta.push_back(delta);
  std::sort(sol.admissible_delta.begin(), sol.admissible_delta.end());
  return sol;
}

CharValueTable final_value_table(const FamilyDataset& fam, int xi) {
  require_sign(xi, "xi");
  const CharValueTable chi = chi_cuspidal_table();
  const Family& f0 = fam.family_of("phi_512_11");
  const FourierMatrix& fm = fourier_matrix(f0.group_name);
  CharValueTable t;
  t.row_labels = {"phi_512_11", "phi_512_12", "E7[z4]", "E7[-z4]"};
  t.col_labels = kRegularClasses;
  t.entries.assign(4, std::vector<LaurentPoly>(kRegularClasses.size()));
  for (size_t c = 0; c < kRegularClasses.size(); ++c) {
    AlmostValues a;
    for (const MPair& x : fm.mpairs) a[x] = LaurentPoly();
    a[f0.member("E7[z4]").mpair] = chi.at("chi_A1", kRegularClasses[c]) * CycNum(xi);
    a[f0.member("E7[-z4]").mpair] = chi.at("chi_A2", kRegularClasses[c]) * CycNum(xi);
    const UnipotentValues rho = almost_transform(f0, a);
    for (size_t r = 0; r < t.row_labels.size(); ++r) t.entries[r][c] = rho.at(t.row_labels[r]);
  }
  return t;
}

BacksolveResult empty_cell_backsolve(const CoxeterTraceDataset& traces, const FamilyDataset& fam, int xi) {
  require_sign(xi, "xi");
  const CharValueTable chi = chi_cuspidal_table();
  RegularAlmostValues known;
  known.trivial = LaurentPoly(1);
  known.x1 = chi.at("chi_A1", "u_a0^2") * CycNum(xi);
  known.x2 = chi.at("chi_A2", "u_a0^2") * CycNum(xi);
  const LaurentPoly constant = hecke_class_sum(traces, fam, known);
  RegularAlmostValues unit;
  unit.x0 = LaurentPoly(1);
  const LaurentPoly coeff = hecke_class_sum(traces, fam, unit);
  if (coeff.terms().size() != 1) throw InvariantViolation("coefficient of R_{x0} is not a monomial: " + coeff.str());
  const auto& [k, c] = *coeff.terms().begin();
  BacksolveResult res;
  res.r = -(constant.shifted(-k) * (CycNum(1) / c));
  res.residual = constant + coeff * res.r;
  res.physical = xi == 1;
  res.note = res.physical ? "O_{u_a0^2} meets B w_c B in the empty set"
                          : "xi = -1 is excluded by the sign argument; algebraic solution only";
  return res;
}

}  // namespace charkit
