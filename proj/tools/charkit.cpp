// Command-line front end: each subcommand prints JSON and exits nonzero when a check fails.
#include <iostream>
#include <numeric>

#include "CLI11.hpp"
#include "charkit/coxeter.hpp"
#include "charkit/fourier.hpp"
#include "charkit/groups.hpp"
#include "charkit/hecke.hpp"
#include "charkit/pipeline.hpp"
#include "charkit/sandbox.hpp"
#include "json.hpp"

using namespace charkit;
using json = nlohmann::ordered_json;

namespace {

std::vector<int> one_based(const std::vector<int>& w) {
  std::vector<int> out;
  for (int s : w) out.push_back(s + 1);
  return out;
}

int emit(const json& j, bool ok) {
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_roots(const std::string& type) {
  auto rs = build_root_system(parse_cartan(type));
  std::vector<int> all(rs->rank());
  std::iota(all.begin(), all.end(), 0);
  const WeylElement w0 = longest_element(*rs, all);
  bool minus_w0_fixes = true;
  for (int s = 0; s < rs->rank(); ++s) minus_w0_fixes = minus_w0_fixes && w0.perm[s] == rs->negate(s);
  json j;
  j["type"] = rs->datum().type_label;
  j["rank"] = rs->rank();
  j["cartan"] = rs->datum().cartan;
  j["num_roots"] = rs->num_roots();
  j["num_positive"] = rs->num_positive();
  j["group_order"] = group_order(*rs);
  j["longest_length"] = w0.length;
  j["minus_w0_fixes_simple_roots"] = minus_w0_fixes;
  j["positive_roots"] = std::vector<std::vector<int>>(rs->roots().begin(), rs->roots().begin() + rs->num_positive());
  return emit(j, w0.length == rs->num_positive());
}

int cmd_coxeter_conj(const std::string& type, const std::string& source, const std::string& target) {
  auto rs = build_root_system(parse_cartan(type));
  const ConjugatorResult r = coxeter_conjugator(*rs, parse_node_list(source), parse_node_list(target));
  json j;
  j["type"] = rs->datum().type_label;
  j["source"] = one_based(parse_node_list(source));
  j["target"] = one_based(parse_node_list(target));
  j["conjugator"] = one_based(r.word);
  j["verified"] = r.verified;
  return emit(j, r.verified);
}

json table_json(const CharTable& t) {
  json j;
  j["group_order"] = t.group_order;
  j["class_sizes"] = t.class_sizes;
  json rows = json::array();
  for (const auto& row : t.table) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  j["table"] = rows;
  return j;
}

int cmd_chartable(const std::string& group) {
  const FiniteGroup g = parse_group(group);
  const CharTable t = character_table(g);
  bool ok = true;
  for (size_t a = 0; a < t.table.size(); ++a)
    for (size_t b = 0; b < t.table.size(); ++b)
      ok = ok && class_inner_product(t, t.table[a], t.table[b]) == CycNum(a == b ? 1 : 0);
  json j = table_json(t);
  j["group"] = group;
  j["row_orthogonality"] = ok;
  return emit(j, ok);
}

int cmd_fourier(const std::string& group) {
  const FourierMatrix f = fourier_matrix(parse_group(group));
  json j;
  j["group"] = group;
  std::vector<std::string> pairs;
  for (const auto& x : f.mpairs) pairs.push_back(x.str());
  j["m_set"] = pairs;
  json rows = json::array();
  for (const auto& row : f.entries) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  j["matrix"] = rows;
  j["hermitian"] = f.is_hermitian();
  j["involution"] = f.is_involution();
  return emit(j, f.is_hermitian() && f.is_involution());
}

int cmd_sandbox(int n, int q, const std::string& check, bool all) {
  const LieGroupSandbox sb = build_sandbox(n, q);
  SandboxReport rep;
  if (check == "heckeuch") rep = heckeuch_report(sb, all);
  else if (check == "cells") rep = verify_cell_products(sb);
  else rep = convolution_hecke_check(sb);
  std::cout << rep.to_json() << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_e7_sign(const std::string& families, const std::string& traces) {
  const SignSolution s = solve_signs(load_coxeter_traces(traces), load_family_dataset(families));
  std::cout << s.to_json() << "\n";
  return s.xi == 1 ? 0 : 1;
}

/// q = p^f with p prime; returns false otherwise.
bool prime_power(unsigned long q, unsigned long& p, unsigned& f) {
  if (q < 2) return false;
  p = 2;
  while (q % p) ++p;
  f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  return q == 1;
}

int cmd_e7_table(const std::string& families, const std::string& traces, unsigned long q) {
  const FamilyDataset fam = load_family_dataset(families);
  const CoxeterTraceDataset tr = load_coxeter_traces(traces);
  const SignSolution sol = solve_signs(tr, fam);
  const CharValueTable t = final_value_table(fam, sol.xi);
  unsigned long p = 0;
  unsigned f = 0;
  if (q && !prime_power(q, p, f)) throw UnsupportedSpecialization("q = " + std::to_string(q) + " is not a prime power");
  auto render = [&](const LaurentPoly& x) { return q ? laurent_specialize(x, p, f).str() : x.str(); };
  json j;
  j["xi"] = sol.xi;
  if (q) j["q"] = q;
  j["columns"] = t.col_labels;
  json rows;
  for (size_t r = 0; r < t.row_labels.size(); ++r) {
    std::vector<std::string> vals;
    for (const auto& x : t.entries[r]) vals.push_back(render(x));
    rows[t.row_labels[r]] = vals;
  }
  j["values"] = rows;
  // R_{x0} on the regular classes: delta q^2 at u0, back-solved at u_a0^2, otherwise not determined
  const BacksolveResult b = empty_cell_backsolve(tr, fam, sol.xi);
  j["R_x0"] = {"delta*" + render(LaurentPoly::q(2)), "unknown", render(b.r), "unknown"};
  return emit(j, b.residual.is_zero());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charkit: exact character computations for Weyl groups, Hecke algebras and E7"};
  app.require_subcommand(1);

  std::string type = "E7", source = "1,2,3,4,5,6,7", target = "7,6,5,4,3,2,1", group = "S4", check = "heckeuch";
  int n = 3, q = 2;
  bool all = false;
  unsigned long spec_q = 0;
  std::string families = default_data_path("e7_families.json");
  std::string traces = default_data_path("e7_coxeter_traces.json");

  auto* roots = app.add_subcommand("roots", "root system summary");
  roots->add_option("--type", type, "Cartan type, e.g. E7 or A2xA1");
  auto* conj = app.add_subcommand("coxeter-conj", "conjugator between two Coxeter elements");
  conj->add_option("--type", type);
  conj->add_option("--source", source, "node ordering, 1-based");
  conj->add_option("--target", target, "node ordering, 1-based");
  auto* chartab = app.add_subcommand("chartable", "character table by Dixon-Schneider");
  chartab->add_option("--group", group, "preset (Z1..Z6, S3, S4, S5, D4, Q8) or 'perm: ...'");
  auto* fourier = app.add_subcommand("fourier", "M(G) and the Fourier matrix");
  fourier->add_option("--group", group);
  auto* sandbox = app.add_subcommand("sandbox", "exhaustive checks in GL_n(F_q)");
  sandbox->add_option("--n", n)->check(CLI::Range(2, 3));
  sandbox->add_option("--q", q)->check(CLI::IsMember({2, 3, 4}));
  sandbox->add_option("--check", check)->check(CLI::IsMember({"heckeuch", "cells", "hecke"}));
  sandbox->add_flag("--all", all, "heckeuch at every group element, not only unipotent classes");
  auto* e7 = app.add_subcommand("e7", "E7 sign determination and value table");
  e7->require_subcommand(1);
  auto* sign = e7->add_subcommand("sign", "solve for xi and delta");
  auto* table = e7->add_subcommand("table", "values of the family of the 512s on the regular classes");
  for (auto* sub : {sign, table}) {
    sub->add_option("--families", families, "family dataset (default: bundled, or $CHARKIT_DATA)");
    sub->add_option("--traces", traces, "Coxeter trace dataset (default: bundled, or $CHARKIT_DATA)");
  }
  table->add_option("--q", spec_q, "specialize at this prime power");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*roots) return cmd_roots(type);
    if (*conj) return cmd_coxeter_conj(type, source, target);
    if (*chartab) return cmd_chartable(group);
    if (*fourier) return cmd_fourier(group);
    if (*sandbox) return cmd_sandbox(n, q, check, all);
    if (*sign) return cmd_e7_sign(families, traces);
    if (*table) return cmd_e7_table(families, traces, spec_q);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 1;
}
