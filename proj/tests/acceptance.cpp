// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "charkit/coxeter.hpp"
#include "charkit/fourier.hpp"
#include "charkit/groups.hpp"
#include "charkit/hecke.hpp"
#include "charkit/pipeline.hpp"
#include "charkit/sandbox.hpp"
#include "json.hpp"

using namespace charkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

const std::string kTraces = std::string(CHARKIT_DATA_DIR) + "/e7_coxeter_traces.json";
const std::string kFamilies = std::string(CHARKIT_DATA_DIR) + "/e7_families.json";

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> t;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

// ---------------------------------------------------------------------------

Outcome fourier_involution() {
  Outcome o;
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z6", "S3", "S4", "S5"}) {
    const FourierMatrix f = fourier_matrix(parse_group(name));
    expect(o, f.is_hermitian() && f.is_involution(), std::string("Fourier matrix of ") + name);
  }
  return o;
}

Outcome character_tables() {
  Outcome o;
  const std::vector<std::string> groups{"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "S3", "S4", "S5", "D4", "Q8",
                                        "perm: (1,2,3,4,5,6,7); (2,3,5)(4,7,6)", "perm: (1,2,3)(4,5,6); (1,4)"};
  for (const auto& name : groups) {
    const FiniteGroup g = parse_group(name);
    const CharTable t = character_table(g);
    const size_t r = t.num_classes();
    expect(o, t.table.size() == r, name + ": table not square");
    for (size_t a = 0; a < r; ++a)
      for (size_t b = 0; b < r; ++b)
        expect(o, class_inner_product(t, t.table[a], t.table[b]) == CycNum(a == b ? 1 : 0), name + ": row orthogonality");
    for (size_t k = 0; k < r; ++k)
      for (size_t l = 0; l < r; ++l) {
        CycNum s;
        for (size_t a = 0; a < r; ++a) s += t.table[a][k] * t.table[a][l].conj();
        expect(o, s == CycNum(k == l ? static_cast<long>(g.order() / t.class_sizes[k]) : 0), name + ": column orthogonality");
      }
  }
  // hand tables keyed by cycle type
  using Hand = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<long>>>;
  const std::map<std::string, Hand> hand{
      {"S3", {{{1, 1, 1}, {2, 1}, {3}}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}}},
      {"S4",
       {{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}},
        {{1, 1, 1, 1, 1}, {1, -1, 1, 1, -1}, {2, 0, 2, -1, 0}, {3, 1, -1, 0, -1}, {3, -1, -1, 0, 1}}}},
      {"S5",
       {{{1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1}, {3, 1, 1}, {3, 2}, {4, 1}, {5}},
        {{1, 1, 1, 1, 1, 1, 1},
         {1, -1, 1, 1, -1, -1, 1},
         {4, 2, 0, 1, -1, 0, -1},
         {4, -2, 0, 1, 1, 0, -1},
         {5, 1, 1, -1, 1, -1, 0},
         {5, -1, 1, -1, -1, 1, 0},
         {6, 0, -2, 0, 0, 0, 1}}}}};
  for (const auto& [name, h] : hand) {
    const FiniteGroup g = parse_group(name);
    const CharTable t = character_table(g);
    std::set<std::vector<long>> computed;
    for (const auto& row : t.table) {
      std::vector<long> r(h.first.size());
      for (size_t k = 0; k < t.num_classes(); ++k) {
        const auto pos = std::find(h.first.begin(), h.first.end(), cycle_type(g.element(t.class_reps[k]))) - h.first.begin();
        r[pos] = row[k].rational().get_num().get_si();
      }
      computed.insert(r);
    }
    expect(o, computed == std::set<std::vector<long>>(h.second.begin(), h.second.end()), name + " differs from the hand table");
  }
  return o;
}

Outcome hecke_relations() {
  Outcome o;
  for (const char* t : {"A2", "A3", "A4", "A5", "B2", "G2"}) {
    const CartanDatum d = parse_cartan(t);
    for (const auto& label : supported_labels(d)) {
      const ModelRelationReport rep = check_model_relations(build_irrep_model(d, label));
      expect(o, rep.quadratic_ok && rep.braid_ok, std::string(t) + " model " + label);
    }
  }
  std::mt19937 rng(2024);
  const std::vector<std::string> types{"A3", "B3", "A4", "B2", "G2", "A2xA1", "D4", "F4", "C3", "A2xA2"};
  for (int i = 0; i < 1000; ++i) {
    auto rs = build_root_system(parse_cartan(types[i % types.size()]));
    auto random_element = [&] {
      HeckeElement h(rs);
      for (int term = 0; term < 2; ++term) {
        std::vector<int> word(rng() % 6);
        for (auto& s : word) s = static_cast<int>(rng() % rs->rank());
        h.add(weyl_from_word(*rs, word), LaurentPoly::monomial(static_cast<int>(rng() % 5) - 2, CycNum(static_cast<long>(rng() % 5) - 2)));
      }
      return h;
    };
    const HeckeElement x = random_element(), y = random_element(), z = random_element();
    expect(o, t_multiply(t_multiply(x, y), z) == t_multiply(x, t_multiply(y, z)), "associativity in " + types[i % types.size()]);
  }
  return o;
}

Outcome tits_specialization() {
  Outcome o;
  for (const char* t : {"A2", "A3", "B2", "G2"}) {
    auto rs = build_root_system(parse_cartan(t));
    std::vector<Perm> gens;
    for (int s = 0; s < rs->rank(); ++s) gens.push_back(rs->simple_reflection(s).perm);
    const FiniteGroup g = enumerate_group(gens);
    const CharTable tab = character_table(g);
    std::set<size_t> matched;
    for (const auto& label : supported_labels(rs->datum())) {
      const IrrepModel m = build_irrep_model(rs->datum(), label);
      std::vector<CycNum> row;
      for (int rep : tab.class_reps) {
        WeylElement w{g.element(rep), 0};
        for (int r = 0; r < rs->num_positive(); ++r) w.length += !rs->is_positive(w.perm[r]);
        row.push_back(hecke_trace(m, *rs, w).at_one());
      }
      const auto it = std::find(tab.table.begin(), tab.table.end(), row);
      expect(o, it != tab.table.end(), std::string(t) + " model " + label + " at v = 1");
      if (it != tab.table.end()) matched.insert(static_cast<size_t>(it - tab.table.begin()));
    }
    expect(o, matched.size() == tab.table.size(), std::string(t) + ": models do not cover Irr(W)");
  }
  return o;
}

Outcome sandbox_heckeuch() {
  Outcome o;
  size_t cases = 0;
  for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    const SandboxReport rep = heckeuch_report(build_sandbox(n, q), true);
    cases += rep.cases;
    expect(o, rep.ok(), "GL_" + std::to_string(n) + "(" + std::to_string(q) + "): " + (rep.ok() ? "" : rep.failures.front()));
  }
  o.detail = o.ok ? std::to_string(cases) + " (g, w) cases" : o.detail;
  return o;
}

Outcome bruhat_structure() {
  Outcome o;
  for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}}) {
    const std::string name = "GL_" + std::to_string(n) + "(" + std::to_string(q) + ")";
    const LieGroupSandbox sb = build_sandbox(n, q);  // checks partition and cell sizes
    size_t total = 0;
    for (size_t w = 0; w < sb.weyl().size(); ++w) {
      const size_t expected = sb.borel().size() * static_cast<size_t>(std::pow(q, sb.weyl()[w].length));
      expect(o, sb.cell_size(static_cast<int>(w)) == expected, name + ": cell size");
      total += sb.cell_size(static_cast<int>(w));
    }
    expect(o, total == sb.order(), name + ": cells do not partition G");
    expect(o, verify_cell_products(sb).ok(), name + ": reduced-word cell products");
  }
  return o;
}

Outcome coxeter_conjugation() {
  Outcome o;
  auto rs = build_root_system(parse_cartan("E7"));
  std::vector<int> base(7);
  std::iota(base.begin(), base.end(), 0);
  std::vector<int> perm = base;
  size_t n = 0;
  do {
    const ConjugatorResult r = coxeter_conjugator(*rs, base, perm);
    // independent re-check by root permutations
    WeylElement u = weyl_from_word(*rs, r.word);
    const bool ok = rs->multiply(rs->multiply(u, coxeter_element(*rs, base)), rs->inverse(u)) == coxeter_element(*rs, perm);
    expect(o, r.verified && ok, "ordering #" + std::to_string(n));
    ++n;
  } while (std::next_permutation(perm.begin(), perm.end()));
  expect(o, n == 5040, "expected 5040 orderings");
  return o;
}

Outcome e7_structure() {
  Outcome o;
  auto rs = build_root_system(parse_cartan("E7"));
  expect(o, rs->num_positive() == 63, "positive roots");
  expect(o, group_order(*rs) == 2903040ull, "|W(E7)|");
  std::vector<int> all(7);
  std::iota(all.begin(), all.end(), 0);
  const WeylElement w0 = longest_element(*rs, all);
  expect(o, w0.length == 63, "l(w0)");
  for (int s = 0; s < 7; ++s) expect(o, w0.perm[s] == rs->negate(s), "-w0 moves a simple root");
  // nodes 2, 3, 4, 5 span D4
  expect(o, generated_order(*rs, relative_weyl_generators(*rs, {1, 2, 3, 4})) == 48, "relative Weyl group of D4");
  return o;
}

Outcome sign_determination() {
  Outcome o;
  const auto tr = load_coxeter_traces(kTraces);
  const auto fam = load_family_dataset(kFamilies);
  const SignSolution s = solve_signs(tr, fam);
  expect(o, s.xi == 1, "xi");
  expect(o, s.admissible_delta == std::vector<int>{-1, 1}, "admissible delta");
  bool ambiguous = false;
  try {
    solve_signs(tr, fam, false);
  } catch (const AmbiguousSign&) {
    ambiguous = true;
  }
  expect(o, ambiguous, "no AmbiguousSign without the positivity axiom");
  return o;
}

Outcome final_table() {
  Outcome o;
  const auto fam = load_family_dataset(kFamilies);
  const CharValueTable t = final_value_table(fam, 1);
  const LaurentPoly v7 = LaurentPoly::v(7), O;
  const CycNum z = CycNum::root_of_unity(4, 1);
  const LaurentPoly expected[4][4] = {{v7, O, -v7, O}, {-v7, O, v7, O}, {O, -v7 * z, O, v7 * z}, {O, v7 * z, O, -v7 * z}};
  int equal = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) equal += t.entries[r][c] == expected[r][c];
  expect(o, equal == 16, std::to_string(equal) + " of 16 entries match");
  const CharValueTable chi = chi_cuspidal_table();
  const Family& f0 = fam.family_of("phi_512_11");
  for (int c = 0; c < 4; ++c) {
    UnipotentValues rho;
    for (int r = 0; r < 4; ++r) rho[t.row_labels[r]] = t.entries[r][c];
    const AlmostValues a = almost_transform(f0, rho);
    expect(o, a.at(f0.member("E7[z4]").mpair) == chi.at("chi_A1", t.col_labels[c]) &&
                  a.at(f0.member("E7[-z4]").mpair) == chi.at("chi_A2", t.col_labels[c]),
           "round trip at " + t.col_labels[c]);
  }
  return o;
}

Outcome trace_integrity() {
  Outcome o;
  const CoxeterTraceDataset ds = load_coxeter_traces(kTraces);
  const auto& tr = ds.traces;
  expect(o, tr.at("phi_56_3") - tr.at("phi_35_4") - tr.at("phi_21_6") == LaurentPoly::q(5) * 2, "combination 2q^5");
  expect(o, tr.at("phi_512_11") - tr.at("phi_512_12") == LaurentPoly::v(7) * 2, "512 difference 2v^7");
  std::ifstream in(kTraces);
  const nlohmann::json base = nlohmann::json::parse(in);
  for (const char* label : {"phi_56_3", "phi_35_4", "phi_512_11", "phi_512_12"}) {
    nlohmann::json j = base;
    j["traces"][label] = nlohmann::json::object({{"3", "5"}});
    bool rejected = false;
    try {
      check_coxeter_traces(parse_coxeter_traces(j.dump()));
    } catch (const ConsistencyError&) {
      rejected = true;
    }
    expect(o, rejected, std::string("mutated ") + label + " was accepted");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, std::function<Outcome()>, double>> criteria{
      {1, "Fourier involution", fourier_involution, 10},
      {2, "character tables", character_tables, 0},
      {3, "Hecke relations", hecke_relations, 60},
      {4, "Tits specialization", tits_specialization, 0},
      {5, "sandbox class counts", sandbox_heckeuch, 120},
      {6, "Bruhat structure", bruhat_structure, 0},
      {7, "Coxeter conjugation", coxeter_conjugation, 30},
      {8, "E7 structure", e7_structure, 0},
      {9, "sign determination", sign_determination, 0},
      {10, "final table", final_table, 0},
      {11, "trace dataset integrity", trace_integrity, 0},
  };
  int failed = 0;
  for (const auto& [id, name, run, limit] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs > limit) {
      o.ok = false;
      o.detail = "over the " + std::to_string(static_cast<int>(limit)) + " s budget";
    }
    std::printf("%s %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
