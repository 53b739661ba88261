#include "charkit/errors.hpp"
#include "charkit/pipeline.hpp"
#include "doctest.h"

using namespace charkit;

namespace {

const CoxeterTraceDataset& traces() {
  static const CoxeterTraceDataset t = load_coxeter_traces(std::string(CHARKIT_DATA_DIR) + "/e7_coxeter_traces.json");
  return t;
}

const FamilyDataset& families() {
  static const FamilyDataset f = load_family_dataset(std::string(CHARKIT_DATA_DIR) + "/e7_families.json");
  return f;
}

const CycNum z = CycNum::root_of_unity(4, 1);
const LaurentPoly v7 = LaurentPoly::v(7);
const LaurentPoly q7 = LaurentPoly::q(7);

}  // namespace

TEST_CASE("regular class model") {
  const RegUnipModel m = regular_class_model();
  CHECK(m.component_group.order() == 4);
  CHECK(m.component_group.element_order(m.a0) == 4);
  CHECK(m.class_labels.size() == 4);
  CHECK(m.frobenius_trivial);
  CHECK(m.reversal_certificate.verified);
  CHECK(m.u0_self_inverse);
  CHECK(component_character(m, z) == std::vector<CycNum>{CycNum(1), z, CycNum(-1), -z});
  CHECK_THROWS_AS(component_character(m, CycNum::root_of_unity(3, 1)), InvariantViolation);
}

TEST_CASE("characteristic functions of the cuspidal character sheaves") {
  const CharValueTable t = chi_cuspidal_table();
  REQUIRE(t.entries.size() == 2);
  REQUIRE(t.col_labels.size() == 5);
  CHECK(t.at("chi_A1", "elsewhere").is_zero());
  CHECK(t.at("chi_A2", "elsewhere").is_zero());
  const LaurentPoly a1[] = {v7, v7 * z, -v7, -v7 * z};
  const LaurentPoly a2[] = {v7, -v7 * z, -v7, v7 * z};
  for (int c = 0; c < 4; ++c) {
    CHECK(t.entries[0][c + 1] == a1[c]);
    CHECK(t.entries[1][c + 1] == a2[c]);
    // |entry|^2 = q^7 in both rows
    for (int r = 0; r < 2; ++r) CHECK(t.entries[r][c + 1] * t.entries[r][c + 1].conj_coeffs() == q7);
  }
}

TEST_CASE("cell sum at u0") {
  CHECK(cell_sum(traces(), families(), 1, 1) == q7 * 4);
  CHECK(cell_sum(traces(), families(), 1, -1) == q7 * 2);
  CHECK(cell_sum(traces(), families(), -1, 1).is_zero());
  CHECK(cell_sum(traces(), families(), -1, -1) == q7 * -2);
  // direct assembly from the stated values of rho_phi(u0)
  const auto& tr = traces().traces;
  for (int xi : {1, -1})
    for (int delta : {1, -1}) {
      const LaurentPoly half = LaurentPoly::q(2) * CycNum(Rational(delta, 2));
      const LaurentPoly direct = tr.at("phi_1_0") + v7 * CycNum(xi) * (tr.at("phi_512_11") - tr.at("phi_512_12")) +
                                 half * (tr.at("phi_56_3") - tr.at("phi_35_4") - tr.at("phi_21_6"));
      CHECK(cell_sum(traces(), families(), xi, delta) == direct);
    }
  CHECK_THROWS_AS(cell_sum(traces(), families(), 0, 1), UnsupportedSpecialization);
}

TEST_CASE("cell sum rejects a mis-pinned family dataset") {
  FamilyDataset bad = families();
  for (auto& f : bad.families)
    for (auto& m : f.members) {
      if (m.label == "phi_512_11") m.mpair = MPair{0, 1};
      else if (m.label == "phi_512_12") m.mpair = MPair{0, 0};
    }
  CHECK_THROWS_AS(cell_sum(traces(), bad, 1, 1), PinningError);
}

TEST_CASE("sign determination") {
  const SignSolution s = solve_signs(traces(), families());
  CHECK(s.xi == 1);
  CHECK(s.admissible_delta == std::vector<int>{-1, 1});
  bool has_axiom = false;
  for (const auto& a : s.audit) has_axiom = has_axiom || (a.kind == "axiom" && a.statement.find("strictly positive") != std::string::npos);
  CHECK(has_axiom);
  CHECK(s.to_json().find("\"xi\": 1") != std::string::npos);
  CHECK_THROWS_AS(solve_signs(traces(), families(), false), AmbiguousSign);
}

TEST_CASE("final value table") {
  const CharValueTable t = final_value_table(families(), 1);
  const LaurentPoly O;
  const LaurentPoly expected[4][4] = {{v7, O, -v7, O}, {-v7, O, v7, O}, {O, -v7 * z, O, v7 * z}, {O, v7 * z, O, -v7 * z}};
  REQUIRE(t.entries.size() == 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      CAPTURE(t.row_labels[r]);
      CAPTURE(t.col_labels[c]);
      CHECK(t.entries[r][c] == expected[r][c]);
    }
  for (int c = 0; c < 4; ++c) CHECK((t.entries[0][c] + t.entries[1][c]).is_zero());
  // back through the transform: R_{x_i} = chi_{A_i} when xi = 1
  const CharValueTable chi = chi_cuspidal_table();
  const Family& f0 = families().family_of("phi_512_11");
  for (int c = 0; c < 4; ++c) {
    UnipotentValues rho;
    for (int r = 0; r < 4; ++r) rho[t.row_labels[r]] = t.entries[r][c];
    const AlmostValues a = almost_transform(f0, rho);
    CHECK(a.at(f0.member("E7[z4]").mpair) == chi.at("chi_A1", t.col_labels[c]));
    CHECK(a.at(f0.member("E7[-z4]").mpair) == chi.at("chi_A2", t.col_labels[c]));
    CHECK(a.at(f0.member("phi_512_11").mpair).is_zero());
  }
  const CharValueTable neg = final_value_table(families(), -1);
  CHECK(neg.at("phi_512_11", "u0") == -v7);
}

TEST_CASE("empty cell back-solve") {
  const BacksolveResult plus = empty_cell_backsolve(traces(), families(), 1);
  CHECK(plus.r == LaurentPoly::q(2));
  CHECK(plus.residual.is_zero());
  CHECK(plus.physical);
  // q^7 (1 + 2) + q^5 r = 0
  const BacksolveResult minus = empty_cell_backsolve(traces(), families(), -1);
  CHECK(minus.r == LaurentPoly::q(2) * -3);
  CHECK(minus.residual.is_zero());
  CHECK_FALSE(minus.physical);
}
