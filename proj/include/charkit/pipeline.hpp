#pragma once

#include <string>
#include <vector>

#include "charkit/coxeter.hpp"
#include "charkit/fourier.hpp"
#include "charkit/groups.hpp"
#include "charkit/hecke.hpp"
#include "charkit/laurent.hpp"

namespace charkit {

/// Bundled dataset path: $CHARKIT_DATA/<file> if the variable is set, else the install data directory.
std::string default_data_path(const std::string& file);

/// The four rational classes in the regular unipotent class of E7(q), q = 2^f,
/// indexed by A(u0) = Z/4.
struct RegUnipModel {
  FiniteGroup component_group;
  int a0 = -1;                           // element index of the distinguished generator
  std::vector<int> class_elements;       // a0^0, a0^1, a0^2, a0^3
  std::vector<std::string> class_labels;  // "u0", "u_a0", "u_a0^2", "u_a0^3"
  std::vector<int> u0_word;              // u0 = u_1(1) u_2(1) ... u_7(1), 1-based
  bool frobenius_trivial = true;
  /// u0 ~ u0^-1: the conjugator taking s1...s7 to s7...s1 transfers to the root subgroups.
  ConjugatorResult reversal_certificate;
  bool u0_self_inverse = false;
};

RegUnipModel regular_class_model();

/// Linear character of A(u0) sending a0 to z (z = z4 or -z4), as values at a0^0..a0^3.
std::vector<CycNum> component_character(const RegUnipModel& m, const CycNum& value_at_a0);

struct CharValueTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<LaurentPoly>> entries;  // [row][col]

  const LaurentPoly& at(const std::string& row, const std::string& col) const;
};

/// chi_{A_1}, chi_{A_2} on "elsewhere", u0, u_a0, u_a0^2, u_a0^3: v^7 sigma_i(a),
/// sigma_1(a0) = z4, sigma_2(a0) = -z4, and 0 off the regular class.
CharValueTable chi_cuspidal_table();

/// Almost characters with nonzero values at a regular unipotent element, keyed by
/// the label of the member sitting at their mpair.
struct RegularAlmostValues {
  LaurentPoly trivial;  // R at the family of phi_1_0
  LaurentPoly x1;       // E7[z4]
  LaurentPoly x2;       // E7[-z4]
  LaurentPoly x0;       // non-principal member of the family of phi_56_3
};

/// Unipotent character values determined by the given almost character values
/// (all other almost characters vanish), for every member of every family.
UnipotentValues unipotent_values(const FamilyDataset& fam, const RegularAlmostValues& r);

/// sum_phi rho_phi(u) Tr(T_{w_c}, V_phi) for the almost character values r at u.
LaurentPoly hecke_class_sum(const CoxeterTraceDataset& traces, const FamilyDataset& fam, const RegularAlmostValues& r);

/// The sum at u0 with R_{x_i}(u0) = xi v^7 and R_{x0}(u0) = delta q^2. Throws
/// PinningError unless it equals the closed form q^7 (1 + 2 xi + delta).
LaurentPoly cell_sum(const CoxeterTraceDataset& traces, const FamilyDataset& fam, int xi, int delta);

struct AuditEntry {
  std::string kind;  // "axiom" or "computation"
  std::string statement;
  std::string anchor;
};

struct SignSolution {
  int xi = 0;
  std::vector<int> admissible_delta;
  std::vector<AuditEntry> audit;

  std::string to_json() const;
};

/// Keeps the (xi, delta) whose cell sum is strictly positive. Without the
/// positivity axiom nothing is excluded and the call throws AmbiguousSign.
SignSolution solve_signs(const CoxeterTraceDataset& traces, const FamilyDataset& fam, bool positivity_axiom = true);

/// Values of the family of the two 512s at u0, u_a0, u_a0^2, u_a0^3, through the
/// Fourier transform of R_{x_i} = xi chi_{A_i}.
CharValueTable final_value_table(const FamilyDataset& fam, int xi);

struct BacksolveResult {
  LaurentPoly r;         // R_{x0}(u_a0^2)
  LaurentPoly residual;  // the sum with r substituted; zero by construction
  bool physical = true;  // false for xi = -1, which the sign argument rules out
  std::string note;
};

/// Solves sum_phi rho_phi(u_a0^2) Tr(T_{w_c}, V_phi) = 0 for r = R_{x0}(u_a0^2):
/// q^7 (1 - 2 xi) + q^5 r = 0.
BacksolveResult empty_cell_backsolve(const CoxeterTraceDataset& traces, const FamilyDataset& fam, int xi);

}  // namespace charkit
