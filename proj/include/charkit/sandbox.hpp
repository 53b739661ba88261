#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "charkit/cyclotomic.hpp"
#include "charkit/errors.hpp"
#include "charkit/laurent.hpp"

namespace charkit {

/// F_q for q in {2, 3, 4}; F_4 = F_2[x]/(x^2 + x + 1) with x encoded as 2.
class FiniteField {
 public:
  explicit FiniteField(int q);
  int q() const { return q_; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_[a][b]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a][b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  uint8_t inv(uint8_t a) const { return inv_[a]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }

 private:
  int q_;
  uint8_t add_[4][4]{}, mul_[4][4]{}, neg_[4]{}, inv_[4]{};
};

/// n x n matrix over F_q, row-major, n <= 3.
using SmallMat = std::array<uint8_t, 9>;

/// Element of S_n as images of 0..n-1 (matrix e_j -> e_{images[j]}).
struct SnPerm {
  std::vector<int> images;
  int length = 0;  // number of inversions

  bool operator==(const SnPerm& o) const { return images == o.images; }
  /// Reduced word in the simple transpositions s_i = (i, i+1), 0-based.
  std::vector<int> reduced_word() const;
  std::string str() const;
};

/// GL_n(F_q) enumerated in full, with Bruhat labels.
class LieGroupSandbox {
 public:
  LieGroupSandbox(int n, int q);

  int n() const { return n_; }
  int q() const { return field_.q(); }
  const FiniteField& field() const { return field_; }
  size_t order() const { return elements_.size(); }
  const SmallMat& element(int i) const { return elements_[i]; }
  /// Index of a matrix, or -1 if singular.
  int index_of(const SmallMat& m) const;
  int identity() const { return identity_; }
  int multiply(int a, int b) const;
  int inverse(int a) const { return inverse_[a]; }

  const std::vector<int>& borel() const { return borel_; }
  const std::vector<int>& torus() const { return torus_; }
  /// All of S_n, sorted by length; index 0 is the identity.
  const std::vector<SnPerm>& weyl() const { return weyl_; }
  /// Element indices of the permutation matrices, aligned with weyl().
  const std::vector<int>& weyl_reps() const { return weyl_reps_; }
  int weyl_index(const SnPerm& w) const;
  /// Product in S_n, as indices into weyl().
  int weyl_multiply(int a, int b) const;
  /// w with g in B w B, as an index into weyl().
  int cell_label(int g) const { return cell_[g]; }
  size_t cell_size(int w) const { return cell_sizes_[w]; }

  bool is_unipotent(int g) const;
  /// Jordan-form representatives of the unipotent classes, by partition of n
  /// in reverse lexicographic order: the regular class comes first.
  const std::vector<int>& unipotent_reps() const { return unipotent_reps_; }
  const std::vector<std::vector<int>>& unipotent_types() const { return unipotent_types_; }

  /// Number of flags 0 < V_1 < ... < V_k < F_q^n with dim V_i = dims[i] (strictly increasing) fixed by g.
  long fixed_partial_flags(int g, const std::vector<int>& dims) const;
  /// Complete flags, each given by a matrix whose leading columns span it.
  const std::vector<int>& flag_reps() const { return flag_reps_; }

 private:
  uint32_t code(const SmallMat& m) const;
  SmallMat mat_mul(const SmallMat& a, const SmallMat& b) const;
  SmallMat invert(const SmallMat& m) const;
  int rank(const SmallMat& m, int row0, int col1) const;
  int bruhat(const SmallMat& m) const;
  uint64_t image_mask(const SmallMat& g, uint64_t mask) const;

  int n_;
  FiniteField field_;
  std::vector<SmallMat> elements_;
  std::vector<int32_t> index_;  // code -> element index
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<int> borel_, torus_;
  std::vector<SnPerm> weyl_;
  std::vector<int> weyl_reps_;
  std::vector<int> cell_;
  std::vector<size_t> cell_sizes_;
  std::vector<int> unipotent_reps_;
  std::vector<std::vector<int>> unipotent_types_;
  // subspaces of F_q^n as bitmasks over vector codes, by dimension
  std::vector<std::vector<uint64_t>> subspaces_;
  std::vector<int> flag_reps_;
};

/// Throws SizeCapExceeded unless n <= 3 and q <= 4; UnsupportedSpecialization for other bad input.
LieGroupSandbox build_sandbox(int n, int q);

/// True when b = x a x^-1 for some x in the sandbox group.
bool are_conjugate(const LieGroupSandbox& sb, int a, int b);

/// Outcome of an exhaustive check; JSON form {"check", "n", "q", "cases", "failures"}.
struct SandboxReport {
  std::string check;
  int n = 0;
  int q = 0;
  size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string to_json() const;
};

/// Cells meeting the product set (union of cells a) * (union of cells b); exact,
/// since such a product is a union of double cosets and equals B (a B b) B.
std::set<int> cell_product(const LieGroupSandbox& sb, const std::set<int>& a, const std::set<int>& b);

/// For every reduced word of every w, the product of the generator cells is the cell of w.
SandboxReport verify_cell_products(const LieGroupSandbox& sb);

using IntMatrix64 = std::vector<std::vector<long long>>;
/// Operator T_w on functions on G/B: (T_w f)(x) = sum of f(y) over flags y in position w relative to x.
IntMatrix64 convolution_operator(const LieGroupSandbox& sb, int w);
/// T_e = 1, T_s T_w follows the Iwahori-Hecke rule at the numeric q, braid relations hold.
SandboxReport convolution_hecke_check(const LieGroupSandbox& sb);

/// Principal series unipotent characters rho_phi, phi in Irr(S_n) by partition.
struct SandboxCharTable {
  std::vector<std::string> labels;   // "[3]", "[2,1]", "[1,1,1]"
  std::vector<long> phi_degrees;     // dim of phi
  std::vector<std::vector<long>> values;  // [phi][unipotent class], classes as in unipotent_reps()
};

/// rho_phi(g) for every phi: trivial, Steinberg as the alternating sum of
/// parabolic permutation characters, and for n = 3 the middle one as (pi - 1 - St)/2.
/// Throws NonIntegerCharacter if the extraction does not give integers.
std::vector<long> principal_series_values(const LieGroupSandbox& sb, int g);
SandboxCharTable sandbox_char_table(const LieGroupSandbox& sb);

/// Evaluates a polynomial in v at v^2 = q. Throws UnsupportedSpecialization on odd powers or irrational coefficients.
Rational eval_at_q(const LaurentPoly& p, long q);

struct HeckeUchResult {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

/// lhs = |O_g meet BwB| |C_G(g)| / |B| by counting; rhs = sum_phi rho_phi(g) Tr(T_w, V_phi) at the sandbox q.
HeckeUchResult heckeuch_verify(const LieGroupSandbox& sb, int g, int w);
/// heckeuch_verify for every w and every unipotent class representative, or with
/// all_elements for every g in G: the count side is evaluated once per conjugacy
/// class, the character side at each element. One case per (g, w).
SandboxReport heckeuch_report(const LieGroupSandbox& sb, bool all_elements = false);

}  // namespace charkit
