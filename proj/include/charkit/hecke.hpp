#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "charkit/coxeter.hpp"
#include "charkit/laurent.hpp"

namespace charkit {

/// Element of the generic Iwahori-Hecke algebra in the T-basis.
class HeckeElement {
 public:
  explicit HeckeElement(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {}

  /// c * T_w.
  static HeckeElement basis(std::shared_ptr<const RootSystem> rs, const WeylElement& w,
                            const LaurentPoly& c = LaurentPoly(1));
  static HeckeElement one(std::shared_ptr<const RootSystem> rs);
  static HeckeElement generator(std::shared_ptr<const RootSystem> rs, int s);

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system() const { return rs_; }
  const std::map<WeylElement, LaurentPoly>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  LaurentPoly coeff(const WeylElement& w) const;

  void add(const WeylElement& w, const LaurentPoly& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const LaurentPoly& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const LaurentPoly& c) { return a *= c; }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.support_ == b.support_; }

  /// T_s * this, by T_s T_w = T_sw if l(sw) > l(w), else q T_sw + (q - 1) T_w.
  HeckeElement left_mul_generator(int s) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::map<WeylElement, LaurentPoly> support_;
};

/// Throws DatumMismatch when the factors live over different Cartan data.
HeckeElement t_multiply(const HeckeElement& x, const HeckeElement& y);

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Matrix representation of the Hecke algebra, one matrix per simple generator.
struct IrrepModel {
  std::string label;
  CartanDatum datum;
  int dim = 0;
  std::vector<Matrix<RatFunc>> matrices;
};

/// Supported labels: "triv", "sign", "eps:<signs>" (one sign per node, '+' for
/// q and '-' for -1), "dihedral:<j>" for irreducible rank 2, and partitions
/// such as "[3,1]" for type A_{n-1} with n <= 6. Throws UnsupportedLabel.
IrrepModel build_irrep_model(const CartanDatum& datum, const std::string& label);

/// All labels build_irrep_model supports for the datum (one per irreducible).
std::vector<std::string> supported_labels(const CartanDatum& datum);

/// Coxeter matrix entry m_st from the Cartan matrix.
int coxeter_m(const CartanDatum& datum, int s, int t);

Matrix<RatFunc> model_word_product(const IrrepModel& model, const std::vector<int>& word);

/// Trace of T_w. Throws DatumMismatch if rs does not match the model.
LaurentPoly hecke_trace(const IrrepModel& model, const RootSystem& rs, const WeylElement& w);
LaurentPoly hecke_trace_word(const IrrepModel& model, const std::vector<int>& word);

/// Trace of T_c for a Coxeter element c of a Weyl group with Coxeter number h
/// and N positive roots: T_c^h = T_{w0}^2 acts on V_phi by q^{N + r} with
/// r = sum over reflections phi(t) / phi(1), so Tr(T_c) = phi(c) v^{2(N + r)/h}.
/// Throws InvariantViolation if phi(c) != 0 and the exponent is not integral.
LaurentPoly coxeter_trace(long degree, const Rational& reflection_sum, long value_at_c, int num_positive, int h);

struct ModelRelationReport {
  bool quadratic_ok = true;
  bool braid_ok = true;
  std::vector<std::string> failures;
  bool ok() const { return quadratic_ok && braid_ok; }
};

/// Checks (M - q)(M + 1) = 0 and the braid relations symbolically.
ModelRelationReport check_model_relations(const IrrepModel& model);

/// Traces of T_{w_c} for the E7 Coxeter element w_c = s1 s2 ... s7.
struct CoxeterTraceDataset {
  std::string type;
  std::vector<int> coxeter_word;  // 1-based, as stored
  std::map<std::string, LaurentPoly> traces;
  std::map<std::string, long> character_values;  // ordinary values at the Coxeter class
  std::map<std::string, long> degrees;
  std::string provenance;
};

CoxeterTraceDataset parse_coxeter_traces(const std::string& json_text);
/// Reads and validates the file. Throws SchemaError or ConsistencyError.
CoxeterTraceDataset load_coxeter_traces(const std::string& path);
/// Re-runs every load-time consistency check. Throws ConsistencyError.
void check_coxeter_traces(const CoxeterTraceDataset& ds);

}  // namespace charkit
