#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "charkit/errors.hpp"
#include "charkit/groups.hpp"
#include "charkit/laurent.hpp"

namespace charkit {

/// Element (g, sigma) of M(G): g is the representative of conjugacy class
/// class_index, sigma is row char_index of the character table of C_G(g).
struct MPair {
  int class_index = 0;
  int char_index = 0;
  bool canonical = true;

  friend bool operator==(const MPair& a, const MPair& b) {
    return a.class_index == b.class_index && a.char_index == b.char_index;
  }
  friend bool operator<(const MPair& a, const MPair& b) {
    return a.class_index != b.class_index ? a.class_index < b.class_index : a.char_index < b.char_index;
  }
  std::string str() const;
};

/// Conjugacy classes of G with the character tables of the centralizers of
/// their representatives; everything the pairing needs.
class MSetData {
 public:
  explicit MSetData(FiniteGroup g);

  const FiniteGroup& group() const { return g_; }
  const ConjugacyData& classes() const { return cd_; }
  /// Canonical pairs, ordered by (class_index, char_index).
  const std::vector<MPair>& pairs() const { return pairs_; }
  bool contains(const MPair& x) const;
  /// Table of C_G(g) for the representative g of class c.
  const CharTable& centralizer_table(int c) const { return cent_tables_[c]; }
  /// sigma(h) for sigma = row chi of Irr(C_G(g_c)) and h (element index of G) in C_G(g_c).
  CycNum centralizer_value(int c, int chi, int h) const;
  CycNum pairing(const MPair& x, const MPair& y) const;

 private:
  FiniteGroup g_;
  ConjugacyData cd_;
  std::vector<FiniteGroup> cents_;
  std::vector<ConjugacyData> cent_cd_;
  std::vector<CharTable> cent_tables_;
  std::vector<MPair> pairs_;
};

std::vector<MPair> m_set(const FiniteGroup& g);
/// Throws IndexOutOfRange for pairs outside M(G).
CycNum pairing(const FiniteGroup& g, const MPair& x, const MPair& y);

struct FourierMatrix {
  std::shared_ptr<const MSetData> data;
  std::vector<MPair> mpairs;
  std::vector<std::vector<CycNum>> entries;

  bool is_hermitian() const;
  bool is_involution() const;
};

/// Throws InvariantViolation unless the matrix is hermitian and squares to 1.
FourierMatrix fourier_matrix(const FiniteGroup& g);
/// Same, for a group given by name (see parse_group). Cached per name.
const FourierMatrix& fourier_matrix(const std::string& group_name);

struct FamilyMember {
  std::string kind;  // "principal", "cuspidal", or "series" (Harish-Chandra induced)
  std::string label;
  MPair mpair;
  int delta = 1;
  CycNum lambda{1};
};

struct Family {
  std::string id;
  std::string group_name;
  std::vector<FamilyMember> members;

  const FamilyMember& member(const std::string& label) const;
  const FamilyMember& member_at(const MPair& x) const;
  bool has_member(const std::string& label) const;
};

struct FamilyDataset {
  std::string type;
  std::vector<Family> families;
  std::string provenance;

  /// Family containing the given label. Throws KeyMismatch.
  const Family& family_of(const std::string& label) const;
};

enum class Direction { rho_to_R, R_to_rho };

/// Values of almost characters R_x keyed by mpair, or of unipotent characters keyed by member label.
using AlmostValues = std::map<MPair, LaurentPoly>;
using UnipotentValues = std::map<std::string, LaurentPoly>;

/// R_x = sum_rho {x_rho, x} Delta(x_rho) rho. Throws KeyMismatch unless keys are exactly the members.
AlmostValues almost_transform(const Family& fam, const UnipotentValues& rho);
/// rho = Delta(x_rho) sum_x conj{x_rho, x} R_x. Throws KeyMismatch unless keys are exactly M(G).
UnipotentValues almost_transform(const Family& fam, const AlmostValues& r);

FamilyDataset parse_family_dataset(const std::string& json_text);
/// Reads and validates; throws SchemaError, KeyMismatch, ConsistencyError or PinningError.
FamilyDataset load_family_dataset(const std::string& path);
/// All load-time checks on an already parsed dataset.
void check_family_dataset(const FamilyDataset& ds);

/// Degree encoded in a principal label "phi_<degree>_<b>". Throws ParseError.
long principal_degree(const std::string& label);

}  // namespace charkit
