#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace charkit {

using IntMatrix = std::vector<std::vector<int>>;

/// Cartan matrix with A[i][j] = <alpha_i^vee, alpha_j>, nodes in Bourbaki numbering.
struct CartanDatum {
  std::string type_label;
  IntMatrix cartan;
  std::vector<std::string> node_names;

  int rank() const { return static_cast<int>(cartan.size()); }
  bool operator==(const CartanDatum& o) const { return cartan == o.cartan; }
};

/// Parses "E7", "A2", "B3", "G2", "A2xA1", ... Throws ParseError or InvalidCartan.
CartanDatum parse_cartan(std::string_view label);
/// Wraps an explicit matrix after validation. Throws InvalidCartan.
CartanDatum cartan_from_matrix(const IntMatrix& a, std::string label = "custom");
/// Throws InvalidCartan unless `a` is a Cartan matrix of finite type.
void validate_cartan(const IntMatrix& a);

/// Weyl group element as a permutation of root indices.
struct WeylElement {
  std::vector<uint16_t> perm;
  int length = 0;

  bool operator==(const WeylElement& o) const { return perm == o.perm; }
  bool operator<(const WeylElement& o) const { return perm < o.perm; }
};

class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }

  /// Roots in simple-root coordinates. Indices [0, N) are positive, ordered by
  /// height; index i + N holds the negative of root i; simple root s has index s.
  const std::vector<std::vector<int>>& roots() const { return roots_; }
  bool is_positive(int r) const { return r < num_positive_; }
  int negate(int r) const { return r < num_positive_ ? r + num_positive_ : r - num_positive_; }
  /// Root index of a coordinate vector, or -1.
  int index_of(const std::vector<int>& coords) const;
  /// Image of root r under the simple reflection s.
  int reflect(int s, int r) const { return refl_[s][r]; }

  WeylElement identity() const;
  WeylElement simple_reflection(int s) const;
  WeylElement multiply(const WeylElement& x, const WeylElement& y) const;
  WeylElement inverse(const WeylElement& w) const;
  /// Conjugate u w u^-1.
  WeylElement conjugate(const WeylElement& u, const WeylElement& w) const;
  /// Reduced expression (0-based generators) by stripping right descents.
  std::vector<int> reduced_word(const WeylElement& w) const;
  /// True when l(ws) < l(w).
  bool has_right_descent(const WeylElement& w, int s) const;
  bool has_left_descent(const WeylElement& w, int s) const;

 private:
  int length_of(const std::vector<uint16_t>& perm) const;

  CartanDatum datum_;
  std::vector<std::vector<int>> roots_;
  int num_positive_ = 0;
  std::vector<std::vector<uint16_t>> refl_;
  std::map<std::vector<int>, int> index_;
};

/// Throws InvalidCartan for an invalid datum.
std::shared_ptr<const RootSystem> build_root_system(const CartanDatum& datum);

/// Product s_{w[0]} s_{w[1]} ... (0-based indices). Throws IndexOutOfRange.
WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word);

/// Longest element of the parabolic subgroup generated by J (0-based).
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& J);

/// sigma_s = w0(J + s) w0(J) for each s outside J, in increasing order of s.
std::vector<WeylElement> relative_weyl_generators(const RootSystem& rs, const std::vector<int>& J);

/// Order of the subgroup generated by `gens`, by closure. Throws OrderCapExceeded.
unsigned long long generated_order(const RootSystem& rs, const std::vector<WeylElement>& gens,
                                   unsigned long long cap = 1000000);

/// |W| by orbit-stabilizer on fundamental weights down the parabolic chain.
unsigned long long group_order(const RootSystem& rs);
unsigned long long parabolic_order(const RootSystem& rs, const std::vector<int>& J);

/// s_{o[0]} s_{o[1]} ... for a permutation o of all nodes (0-based).
WeylElement coxeter_element(const RootSystem& rs, const std::vector<int>& ordering);

struct ConjugatorResult {
  /// u as a word (0-based); u c_source u^-1 = c_target.
  std::vector<int> word;
  /// The shift moves in the order they were applied; word is their reversal.
  std::vector<int> moves;
  bool verified = false;
};

/// Conjugates one Coxeter element to another by shift moves: the first (or last)
/// letter of a Coxeter word moves to the other end under conjugation by it.
ConjugatorResult coxeter_conjugator(const RootSystem& rs, const std::vector<int>& source,
                                    const std::vector<int>& target);

/// Parses "1,2,3" into 0-based node indices. Throws ParseError.
std::vector<int> parse_node_list(std::string_view text);

}  // namespace charkit
