#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "charkit/cyclotomic.hpp"

namespace charkit {

/// Permutation of {0, ..., n-1} by images.
using Perm = std::vector<uint16_t>;

Perm perm_compose(const Perm& a, const Perm& b);  // (ab)(x) = a(b(x))
Perm perm_inverse(const Perm& a);
Perm perm_identity(size_t n);
unsigned perm_order(const Perm& a);

struct PermHash {
  size_t operator()(const Perm& p) const noexcept;
};

/// A finite permutation group, fully enumerated. Elements are sorted
/// lexicographically, so the identity sits at index 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::vector<Perm> sorted_elements, std::vector<Perm> generators);

  size_t order() const { return elements_.size(); }
  size_t degree() const { return elements_.empty() ? 0 : elements_[0].size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(int i) const { return elements_[i]; }
  /// Index of a permutation, or -1 if it is not in the group.
  int index_of(const Perm& p) const;
  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const { return orders_[a]; }
  /// Least common multiple of the element orders.
  unsigned exponent() const { return exponent_; }

  /// Subgroup on the given element indices (must be closed).
  FiniteGroup subgroup(const std::vector<int>& members) const;

 private:
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<int> table_;  // full multiplication table for small groups
  unsigned exponent_ = 1;
};

/// Closure of the generators. Throws OrderCapExceeded.
FiniteGroup enumerate_group(const std::vector<Perm>& gens, size_t cap = 100000);

/// Parses "perm: (1,2)(3,4); (1,3)" (1-based points) or a preset name
/// Z1..Z6, S3, S4, S5, D4, Q8. Throws ParseError.
FiniteGroup parse_group(std::string_view text);

struct ConjugacyData {
  /// Class members (element indices, ascending); classes ordered by size, then least member.
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // element index -> class index
  std::vector<int> reps;      // least member of each class
  /// Centralizer of each representative: all members, and a generating set.
  std::vector<std::vector<int>> centralizers;
  std::vector<std::vector<int>> centralizer_gens;
};

ConjugacyData conjugacy_data(const FiniteGroup& g);

/// Class-level data the Dixon-Schneider method needs. Groups too large to
/// enumerate as FiniteGroup can supply this directly.
struct ClassStructure {
  unsigned long long group_order = 1;
  std::vector<unsigned long long> class_sizes;  // class 0 must be the identity
  std::vector<int> inverse_class;
  std::vector<int> element_orders;
  /// power_class(k, j): class of g_k^j.
  std::function<int(int k, int j)> power_class;
  /// class_matrix(i)[j][k] = #{x in C_i : x^-1 g_k in C_j}.
  std::function<std::vector<std::vector<long long>>(int i)> class_matrix;
};

ClassStructure class_structure(const FiniteGroup& g, const ConjugacyData& cd);

struct CharTable {
  unsigned long long group_order = 1;
  std::vector<unsigned long long> class_sizes;
  std::vector<int> class_reps;  // element indices when built from a FiniteGroup
  std::vector<int> inverse_class;
  /// table[chi][class]; trivial character first, then by degree and values.
  std::vector<std::vector<CycNum>> table;

  size_t num_classes() const { return class_sizes.size(); }
  CycNum degree(size_t chi) const { return table[chi][0]; }
};

/// Dixon-Schneider: common eigenvectors of the class matrices modulo a prime
/// p = 1 mod exponent, lifted to cyclotomic values of order `exponent`.
CharTable dixon_schneider(const ClassStructure& cs, unsigned exponent);

CharTable character_table(const FiniteGroup& g);
CharTable character_table(const FiniteGroup& g, const ConjugacyData& cd);

/// Sum_C |C| a(C) conj(b(C)) / |G|.
CycNum class_inner_product(const CharTable& t, const std::vector<CycNum>& a, const std::vector<CycNum>& b);

}  // namespace charkit
