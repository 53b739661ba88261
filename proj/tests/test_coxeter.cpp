#include <algorithm>
#include <numeric>
#include <random>

#include "charkit/coxeter.hpp"
#include "charkit/errors.hpp"
#include "doctest.h"

using namespace charkit;

namespace {

std::vector<int> all_nodes(const RootSystem& rs) {
  std::vector<int> v(rs.rank());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<WeylElement> simple_gens(const RootSystem& rs) {
  std::vector<WeylElement> g;
  for (int s = 0; s < rs.rank(); ++s) g.push_back(rs.simple_reflection(s));
  return g;
}

}  // namespace

TEST_CASE("Cartan parsing and validation") {
  CartanDatum e7 = parse_cartan("E7");
  CHECK(e7.rank() == 7);
  // alpha_2 attached to alpha_4; chain 1-3-4-5-6-7
  CHECK(e7.cartan[1][3] == -1);
  CHECK(e7.cartan[0][2] == -1);
  CHECK(e7.cartan[2][3] == -1);
  CHECK(e7.cartan[5][6] == -1);
  CHECK(e7.cartan[0][1] == 0);
  CHECK(e7.cartan[1][2] == 0);
  int edges = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) edges += e7.cartan[i][j] != 0;
  CHECK(edges == 6);

  CHECK(parse_cartan("A2xA1").rank() == 3);
  CHECK(parse_cartan("B_3").cartan[2][1] == -2);
  CHECK_THROWS_AS(parse_cartan("Q3"), ParseError);
  CHECK_THROWS_AS(parse_cartan("E9"), InvalidCartan);
  CHECK_THROWS_AS(cartan_from_matrix({{2, -1}, {-1, 3}}), InvalidCartan);
  CHECK_THROWS_AS(cartan_from_matrix({{2, -2}, {-2, 2}}), InvalidCartan);  // affine A1
  CHECK_THROWS_AS(cartan_from_matrix({{2, 1}, {1, 2}}), InvalidCartan);
  CHECK_THROWS_AS(cartan_from_matrix({{2, -1}, {0, 2}}), InvalidCartan);
}

TEST_CASE("root counts") {
  struct Case {
    const char* type;
    int positive;
    unsigned long long order;
  };
  // order oracle: product of the degrees of the basic invariants
  const Case cases[] = {{"A1", 1, 2},       {"A2", 3, 6},          {"A3", 6, 24},       {"B2", 4, 8},
                        {"G2", 6, 12},      {"B3", 9, 48},         {"C3", 9, 48},       {"D4", 12, 192},
                        {"F4", 24, 1152},   {"E6", 36, 51840},     {"A2xA1", 4, 12},    {"A5", 15, 720},
                        {"E7", 63, 2903040}, {"E8", 120, 696729600}};
  for (const auto& c : cases) {
    CAPTURE(c.type);
    auto rs = build_root_system(parse_cartan(c.type));
    CHECK(rs->num_positive() == c.positive);
    CHECK(rs->num_roots() == 2 * c.positive);
    CHECK(group_order(*rs) == c.order);
    for (int r = 0; r < rs->num_positive(); ++r)
      for (int x : rs->roots()[r]) CHECK(x >= 0);
    const WeylElement w0 = longest_element(*rs, all_nodes(*rs));
    CHECK(w0.length == c.positive);
    CHECK(rs->multiply(w0, w0) == rs->identity());
  }
  CHECK(group_order(*build_root_system(parse_cartan("E7"))) == 2ull * 6 * 8 * 10 * 12 * 14 * 18);
}

TEST_CASE("orbit-stabilizer agrees with brute-force closure") {
  for (const char* t : {"A2", "A3", "B2", "B3", "G2", "D4", "A2xA1", "F4"}) {
    CAPTURE(t);
    auto rs = build_root_system(parse_cartan(t));
    CHECK(generated_order(*rs, simple_gens(*rs)) == group_order(*rs));
  }
}

TEST_CASE("words, lengths and descents") {
  auto rs = build_root_system(parse_cartan("A2"));
  CHECK(weyl_from_word(*rs, {0, 0}) == rs->identity());
  CHECK(weyl_from_word(*rs, {0, 0}).length == 0);
  CHECK(weyl_from_word(*rs, {0, 1, 0}) == weyl_from_word(*rs, {1, 0, 1}));
  CHECK_THROWS_AS(weyl_from_word(*rs, {2}), IndexOutOfRange);

  auto e7 = build_root_system(parse_cartan("E7"));
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> word(rng() % 30);
    for (auto& s : word) s = static_cast<int>(rng() % 7);
    WeylElement w = weyl_from_word(*e7, word);
    for (int s = 0; s < 7; ++s) {
      int ls = e7->multiply(e7->simple_reflection(s), w).length;
      CHECK(std::abs(ls - w.length) == 1);
    }
    std::vector<int> red = e7->reduced_word(w);
    CHECK(static_cast<int>(red.size()) == w.length);
    CHECK(weyl_from_word(*e7, red) == w);
  }
  WeylElement w0 = longest_element(*e7, all_nodes(*e7));
  CHECK(weyl_from_word(*e7, e7->reduced_word(w0)).length == 63);
  // -w0 fixes every simple root
  for (int s = 0; s < 7; ++s) CHECK(w0.perm[s] == e7->negate(s));
}

TEST_CASE("longest elements of parabolics") {
  auto rs = build_root_system(parse_cartan("A2"));
  CHECK(longest_element(*rs, {}) == rs->identity());
  CHECK(longest_element(*rs, {0, 1}).length == 3);
  auto e7 = build_root_system(parse_cartan("E7"));
  CHECK(longest_element(*e7, {1, 2, 3, 4}).length == 12);
  for (const char* t : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "B4", "C5", "D5", "D6", "E6", "F4", "G2"}) {
    auto r = build_root_system(parse_cartan(t));
    WeylElement w0 = longest_element(*r, all_nodes(*r));
    CHECK(w0.length == r->num_positive());
    CHECK(r->multiply(w0, w0) == r->identity());
  }
}

TEST_CASE("relative Weyl generators") {
  auto a2 = build_root_system(parse_cartan("A2"));
  auto gens = relative_weyl_generators(*a2, {});
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == a2->simple_reflection(0));
  CHECK(gens[1] == a2->simple_reflection(1));

  // the parabolic A1 inside A2 is not self-opposed relative to s_2:
  // w0 * s_1 = s_1 s_2 has order 3
  auto rel = relative_weyl_generators(*a2, {0});
  REQUIRE(rel.size() == 1);
  CHECK(rel[0] == weyl_from_word(*a2, {0, 1}));
  CHECK(generated_order(*a2, rel) == 3);

  auto e7 = build_root_system(parse_cartan("E7"));
  auto d4 = relative_weyl_generators(*e7, {1, 2, 3, 4});
  REQUIRE(d4.size() == 3);
  for (const auto& s : d4) CHECK(e7->multiply(s, s) == e7->identity());
  CHECK(generated_order(*e7, d4) == 48);

  auto b3 = build_root_system(parse_cartan("B3"));
  for (const auto& s : relative_weyl_generators(*b3, {2})) CHECK(b3->multiply(s, s) == b3->identity());
}

TEST_CASE("relative generators are involutions when w0(J + s) normalizes J") {
  for (const char* t : {"A3", "B3", "C3", "D4", "A2xA1", "F4", "B2", "G2"}) {
    auto rs = build_root_system(parse_cartan(t));
    const int n = rs->rank();
    int admissible = 0;
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
      std::vector<int> J;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) J.push_back(i);
      auto gens = relative_weyl_generators(*rs, J);
      size_t k = 0;
      for (int s = 0; s < n; ++s) {
        if (mask >> s & 1) continue;
        std::vector<int> js = J;
        js.push_back(s);
        const WeylElement w = longest_element(*rs, js);
        bool normalizes = true;
        for (int j : J) {
          const int img = rs->negate(w.perm[j]);
          normalizes = normalizes && img < n && (mask >> img & 1);
        }
        if (normalizes) {
          ++admissible;
          CHECK(rs->multiply(gens[k], gens[k]) == rs->identity());
        }
        ++k;
      }
    }
    CHECK(admissible > 0);
  }
}

TEST_CASE("Coxeter conjugation") {
  auto a2 = build_root_system(parse_cartan("A2"));
  CHECK(coxeter_conjugator(*a2, {0, 1}, {0, 1}).word.empty());
  auto c = coxeter_conjugator(*a2, {0, 1}, {1, 0});
  CHECK(c.word == std::vector<int>{0});
  CHECK(c.verified);

  auto e7 = build_root_system(parse_cartan("E7"));
  std::vector<int> src = all_nodes(*e7), tgt = src;
  std::reverse(tgt.begin(), tgt.end());
  auto r = coxeter_conjugator(*e7, src, tgt);
  CHECK(r.verified);
  // the recorded moves replay to the same conjugation
  WeylElement x = coxeter_element(*e7, src);
  for (int s : r.moves) x = e7->conjugate(e7->simple_reflection(s), x);
  CHECK(x == coxeter_element(*e7, tgt));

  for (const char* t : {"D4", "B3", "G2", "A2xA1", "F4"}) {
    auto rs = build_root_system(parse_cartan(t));
    std::vector<int> o = all_nodes(*rs);
    std::vector<int> base = o;
    do {
      CHECK(coxeter_conjugator(*rs, base, o).verified);
    } while (std::next_permutation(o.begin(), o.end()));
  }
  CHECK_THROWS_AS(coxeter_conjugator(*a2, {0, 0}, {0, 1}), IndexOutOfRange);
}

TEST_CASE("node list parsing") {
  CHECK(parse_node_list("1,2,3") == std::vector<int>{0, 1, 2});
  CHECK(parse_node_list(" 7, 6 ,5") == std::vector<int>{6, 5, 4});
  CHECK_THROWS_AS(parse_node_list("1,a"), ParseError);
  CHECK_THROWS_AS(parse_node_list("0"), ParseError);
}
