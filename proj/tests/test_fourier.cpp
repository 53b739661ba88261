#include <random>

#include "charkit/errors.hpp"
#include "charkit/fourier.hpp"
#include "doctest.h"

using namespace charkit;

namespace {

CycNum frac(long a, long b) { return CycNum(Rational(a, b)); }

}  // namespace

TEST_CASE("M(G) sizes") {
  CHECK(m_set(parse_group("Z1")).size() == 1);
  CHECK(m_set(parse_group("Z2")).size() == 4);
  CHECK(m_set(parse_group("S3")).size() == 8);
  CHECK(m_set(parse_group("Z4")).size() == 16);
  CHECK(m_set(parse_group("S4")).size() == 21);
  CHECK(m_set(parse_group("S5")).size() == 39);
  auto pairs = m_set(parse_group("S3"));
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
}

TEST_CASE("Z2 Fourier matrix") {
  FourierMatrix f = fourier_matrix(parse_group("Z2"));
  const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  REQUIRE(f.entries.size() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(f.entries[i][j] == frac(sign[i][j], 2));
  CHECK(fourier_matrix(parse_group("Z1")).entries == std::vector<std::vector<CycNum>>{{CycNum(1)}});
}

TEST_CASE("abelian pairing is sigma(h) conj(tau(g)) / |A|") {
  for (const char* name : {"Z3", "Z4", "Z6"}) {
    FiniteGroup g = parse_group(name);
    MSetData d(g);
    const CharTable& t = d.centralizer_table(0);
    const long n = static_cast<long>(g.order());
    for (const MPair& x : d.pairs())
      for (const MPair& y : d.pairs()) {
        const CycNum expect = t.table[x.char_index][y.class_index] * t.table[y.char_index][x.class_index].conj() / CycNum(n);
        CHECK(d.pairing(x, y) == expect);
      }
  }
}

TEST_CASE("S3 Fourier matrix against the known table") {
  FiniteGroup g = parse_group("S3");
  MSetData d(g);
  // known matrix in the order (1,1),(1,r),(1,eps),(g2,1),(g2,eps),(g3,1),(g3,th),(g3,th^2), in sixths
  const long m[8][8] = {{1, 2, 1, 3, 3, 2, 2, 2},     {2, 4, 2, 0, 0, -2, -2, -2}, {1, 2, 1, -3, -3, 2, 2, 2},
                        {3, 0, -3, 3, -3, 0, 0, 0},   {3, 0, -3, -3, 3, 0, 0, 0},  {2, -2, 2, 0, 0, 4, -2, -2},
                        {2, -2, 2, 0, 0, -2, 4, -2},  {2, -2, 2, 0, 0, -2, -2, 4}};
  // locate each named pair among the canonical ones
  std::vector<MPair> named(8);
  for (const MPair& x : d.pairs()) {
    const auto& cd = d.classes();
    const int rep = cd.reps[x.class_index];
    const unsigned ord = g.element_order(rep);
    const CharTable& t = d.centralizer_table(x.class_index);
    const CycNum deg = t.degree(x.char_index);
    const CycNum at_rep = d.centralizer_value(x.class_index, x.char_index, rep);
    if (ord == 1) named[deg == CycNum(2) ? 1 : (x.char_index == 0 ? 0 : 2)] = x;
    if (ord == 2) named[x.char_index == 0 ? 3 : 4] = x;
    if (ord == 3) named[at_rep == CycNum(1) ? 5 : (at_rep == CycNum::root_of_unity(3, 1) ? 6 : 7)] = x;
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(d.pairing(named[i], named[j]) == frac(m[i][j], 6));
  CHECK(d.pairing(named[0], named[0]) == frac(1, 6));
}

TEST_CASE("Fourier matrices are hermitian involutions") {
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z6", "S3", "S4", "S5", "D4", "Q8"}) {
    CAPTURE(name);
    FourierMatrix f = fourier_matrix(parse_group(name));
    CHECK(f.is_hermitian());
    CHECK(f.is_involution());
  }
  CHECK_THROWS_AS(pairing(parse_group("Z2"), MPair{0, 2}, MPair{0, 0}), IndexOutOfRange);
}

TEST_CASE("almost transform round trip") {
  std::mt19937 rng(3);
  for (const char* gname : {"Z2", "S3", "Z1"}) {
    const FourierMatrix& f = fourier_matrix(gname);
    Family fam;
    fam.id = "test";
    fam.group_name = gname;
    for (size_t i = 0; i < f.mpairs.size(); ++i)
      fam.members.push_back(FamilyMember{"principal", "m" + std::to_string(i), f.mpairs[i], i % 3 == 1 ? -1 : 1, CycNum(1)});
    for (int trial = 0; trial < 5; ++trial) {
      UnipotentValues rho;
      for (const auto& m : fam.members)
        rho[m.label] = LaurentPoly::monomial(static_cast<int>(rng() % 7) - 3, CycNum(static_cast<long>(rng() % 9) - 4)) +
                       LaurentPoly::v(static_cast<int>(rng() % 4)) * CycNum::root_of_unity(3, 1);
      CHECK(almost_transform(fam, almost_transform(fam, rho)) == rho);
    }
    UnipotentValues bad;
    bad["nope"] = LaurentPoly(1);
    CHECK_THROWS_AS(almost_transform(fam, bad), KeyMismatch);
  }
}

TEST_CASE("family of two 512s with the cuspidal pair") {
  Family fam;
  fam.id = "F0";
  fam.group_name = "Z2";
  const CycNum z = CycNum::root_of_unity(4, 1);
  fam.members = {{"principal", "phi_512_11", MPair{0, 0}, 1, CycNum(1)},
                 {"principal", "phi_512_12", MPair{0, 1}, 1, CycNum(1)},
                 {"cuspidal", "E7[z4]", MPair{1, 0}, -1, z},
                 {"cuspidal", "E7[-z4]", MPair{1, 1}, -1, -z}};
  const LaurentPoly chi1 = LaurentPoly::v(7) * z;
  const LaurentPoly chi2 = -LaurentPoly::v(7) * z;
  AlmostValues r{{MPair{0, 0}, LaurentPoly()}, {MPair{0, 1}, LaurentPoly()}, {MPair{1, 0}, chi1}, {MPair{1, 1}, chi2}};
  UnipotentValues rho = almost_transform(fam, r);
  CHECK(rho["phi_512_11"] == (chi1 + chi2) * frac(1, 2));
  CHECK(rho["E7[z4]"] == -(chi1 - chi2) * frac(1, 2));
  CHECK(rho["E7[z4]"] == -LaurentPoly::v(7) * z);
}
