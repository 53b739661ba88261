#include <random>

#include "charkit/errors.hpp"
#include "charkit/laurent.hpp"
#include "doctest.h"

using namespace charkit;

namespace {

CycNum z(unsigned m, long k = 1) { return CycNum::root_of_unity(m, k); }

CycNum random_cyc(std::mt19937& rng) {
  static const unsigned orders[] = {1, 2, 3, 4, 5, 6, 8, 12, 15, 20};
  const unsigned m = orders[rng() % std::size(orders)];
  std::vector<Rational> c(m);
  for (auto& x : c) x = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
  for (auto& x : c) x.canonicalize();
  return CycNum::from_powers(m, c);
}

LaurentPoly random_laurent(std::mt19937& rng) {
  LaurentPoly p;
  const int n = static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(static_cast<int>(rng() % 9) - 4, random_cyc(rng));
  return p;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  for (unsigned m = 1; m <= 60; ++m) CHECK(cyclotomic_polynomial(m).size() == euler_phi(m) + 1);
}

TEST_CASE("conjugation") {
  CHECK(z(4).conj() == -z(4));
  CHECK(CycNum(Rational(3, 2)).conj() == CycNum(Rational(3, 2)));
  CHECK((1 + z(4)).conj() == 1 - z(4));
}

TEST_CASE("field arithmetic") {
  CHECK(z(4) * z(4) == CycNum(-1));
  CHECK((1 + z(4)) * (1 - z(4)) == CycNum(2));
  CHECK(z(6) * z(6) == z(6) - 1);
  CHECK(z(3) == z(6) * z(6));
  CHECK(z(4) * z(3) == z(12, 7));
  CHECK(z(12, 3) == z(4));
  CHECK_THROWS_AS(CycNum().inverse(), DivisionByZero);
  CHECK((1 + z(5)).inverse() * (1 + z(5)) == CycNum(1));
}

TEST_CASE("rendering and parsing") {
  CHECK(z(4).str() == "z4");
  CHECK((-z(4)).str() == "-z4");
  CHECK((z(12, 3) + 1).str() == "1 + z4");
  CHECK(z(6).str() == "1 + z3");
  CHECK(CycNum(Rational(-3, 2)).str() == "-3/2");
  CHECK(CycNum().str() == "0");
  CHECK((2 * z(8, 2) - z(8, 3)).str() == "2*z8^2 - z8^3");
  for (const char* s : {"0", "1", "-1/2", "z4", "-z4", "1 + z4", "3/2 - 2*z5^3", "z3^2"}) {
    CycNum a = CycNum::parse(s);
    CHECK(CycNum::parse(a.str()) == a);
  }
  CHECK(CycNum::parse("z3^2") == -1 - z(3));
  CHECK_THROWS_AS(CycNum::parse("z"), ParseError);
  CHECK_THROWS_AS(CycNum::parse("1 +"), ParseError);
  CHECK_THROWS_AS(CycNum::parse(""), ParseError);
}

TEST_CASE("random conjugation and inversion") {
  std::mt19937 rng(7);
  for (int i = 0; i < 10000; ++i) {
    CycNum a = random_cyc(rng);
    CHECK(a.conj().conj() == a);
  }
  for (int i = 0; i < 500; ++i) {
    CycNum a = random_cyc(rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == CycNum(1));
  }
}

TEST_CASE("Laurent ring axioms and v -> 1") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b).at_one() == a.at_one() + b.at_one());
    CHECK((a * b).at_one() == a.at_one() * b.at_one());
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("Laurent rendering") {
  LaurentPoly p = LaurentPoly::v(7) - 2 * LaurentPoly::q() + LaurentPoly(CycNum(1) + z(4)) * LaurentPoly::v(-1);
  CHECK(p.str() == "v^7 - 2*v^2 + (1 + z4)*v^-1");
  CHECK(LaurentPoly::from_term_strings(p.to_term_strings()) == p);
  CHECK(LaurentPoly().str() == "0");
  CHECK((LaurentPoly::v() - 1).str() == "v - 1");
}

TEST_CASE("polynomial gcd and rational functions") {
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly one(1);
  auto [quot, rem] = poly_divrem(q * q - 1, q - 1);
  CHECK(quot == q + 1);
  CHECK(rem.is_zero());
  CHECK(poly_gcd((q - 1) * (q + 2), (q - 1) * (q + 3)) == q - 1);

  RatFunc a(q - 1, q + 1);
  RatFunc b(q + 1, q - 1);
  CHECK(a * b == RatFunc(1));
  CHECK((a + b) * RatFunc(q * q - 1) == RatFunc(2 * q * q + 2));
  CHECK(RatFunc(q * q - 1, q - 1) == RatFunc(q + 1));
  CHECK(RatFunc(q * q - 1, q - 1).is_laurent());
  CHECK(RatFunc(LaurentPoly::v(3), LaurentPoly::v(5)) == RatFunc(LaurentPoly::v(-2)));
  CHECK_THROWS_AS(RatFunc(one, LaurentPoly()), DivisionByZero);
  CHECK_THROWS_AS(RatFunc(one, q - 1).at_one(), DivisionByZero);
}

TEST_CASE("specialization at sqrt(q)") {
  CHECK(laurent_specialize(LaurentPoly::v(7), 2, 2).rational == CycNum(128));
  CHECK(laurent_specialize(LaurentPoly::v(7), 2, 2).is_rational());
  CHECK(laurent_specialize(LaurentPoly::q() - 1, 2, 1).rational == CycNum(1));
  QuadraticValue odd = laurent_specialize(LaurentPoly::v(7), 2, 1);
  CHECK(odd.rational == CycNum(0));
  CHECK(odd.sqrt_coeff == CycNum(8));
  CHECK(odd.str() == "8*sqrt(2)");
  CHECK(laurent_specialize(LaurentPoly::v(-1), 3, 1).sqrt_coeff == CycNum(Rational(1, 3)));
  CHECK_THROWS_AS(laurent_specialize(LaurentPoly::v(), 4, 1), UnsupportedSpecialization);
  CHECK_THROWS_AS(laurent_specialize(LaurentPoly::v(), 2, 0), UnsupportedSpecialization);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    CycNum r = sqrt_prime_cyc(p);
    CHECK(r * r == CycNum(static_cast<long>(p)));
    CHECK(r.conj() == r);
  }
  // 8*sqrt(2) squared is 128
  CycNum e = odd.to_cyc();
  CHECK(e * e == CycNum(128));
}
