#include <set>

#include "charkit/errors.hpp"
#include "charkit/hecke.hpp"
#include "charkit/sandbox.hpp"
#include "doctest.h"

using namespace charkit;

namespace {

int weyl_of(const LieGroupSandbox& sb, std::vector<int> images) {
  SnPerm w{std::move(images), 0};
  return sb.weyl_index(w);
}

// literal product set {xy : x in cell a, y in cell b}, as cell labels
std::set<int> exhaustive_product(const LieGroupSandbox& sb, int a, int b) {
  std::vector<int> ca, cb;
  for (size_t g = 0; g < sb.order(); ++g) {
    if (sb.cell_label(static_cast<int>(g)) == a) ca.push_back(static_cast<int>(g));
    if (sb.cell_label(static_cast<int>(g)) == b) cb.push_back(static_cast<int>(g));
  }
  std::set<int> out;
  for (int x : ca)
    for (int y : cb) out.insert(sb.cell_label(sb.multiply(x, y)));
  return out;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(build_sandbox(2, 2).order() == 6);
  CHECK(build_sandbox(3, 2).order() == 168);
  CHECK(build_sandbox(2, 3).borel().size() == 12);
  const LieGroupSandbox f4 = build_sandbox(2, 4);
  CHECK(f4.order() == 15 * 12);
  CHECK(f4.torus().size() == 9);
  CHECK_THROWS_AS(build_sandbox(4, 2), SizeCapExceeded);
  CHECK_THROWS_AS(build_sandbox(2, 5), SizeCapExceeded);
  CHECK_THROWS_AS(build_sandbox(2, 1), UnsupportedSpecialization);
}

TEST_CASE("F4 arithmetic") {
  FiniteField f(4);
  for (uint8_t a = 1; a < 4; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  // x^2 = x + 1
  CHECK(f.mul(2, 2) == 3);
  CHECK(f.add(f.mul(2, 2), f.add(2, 1)) == 0);
}

TEST_CASE("Bruhat cells") {
  for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    CAPTURE(n);
    CAPTURE(q);
    const LieGroupSandbox sb = build_sandbox(n, q);
    size_t total = 0;
    for (size_t w = 0; w < sb.weyl().size(); ++w) {
      total += sb.cell_size(static_cast<int>(w));
      CHECK(sb.cell_label(sb.weyl_reps()[w]) == static_cast<int>(w));
    }
    CHECK(total == sb.order());
    // B w B is stable under both B actions
    for (int g : {1, static_cast<int>(sb.order()) / 2, static_cast<int>(sb.order()) - 1})
      for (int b : sb.borel()) {
        CHECK(sb.cell_label(sb.multiply(b, g)) == sb.cell_label(g));
        CHECK(sb.cell_label(sb.multiply(g, b)) == sb.cell_label(g));
      }
  }
}

TEST_CASE("cell products") {
  const LieGroupSandbox s2 = build_sandbox(2, 3);
  CHECK(cell_product(s2, {1}, {1}) == std::set<int>{0, 1});
  CHECK(exhaustive_product(s2, 1, 1) == std::set<int>{0, 1});
  CHECK(verify_cell_products(s2).ok());

  const LieGroupSandbox s3 = build_sandbox(3, 2);
  const int s1 = weyl_of(s3, {1, 0, 2});
  const int s2_ = weyl_of(s3, {0, 2, 1});
  const int s1s2 = s3.weyl_multiply(s1, s2_);
  CHECK(cell_product(s3, {s1}, {s2_}) == std::set<int>{s1s2});
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(cell_product(s3, {a}, {b}) == exhaustive_product(s3, a, b));
  const SandboxReport rep = verify_cell_products(s3);
  CHECK(rep.ok());
  CHECK(rep.cases == 7);  // one reduced word per element, two for w0
  CHECK(verify_cell_products(build_sandbox(3, 4)).ok());
}

TEST_CASE("convolution algebra") {
  const LieGroupSandbox sb = build_sandbox(2, 3);
  const IntMatrix64 te = convolution_operator(sb, 0);
  const IntMatrix64 ts = convolution_operator(sb, 1);
  // T_s T_s = 3 T_e + 2 T_s
  const size_t n = te.size();
  CHECK(n == 4);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long long prod = 0;
      for (size_t k = 0; k < n; ++k) prod += ts[i][k] * ts[k][j];
      CHECK(prod == 3 * te[i][j] + 2 * ts[i][j]);
      CHECK(te[i][j] == (i == j));
    }
  for (auto [n3, q] : {std::pair{2, 2}, {2, 4}, {3, 2}, {3, 3}, {3, 4}}) {
    CAPTURE(n3);
    CAPTURE(q);
    const SandboxReport rep = convolution_hecke_check(build_sandbox(n3, q));
    CHECK(rep.ok());
    CHECK(rep.failures.empty());
  }
}

TEST_CASE("principal series characters") {
  for (int q : {2, 3, 4}) {
    CAPTURE(q);
    const LieGroupSandbox sb = build_sandbox(3, q);
    const SandboxCharTable t = sandbox_char_table(sb);
    REQUIRE(t.labels == std::vector<std::string>{"[3]", "[2,1]", "[1,1,1]"});
    // the identity is the last unipotent class
    const size_t one = sb.unipotent_reps().size() - 1;
    CHECK(t.values[1][one] == q * (q + 1));
    CHECK(t.values[2][one] == q * q * q);
    // St vanishes off the semisimple elements
    for (size_t c = 0; c < one; ++c) CHECK(t.values[2][c] == 0);
    for (size_t c = 0; c < sb.unipotent_reps().size(); ++c) {
      long pi = 0;
      for (size_t i = 0; i < t.labels.size(); ++i) pi += t.phi_degrees[i] * t.values[i][c];
      CHECK(pi == sb.fixed_partial_flags(sb.unipotent_reps()[c], {1, 2}));
    }
  }
  // orthonormality over the whole group
  for (auto [n, q] : {std::pair{2, 3}, {3, 2}, {3, 3}}) {
    const LieGroupSandbox sb = build_sandbox(n, q);
    const size_t k = n == 2 ? 2 : 3;
    std::vector<std::vector<long long>> gram(k, std::vector<long long>(k, 0));
    for (size_t g = 0; g < sb.order(); ++g) {
      const auto v = principal_series_values(sb, static_cast<int>(g));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) gram[i][j] += static_cast<long long>(v[i]) * v[j];
    }
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) CHECK(gram[i][j] == (i == j ? static_cast<long long>(sb.order()) : 0));
  }
}

TEST_CASE("regular unipotent elements are conjugate to their inverses") {
  for (auto [n, q] : {std::pair{2, 3}, {3, 2}, {3, 3}, {3, 4}}) {
    const LieGroupSandbox sb = build_sandbox(n, q);
    const int u = sb.unipotent_reps()[0];
    CHECK(sb.is_unipotent(u));
    CHECK(are_conjugate(sb, u, sb.inverse(u)));
  }
}

TEST_CASE("eval_at_q") {
  CHECK(eval_at_q(LaurentPoly::q(2) - LaurentPoly(1), 3) == 8);
  CHECK(eval_at_q(LaurentPoly::q(-1), 4) == Rational(1, 4));
  CHECK_THROWS_AS(eval_at_q(LaurentPoly::v(1), 2), UnsupportedSpecialization);
}

TEST_CASE("class counts against Hecke traces") {
  {
    const LieGroupSandbox sb = build_sandbox(2, 3);
    const HeckeUchResult r = heckeuch_verify(sb, sb.identity(), 0);
    CHECK(r.lhs == 4);
    CHECK(r.equal);
    const int u = sb.unipotent_reps()[0];
    const HeckeUchResult s = heckeuch_verify(sb, u, 1);
    // 1 * q + St(u) * (-1), St(u) = (fixed lines) - 1 = 0
    CHECK(s.rhs == 3);
    CHECK(s.equal);
  }
  for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}}) {
    CAPTURE(n);
    CAPTURE(q);
    const LieGroupSandbox sb = build_sandbox(n, q);
    const SandboxReport rep = heckeuch_report(sb);
    CHECK(rep.cases == sb.unipotent_reps().size() * sb.weyl().size());
    for (const auto& f : rep.failures) CAPTURE(f);
    CHECK(rep.ok());
  }
  const LieGroupSandbox sb = build_sandbox(3, 2);
  CHECK(heckeuch_report(sb).cases == 18);
  // non-unipotent elements too
  for (int g : {5, 50, 100, 150})
    for (int w = 0; w < 6; ++w) CHECK(heckeuch_verify(sb, g, w).equal);
  CHECK(heckeuch_report(sb).to_json() == R"({"check":"heckeuch","n":3,"q":2,"cases":18,"failures":[]})");
}

TEST_CASE("class counts at every element") {
  for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    CAPTURE(n);
    CAPTURE(q);
    const LieGroupSandbox sb = build_sandbox(n, q);
    const SandboxReport rep = heckeuch_report(sb, true);
    CHECK(rep.cases == sb.order() * sb.weyl().size());
    CHECK(rep.ok());
  }
}
