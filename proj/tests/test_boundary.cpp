#include "doctest.h"

#include "cmaps/boundary.hpp"
#include "cmaps/kernel.hpp"

using namespace cmaps;

namespace {
Monomial mono(int t, std::vector<int> xs = {}) { return Monomial(t, std::move(xs)); }
BoundarySpec spec(int p, std::vector<int> ls) { return BoundarySpec{p, std::move(ls)}; }
}  // namespace

TEST_CASE("alpha") {
  CHECK(alpha(2, 1) == 1);
  CHECK(alpha(2, 4) == 12);
  CHECK(alpha(3, 3) == 6);
  CHECK(alpha(3, 4) == 12);
  // p = 2 agrees with l! / (floor(l/2)! floor((l-1)/2)!)
  for (int l = 1; l <= 12; ++l) CHECK(alpha(2, l) == factorial(l) / (factorial(l / 2) * factorial((l - 1) / 2)));
}

TEST_CASE("derived quantities") {
  const auto q = derive(spec(3, {3, 3}));
  CHECK(q.epsilon == 6);
  CHECK(q.d == 2);
  CHECK(q.s == 4);
  CHECK(q.v == 4);
  CHECK(q.c == 1);
  CHECK(derive(spec(3, {2, 4})).c == 2);
}

TEST_CASE("slicings counts") {
  CHECK(slicings_count(spec(2, {4})) == 2);
  CHECK(slicings_count(spec(2, {1, 1})) == 1);
  CHECK(slicings_count(spec(2, {2, 2})) == 2);
  CHECK(slicings_count(spec(2, {1, 3})) == 3);
  CHECK(slicings_count(spec(2, {3, 3})) == 12);
  CHECK(slicings_count(spec(2, {2, 2, 2})) == 8);
  CHECK(slicings_count(spec(3, {3})) == 1);
  CHECK(slicings_count(spec(3, {3, 3})) == 9);
  CHECK(slicings_count(spec(3, {2, 4})) == 12);
}

TEST_CASE("Catalan numbers from one boundary") {
  for (int a = 1; a <= 6; ++a) CHECK(slicings_count(spec(2, {2 * a})) == binomial(2 * a, a) / (a + 1));
}

TEST_CASE("parity errors") {
  CHECK_THROWS_AS(slicings_count(spec(2, {1, 1, 1, 1})), BoundaryParityError);
  CHECK_THROWS_AS(slicings_count(spec(2, {1, 2})), BoundaryParityError);
  CHECK_THROWS_AS(slicings_count(spec(3, {1, 1, 1})), BoundaryParityError);
  CHECK_THROWS_AS(gf_boundaries(spec(2, {1, 1, 1, 1}), Truncation(4, 1, 1)), BoundaryParityError);
  try {
    spec(2, {1, 3, 5, 7}).validate();
    FAIL("expected a parity error");
  } catch (const BoundaryParityError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("unsupported boundary parity") == 0);
    CHECK(msg.find("4 or more is an open case") != std::string::npos);
  }
  CHECK_THROWS_AS(spec(1, {2}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(spec(2, {}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(spec(2, {0, 2}).validate(), std::invalid_argument);
}

TEST_CASE("generating functions") {
  const Truncation tr(6, 2, 3);
  const Series r = compute_R(tr);
  CHECK(gf_boundaries(spec(2, {2, 2}), tr) == pow(r, 2) * Rational(2));
  CHECK(gf_boundaries(spec(2, {2, 2}), tr).at_x_zero() == Series::monomial(tr, mono(2), 2));
  CHECK(gf_boundaries(spec(2, {1, 1}), tr) == r);
  CHECK(gf_boundaries(spec(2, {1, 3}), tr) == pow(r, 2) * Rational(3));
  const Truncation padded(7, 2, 3);
  const Series rp = compute_R(padded);
  CHECK(gf_boundaries(spec(2, {2, 2, 2}), tr) == (pow(rp, 2) * d_dt(rp) * Rational(8)).restrict_to(tr));
  CHECK(gf_boundaries(spec(2, {2, 2, 2}), tr).at_x_zero() == Series::monomial(tr, mono(2), 8));
  const Series r3 = compute_Rp(3, tr);
  CHECK(gf_boundaries(spec(3, {3}), tr) == integrate_dt(pow(r3, 2)) * Rational(3));
  CHECK(gf_boundaries(spec(3, {3}), tr).at_x_zero() == Series::monomial(tr, mono(3), 1));
  CHECK(gf_boundaries(spec(3, {2, 4}), tr) == pow(r3, 4) * Rational(12));
  CHECK(gf_boundaries(spec(2, {4}), tr).at_x_zero() == Series::monomial(tr, mono(3), 2));
}

TEST_CASE("evaluation at x = 0 is the slicings count") {
  const std::vector<std::vector<int>> lists = {{2}, {4}, {6}, {8}, {1, 1}, {1, 3}, {2, 2}, {3, 5}, {2, 2, 2},
                                               {1, 1, 2}, {1, 3, 4}, {2, 2, 2, 2}, {1, 1, 2, 2}};
  for (const auto& ls : lists) {
    const BoundarySpec sp = spec(2, ls);
    const auto q = derive(sp);
    const Truncation tr(q.v + 1, 0, 1);
    CHECK(gf_boundaries(sp, tr).at_x_zero() == Series::monomial(tr, mono(q.v), Rational(slicings_count(sp))));
  }
  for (const auto& ls : std::vector<std::vector<int>>{{3}, {6}, {3, 3}, {2, 4}, {1, 5}, {3, 3, 3}, {1, 2, 3}}) {
    const BoundarySpec sp = spec(3, ls);
    const auto q = derive(sp);
    const Truncation tr(q.v + 1, 0, 1);
    CHECK(gf_boundaries(sp, tr).at_x_zero() == Series::monomial(tr, mono(q.v), Rational(slicings_count(sp))));
  }
}

TEST_CASE("kernel reuse matches the padded computation") {
  const BoundarySpec sp = spec(2, {2, 2, 4});
  const Truncation tr(5, 2, 3);
  const Series kernel = compute_R(Truncation(6, 2, 3));
  CHECK(gf_boundaries_from_kernel(sp, kernel) == gf_boundaries(sp, tr));
  CHECK_THROWS_AS(gf_boundaries_from_kernel(spec(2, {2, 2, 2, 2, 2, 2, 2, 2}), compute_R(Truncation(3, 1, 1))),
                  std::invalid_argument);
}

TEST_CASE("closed forms for two and three boundaries") {
  const Truncation tr(6, 2, 3);
  const Series r = compute_R(tr);
  CHECK(eynard_two(2, 2, tr) == pow(r, 2) * Rational(2));
  CHECK(eynard_two(1, 3, tr) == pow(r, 2) * Rational(3));
  CHECK(eynard_three(2, 2, 2, tr) == gf_boundaries(spec(2, {2, 2, 2}), tr));
  CHECK_THROWS_AS(eynard_two(1, 2, tr), BoundaryParityError);
  CHECK_THROWS_AS(eynard_three(1, 1, 1, tr), BoundaryParityError);
}

TEST_CASE("quasi reduction identities") {
  const Truncation tr(6, 2, 3);
  // alpha(2a1-1) alpha(2a2+1) G_{2a1,2a2} = alpha(2a1) alpha(2a2) G_{2a1-1,2a2+1}
  for (int a1 = 1; a1 <= 3; ++a1)
    for (int a2 = 1; a2 <= 2; ++a2) {
      const Series lhs = gf_boundaries(spec(2, {2 * a1, 2 * a2, 2}), tr) * Rational(alpha(2, 2 * a1 - 1) * alpha(2, 2 * a2 + 1));
      const Series rhs = gf_boundaries(spec(2, {2 * a1 - 1, 2 * a2 + 1, 2}), tr) * Rational(alpha(2, 2 * a1) * alpha(2, 2 * a2));
      CHECK(lhs == rhs);
    }
  const Truncation wide(7, 2, 3);
  CHECK(gf_boundaries(spec(2, {1, 1}), tr) * Rational(2) == d_dt(gf_boundaries(spec(2, {2}), wide)).restrict_to(tr));
  CHECK(gf_boundaries(spec(2, {1, 1, 4}), tr) * Rational(2) == d_dt(gf_boundaries(spec(2, {2, 4}), wide)).restrict_to(tr));
  for (int p = 3; p <= 4; ++p)
    for (int d = 1; d < p; ++d) {
      const Series lhs = gf_boundaries(spec(p, {d, p - d}), tr) * Rational(p);
      const Series rhs = d_dt(gf_boundaries(spec(p, {p}), wide)).restrict_to(tr) * Rational(d * (p - d));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("single boundary derivative uses exponent (p-1)a") {
  const Truncation tr(6, 2, 3), wide(7, 2, 3);
  for (int p = 2; p <= 4; ++p)
    for (int a = 1; a <= 2; ++a) {
      const Series lhs = d_dt(gf_boundaries(spec(p, {p * a}), wide)).restrict_to(tr);
      CHECK(lhs == pow(compute_Rp(p, tr), (p - 1) * a) * Rational(binomial(p * a, a)));
    }
}

TEST_CASE("rooted maps") {
  const Truncation tr(5, 2, 3);
  const Series m = rooted_maps_gf(2, tr);
  CHECK(d_dt(m).restrict_to(Truncation(4, 2, 3)) == (compute_R(tr) * Rational(2)).restrict_to(Truncation(4, 2, 3)));
  CHECK(m.at_x_zero() == Series::monomial(tr, mono(2), 1));
  CHECK(m.coeff(mono(2, {1})) == 1);
  CHECK(m.coeff(mono(0)) == 0);
}
