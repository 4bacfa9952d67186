#include "doctest.h"

#include <random>

#include "cmaps/kernel.hpp"
#include "cmaps/series.hpp"

using namespace cmaps;

namespace {

const Truncation tr(6, 3, 3);

Series tt() { return Series::t(tr); }
Series x(int i) { return Series::x(tr, i); }
Monomial mono(int t, std::vector<int> xs) { return Monomial(t, std::move(xs)); }

Series random_series(std::mt19937& rng) {
  std::uniform_int_distribution<int> te(0, 3), xd(0, 2), var(1, 3), num(-4, 4), den(1, 3);
  Series s(tr);
  for (int k = 0; k < 5; ++k) {
    std::vector<int> xs;
    for (int j = xd(rng); j > 0; --j) xs.push_back(var(rng));
    s.add_term(Monomial(te(rng), xs), ratio(num(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("addition") {
  CHECK(tt() + tt() == tt() * Rational(2));
  CHECK((tt() + x(1) * tt()) + (-(x(1) * tt())) == tt());
  const Series a = Series::monomial(tr, mono(2, {2}), 3) + Series::monomial(tr, mono(2, {2}), 1);
  CHECK(a.coeff(mono(2, {2})) == 4);
}

TEST_CASE("multiplication") {
  CHECK(tt() * tt() == Series::monomial(tr, mono(2, {}), 1));
  const Series u = tt() + x(1) * tt();
  const Series sq = u * u;
  CHECK(sq.coeff(mono(2, {})) == 1);
  CHECK(sq.coeff(mono(2, {1})) == 2);
  CHECK(sq.coeff(mono(2, {1, 1})) == 1);
  CHECK(sq.terms().size() == 3);
  const Truncation small(1, 1, 1);
  CHECK((Series::t(small) * Series::t(small)).is_zero());
}

TEST_CASE("powers") {
  CHECK(pow(tt(), 3) == Series::monomial(tr, mono(3, {}), 1));
  CHECK(pow(tt() + x(1) * tt(), 2) == (tt() + x(1) * tt()) * (tt() + x(1) * tt()));
  CHECK(pow(tt(), 0) == Series::constant(tr, 1));
  CHECK(pow(compute_R(tr).at_x_zero(), 4) == Series::monomial(tr, mono(4, {}), 1));
}

TEST_CASE("derivative and integral") {
  CHECK(d_dt(pow(tt(), 3)) == Series::monomial(tr, mono(2, {}), 3));
  CHECK(d_dt(Series::monomial(tr, mono(2, {2}), 1)) == Series::monomial(tr, mono(1, {2}), 2));
  CHECK(d_dt(Series::constant(tr, 1)).is_zero());
  CHECK(integrate_dt(Series::monomial(tr, mono(2, {}), 3)) == pow(tt(), 3));
  CHECK(integrate_dt(Series::monomial(tr, mono(2, {}), 6)) == Series::monomial(tr, mono(3, {}), 2));
}

TEST_CASE("coefficient access") {
  CHECK((tt() + x(1) * tt()).coeff(mono(1, {1})) == 1);
  CHECK(tt().coeff(mono(3, {})) == 0);
  CHECK_THROWS_AS(tt().coeff(mono(7, {})), std::out_of_range);
  CHECK_THROWS_AS(tt().coeff(mono(1, {1, 1, 1, 1})), std::out_of_range);
  CHECK_THROWS_AS(tt().coeff(mono(1, {4})), std::out_of_range);
}

TEST_CASE("mismatched truncations are rejected") {
  const Series a = Series::t(Truncation(3, 1, 1));
  const Series b = Series::t(Truncation(4, 1, 1));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(Truncation(-1, 0, 1), std::invalid_argument);
}

TEST_CASE("fixed points") {
  const Truncation t2(4, 2, 2);
  CHECK(solve_fixpoint([&](const Series&) { return Series::t(t2); }, t2) == Series::t(t2));
  const Series geo = solve_fixpoint([&](const Series& X) { return Series::t(t2) + Series::x(t2, 1) * X; }, t2);
  CHECK(geo == Series::t(t2) + Series::monomial(t2, mono(1, {1}), 1) + Series::monomial(t2, mono(1, {1, 1}), 1));
  // a non-contracting update cannot converge
  CHECK_THROWS_AS(solve_fixpoint([&](const Series& X) { return Series::t(t2) + X * Rational(2); }, t2),
                  std::runtime_error);
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    const Series a = random_series(rng), b = random_series(rng), c = random_series(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(mul(a, b) == mul_serial(a, b));
  }
}

TEST_CASE("integral then derivative is the identity below t_max") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Series a = random_series(rng).restrict_to(Truncation(6, 3, 3));
    Series low(tr);
    for (const auto& [m, c] : a.terms())
      if (m.t_exp < tr.t_max) low.add_term(m, c);
    CHECK(d_dt(integrate_dt(low)) == low);
  }
}

TEST_CASE("truncation monotonicity") {
  const Truncation big(8, 4, 4), small(5, 2, 2);
  CHECK(compute_R(big).restrict_to(small) == compute_R(small));
  CHECK(compute_Rp(3, big).restrict_to(small) == compute_Rp(3, small));
  CHECK(pow(compute_R(big), 3).restrict_to(small) == pow(compute_R(small), 3));
}

TEST_CASE("rendering") {
  const Truncation t1(3, 1, 2);
  const Series r = compute_R(t1);
  const std::string text = r.to_text();
  CHECK(text.find("t^2 x2^1 : 3/1\n") != std::string::npos);
  CHECK(text.find("t^1 : 1/1\n") == 0);
  const auto j = r.to_json();
  CHECK(j["t_max"] == 3);
  CHECK(j["terms"][0]["coeff"] == "1/1");
}
