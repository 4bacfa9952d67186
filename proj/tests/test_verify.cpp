#include "doctest.h"

#include "cmaps/verify.hpp"

using namespace cmaps;

namespace {

VerifyOptions small(int p) {
  VerifyOptions o;
  o.p = p;
  o.max_edges = 3;
  o.max_epsilon = 3;
  o.kernel_t_max = 4;
  o.kernel_xdeg_max = 2;
  o.t_max = 5;
  o.xdeg_max = 2;
  o.max_internal = 2;
  o.bdg_max_edges = 3;
  o.forest_components = 2;
  o.forest_whites = 4;
  return o;
}

}  // namespace

TEST_CASE("report bookkeeping") {
  Report r;
  CHECK(r.ok());
  r.add("a", true, "1", "1");
  r.add("b", false, "2", "3");
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.ok());
  const std::string text = r.to_text();
  CHECK(text.find("PASS a\n") != std::string::npos);
  CHECK(text.find("FAIL b expected 2 got 3") != std::string::npos);
  CHECK(text.find("1/2 passed") != std::string::npos);
  const auto j = r.to_json();
  CHECK(j["failed"] == 1);
  CHECK(j["cases"].size() == 2);

  Report budget;
  budget.budget_errors.push_back("big");
  CHECK(budget.failures() == 0);
  CHECK_FALSE(budget.ok());
  r.append(budget);
  CHECK(r.cases.size() == 2);
  CHECK(r.budget_errors.size() == 1);
}

TEST_CASE("small suites pass") {
  for (int p = 2; p <= 3; ++p) {
    CAPTURE(p);
    const VerifyOptions o = small(p);
    for (const Report& r : {verify_slicings(o), verify_gf_coeff(o), verify_kernels(o), verify_blossoming_series(o),
                            verify_blossoming_objects(o), verify_bdg(o), verify_aggregation(o)}) {
      CHECK(!r.cases.empty());
      CHECK(r.failures() == 0);
      CHECK(r.budget_errors.empty());
    }
  }
  CHECK(verify_catalan().ok());
}

TEST_CASE("map search ceiling is reported per case") {
  VerifyOptions o = small(2);
  o.max_edges = 3;
  o.max_darts = 4;
  const Report r = verify_slicings(o);
  CHECK(r.failures() == 0);
  CHECK(!r.budget_errors.empty());
  CHECK(!r.cases.empty());
}

TEST_CASE("suite names") {
  CHECK(suite_names().back() == "all");
  CHECK_THROWS_AS(run_suite("nope", VerifyOptions{}), std::invalid_argument);
  VerifyOptions o = small(2);
  CHECK(run_suite("slicings", o).ok());
}
