#pragma once

// Verification suites: closed forms and series against the brute-force
// oracles, and round trips of the bijections. Each case records what was
// expected and what was obtained.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cmaps {

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string expected;
  std::string got;
};

struct Report {
  std::vector<CaseResult> cases;
  std::vector<std::string> budget_errors;  // case ids whose search ran out of budget

  void add(std::string id, bool pass, std::string expected, std::string got);
  void append(const Report& other);
  int failures() const;
  bool ok() const { return failures() == 0 && budget_errors.empty(); }

  std::string to_text() const;  // one line per case, then a summary line
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::optional<int> p;      // restrict to one p where a suite covers several
  int max_edges = 4;         // map searches for p = 2
  int max_epsilon = 6;       // map searches for p >= 3
  int kernel_t_max = 6;      // kernel three-way check
  int kernel_xdeg_max = 3;
  int t_max = 8;             // series identities
  int xdeg_max = 3;
  int family_whites = 4;     // marked mobile families (p = 2 and 3)
  int family_unmarked = 2;
  int max_internal = 4;      // blossoming trees
  int bdg_max_edges = 4;
  int forest_components = 4; // aggregation: s <= this
  int forest_whites = 5;     // total whites in a forest
  int max_darts = 0;         // map search ceiling; 0 keeps the library default
};

Report verify_slicings(const VerifyOptions& o);      // slicings formula vs map search, all p requested
Report verify_catalan();
Report verify_gf_coeff(const VerifyOptions& o);
Report verify_kernels(const VerifyOptions& o);       // fixed point = Lagrange = mobile count
Report verify_blossoming_series(const VerifyOptions& o);
Report verify_eynard(const VerifyOptions& o);
Report verify_quasi_series(const VerifyOptions& o);
Report verify_families(const VerifyOptions& o);
Report verify_blossoming_objects(const VerifyOptions& o);
Report verify_bdg(const VerifyOptions& o);
Report verify_aggregation(const VerifyOptions& o);

/// Suite names: slicings, gf-coeff, kernels, eynard, lemmas, bijections, all.
const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name, const VerifyOptions& o);

}  // namespace cmaps
