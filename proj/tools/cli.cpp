// cmaps: series, counts, the BDG construction and the verification suites.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmaps/bijections.hpp"
#include "cmaps/boundary.hpp"
#include "cmaps/kernel.hpp"
#include "cmaps/mobile.hpp"
#include "cmaps/tree_enum.hpp"
#include "cmaps/verify.hpp"
#include "json.hpp"

using namespace cmaps;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3, kParity = 4 };

struct Options {
  int p = 2;
  int t_max = 6;
  int xdeg_max = 2;
  std::optional<int> var_max;
  bool json = false;

  std::string which = "R";
  std::vector<int> boundaries;
  std::string map_file;
  std::optional<int> vertex;
  std::string suite;
  std::string budget = "default";

  // verify budgets; unset ones come from the preset
  std::optional<int> max_edges, max_epsilon, kernel_t_max, kernel_xdeg_max, family_whites, family_unmarked,
      max_internal, bdg_max_edges, forest_components, forest_whites, max_darts;
};

Truncation truncation(const Options& o) {
  return Truncation(o.t_max, o.xdeg_max, o.var_max.value_or(std::max(1, o.t_max)));
}

void print_series(const Series& s, bool json) {
  if (json) std::cout << s.to_json().dump(2) << '\n';
  else std::cout << s.to_text();
}

int cmd_series(const Options& o) {
  const Truncation tr = truncation(o);
  if (o.p < 2) throw CLI::ValidationError("--p", "must be at least 2");
  if (o.which == "R") print_series(compute_Rp(o.p, tr), o.json);
  else if (o.which == "T") print_series(compute_Tp(o.p, tr), o.json);
  else print_series(rooted_maps_gf(o.p, tr), o.json);
  return kOk;
}

int cmd_gf(const Options& o) {
  const BoundarySpec spec{o.p, o.boundaries};
  spec.validate();
  print_series(gf_boundaries(spec, truncation(o)), o.json);
  return kOk;
}

int cmd_count(const Options& o) {
  const BoundarySpec spec{o.p, o.boundaries};
  spec.validate();
  const Integer n = slicings_count(spec);
  if (o.json) std::cout << nlohmann::json{{"p", o.p}, {"boundaries", o.boundaries}, {"count", to_string(n)}}.dump() << '\n';
  else std::cout << n << '\n';
  return kOk;
}

nlohmann::json read_json(const std::string& path) {
  if (path == "-") return nlohmann::json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return nlohmann::json::parse(in);
}

int cmd_bdg(const Options& o) {
  const PlanarMap m = PlanarMap::from_json(read_json(o.map_file));
  const int v0 = o.vertex.value_or(m.pointed_vertex().value_or(0));
  const PlaneTree t = bdg_forward(m, v0);

  std::map<int, int> faces, blacks;
  for (const auto& f : m.faces()) ++faces[static_cast<int>(f.size())];
  int whites = 0;
  for (int u = 0; u < t.size(); ++u) {
    if (t.node(u).color == Color::Black) ++blacks[t.degree(u)];
    if (t.node(u).color == Color::White) ++whites;
  }
  std::map<int, std::pair<int, int>> table;
  for (auto [d, n] : faces) table[d].first = n;
  for (auto [d, n] : blacks) table[d].second = n;
  const int vertices = static_cast<int>(m.vertices().size());
  const char* cls = mobile_class_name(validate_mobile(t, 2));
  const bool degrees_ok = faces == blacks;
  const bool whites_ok = whites == vertices - 1;

  if (o.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [d, fb] : table) rows.push_back({{"degree", d}, {"faces", fb.first}, {"blacks", fb.second}});
    nlohmann::json out{{"mobile", t.to_json()},
                       {"report",
                        {{"class", cls},
                         {"pointed_vertex", v0},
                         {"map_vertices", vertices},
                         {"whites", whites},
                         {"degree_table", rows},
                         {"degrees_match", degrees_ok},
                         {"whites_match", whites_ok}}}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << t.to_json().dump() << '\n';
    std::cout << "class: " << cls << '\n';
    std::cout << "whites: " << whites << " (map vertices " << vertices << ", pointed " << v0 << ")\n";
    std::cout << "degree faces blacks\n";
    for (const auto& [d, fb] : table) std::cout << d << ' ' << fb.first << ' ' << fb.second << '\n';
  }
  return degrees_ok && whites_ok ? kOk : kVerifyFailed;
}

VerifyOptions preset(const std::string& name) {
  VerifyOptions v;
  if (name == "small") {
    v.max_edges = 3;
    v.max_epsilon = 3;
    v.kernel_t_max = 4;
    v.kernel_xdeg_max = 2;
    v.t_max = 6;
    v.family_unmarked = 1;
    v.max_internal = 3;
    v.bdg_max_edges = 3;
    v.forest_components = 2;
    v.forest_whites = 4;
  }
  return v;
}

int cmd_verify(const Options& o, bool p_given, bool t_given, bool x_given) {
  VerifyOptions v = preset(o.budget);
  if (p_given) v.p = o.p;
  if (t_given) v.t_max = o.t_max;
  if (x_given) v.xdeg_max = o.xdeg_max;
  auto set = [](int& field, const std::optional<int>& x) {
    if (x) field = *x;
  };
  set(v.max_edges, o.max_edges);
  set(v.max_epsilon, o.max_epsilon);
  set(v.kernel_t_max, o.kernel_t_max);
  set(v.kernel_xdeg_max, o.kernel_xdeg_max);
  set(v.family_whites, o.family_whites);
  set(v.family_unmarked, o.family_unmarked);
  set(v.max_internal, o.max_internal);
  set(v.bdg_max_edges, o.bdg_max_edges);
  set(v.forest_components, o.forest_components);
  set(v.forest_whites, o.forest_whites);
  set(v.max_darts, o.max_darts);

  const Report r = run_suite(o.suite, v);
  if (o.json) std::cout << r.to_json().dump(2) << '\n';
  else std::cout << r.to_text();
  if (r.failures() > 0) return kVerifyFailed;
  return r.budget_errors.empty() ? kOk : kBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of planar maps and constellations with boundaries"};
  app.set_config("--config", "", "key=value file with default settings");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  auto* p_opt = app.add_option("--p", o.p, "face degree parameter p >= 2")->check(CLI::Range(2, 64));
  auto* t_opt = app.add_option("--t-max", o.t_max, "largest power of t")->check(CLI::NonNegativeNumber);
  auto* x_opt = app.add_option("--xdeg-max", o.xdeg_max, "largest total degree in the x_i")->check(CLI::NonNegativeNumber);
  app.add_option("--var-max", o.var_max, "largest variable index x_i tracked")->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json, "JSON output");

  auto* series = app.add_subcommand("series", "kernel R_p, blossoming T_p or rooted maps M");
  series->add_option("--which", o.which, "R, T, or M (C is an alias of M)")
      ->transform(CLI::IsMember({"R", "T", "M", "C"}))
      ->each([&](const std::string& s) {
        if (s == "C") o.which = "M";
      });

  auto* gf = app.add_subcommand("gf", "generating function of maps with numbered boundaries");
  auto* count = app.add_subcommand("count", "number of maps whose only faces are the boundaries");
  for (auto* sub : {gf, count})
    sub->add_option("--boundaries", o.boundaries, "comma separated boundary degrees")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);

  auto* bdg = app.add_subcommand("bdg", "mobile of a vertex-pointed planar map");
  bdg->add_option("map", o.map_file, "map JSON file, - for stdin")->required();
  bdg->add_option("--vertex", o.vertex, "pointed vertex (default: the map's own, else 0)")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "check formulas and bijections against exhaustive searches");
  verify->add_option("suite", o.suite, "slicings, gf-coeff, kernels, eynard, lemmas, bijections, all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--budget", o.budget, "small or default")->check(CLI::IsMember({"small", "default"}));
  verify->add_option("--max-edges", o.max_edges, "edges in map searches, p = 2");
  verify->add_option("--max-epsilon", o.max_epsilon, "edges in map searches, p >= 3");
  verify->add_option("--kernel-t-max", o.kernel_t_max);
  verify->add_option("--kernel-xdeg-max", o.kernel_xdeg_max);
  verify->add_option("--family-whites", o.family_whites);
  verify->add_option("--family-unmarked", o.family_unmarked);
  verify->add_option("--max-internal", o.max_internal, "internal vertices of blossoming trees");
  verify->add_option("--bdg-max-edges", o.bdg_max_edges);
  verify->add_option("--forest-components", o.forest_components);
  verify->add_option("--forest-whites", o.forest_whites);
  verify->add_option("--max-darts", o.max_darts, "ceiling for map searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*series) return cmd_series(o);
    if (*gf) return cmd_gf(o);
    if (*count) return cmd_count(o);
    if (*bdg) return cmd_bdg(o);
    return cmd_verify(o, p_opt->count() > 0, t_opt->count() > 0, x_opt->count() > 0);
  } catch (const BoundaryParityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParity;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
