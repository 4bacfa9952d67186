#include "cmaps/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cmaps/bijections.hpp"
#include "cmaps/boundary.hpp"
#include "cmaps/kernel.hpp"
#include "cmaps/mobile_gen.hpp"
#include "cmaps/oracles.hpp"

namespace cmaps {

void Report::add(std::string id, bool pass, std::string expected, std::string got) {
  cases.push_back({std::move(id), pass, std::move(expected), std::move(got)});
}

void Report::append(const Report& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
  budget_errors.insert(budget_errors.end(), other.budget_errors.begin(), other.budget_errors.end());
}

int Report::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : cases) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.pass) out << " expected " << c.expected << " got " << c.got;
    out << '\n';
  }
  for (const auto& b : budget_errors) out << "BUDGET " << b << '\n';
  out << cases.size() - static_cast<std::size_t>(failures()) << "/" << cases.size() << " passed";
  if (!budget_errors.empty()) out << ", " << budget_errors.size() << " over budget";
  out << '\n';
  return out.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases)
    j["cases"].push_back({{"id", c.id}, {"pass", c.pass}, {"expected", c.expected}, {"got", c.got}});
  j["budget_exceeded"] = budget_errors;
  j["passed"] = static_cast<int>(cases.size()) - failures();
  j["failed"] = failures();
  return j;
}

namespace {

std::string list_str(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

std::string profile_str(const std::map<int, int>& prof) {
  std::string s = "{";
  bool first = true;
  for (const auto& [i, n] : prof) {
    if (n == 0) continue;
    s += (first ? "" : ",") + std::to_string(i) + ":" + std::to_string(n);
    first = false;
  }
  return s + "}";
}

// partitions of n, parts in increasing order
std::vector<std::vector<int>> partitions(int n, int min_part = 1) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = min_part; first <= n; ++first)
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::map<int, int> as_profile(const std::vector<int>& parts) {
  std::map<int, int> m;
  for (int i : parts) ++m[i];
  return m;
}

bool admissible(int p, const std::vector<int>& b) {
  try {
    BoundarySpec{p, b}.validate();
    return true;
  } catch (const BoundaryParityError&) {
    return false;
  }
}

// every x-profile over indices 1..vars with total degree <= xdeg
std::vector<std::map<int, int>> x_profiles(int vars, int xdeg) {
  std::vector<std::map<int, int>> out;
  std::map<int, int> cur;
  std::function<void(int, int)> rec = [&](int index, int left) {
    if (index > vars) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      if (k > 0) cur[index] = k;
      else cur.erase(index);
      rec(index + 1, left - k);
    }
    cur.erase(index);
  };
  rec(1, xdeg);
  return out;
}

std::vector<int> ps_for(const VerifyOptions& o, std::vector<int> defaults) {
  if (o.p) return {*o.p};
  return defaults;
}

// runs body, turning a budget overrun into a report entry
void guarded(Report& r, const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const BudgetExceeded&) {
    r.budget_errors.push_back(id);
  }
}

void compare(Report& r, const std::string& id, const Integer& expected, const Integer& got) {
  r.add(id, expected == got, to_string(expected), to_string(got));
}

void compare_series(Report& r, const std::string& id, const Series& expected, const Series& got) {
  if (expected == got) {
    r.add(id, true, "equal", "equal");
    return;
  }
  // report the first differing term
  std::set<Monomial> ms;
  for (const auto& [m, c] : expected.terms()) ms.insert(m);
  for (const auto& [m, c] : got.terms()) ms.insert(m);
  for (const Monomial& m : ms) {
    const auto a = expected.terms().find(m), b = got.terms().find(m);
    const Rational ca = a == expected.terms().end() ? Rational(0) : a->second;
    const Rational cb = b == got.terms().end() ? Rational(0) : b->second;
    if (ca != cb) {
      r.add(id + " at t^" + std::to_string(m.t_exp) + " x" + profile_str(m.profile()), false, to_string(ca), to_string(cb));
      return;
    }
  }
  r.add(id, false, "same truncation", "different truncation");
}

MapQuery map_query(int p, const std::vector<int>& b, std::map<int, int> internal = {}, std::optional<int> v = std::nullopt) {
  MapQuery q;
  q.p = p;
  q.boundaries = b;
  q.internal = std::move(internal);
  q.vertices = v;
  return q;
}

MapSearchLimits search_limits(const VerifyOptions& o) {
  MapSearchLimits lim;
  if (o.max_darts > 0) lim.max_edges_p2 = lim.max_edges_hyper = o.max_darts / 2;
  return lim;
}

std::int64_t count_in(const ProfileCounts& pc, const Profile& pr) {
  const auto it = pc.find(pr);
  return it == pc.end() ? 0 : it->second;
}

std::map<int, int> half_profile(const Profile& pr, int p) {
  std::map<int, int> m;
  for (int d : pr.degrees) ++m[d / p];
  return m;
}

Integer coeff_int(const Series& s, int t, const std::map<int, int>& prof) {
  const Rational c = s.coeff(Monomial::from_profile(t, prof));
  if (c.get_den() != 1) throw std::logic_error("non-integral coefficient");
  return c.get_num();
}

}  // namespace

Report verify_slicings(const VerifyOptions& o) {
  Report r;
  const MapSearchLimits lim = search_limits(o);
  for (int p : ps_for(o, {2, 3})) {
    const int top = p == 2 ? 2 * o.max_edges : o.max_epsilon;
    for (int sum = p; sum <= top; sum += p)
      for (const auto& b : partitions(sum)) {
        if (!admissible(p, b)) continue;
        const std::string id = "slicings p=" + std::to_string(p) + " " + list_str(b);
        guarded(r, id, [&] { compare(r, id, slicings_count({p, b}), oracle_slicings(map_query(p, b), lim)); });
      }
  }
  return r;
}

Report verify_catalan() {
  Report r;
  for (int a = 1; a <= 6; ++a)
    compare(r, "catalan a=" + std::to_string(a), binomial(2 * a, a) / (a + 1), slicings_count({2, {2 * a}}));
  return r;
}

Report verify_gf_coeff(const VerifyOptions& o) {
  Report r;
  const MapSearchLimits lim = search_limits(o);
  for (int p : ps_for(o, {2, 3})) {
    // light degree sum of a query; p = 2 counts twice the edges
    const int top = p == 2 ? 2 * o.max_edges : o.max_epsilon;
    const Truncation tr(top + 2, top / p + 1, std::max(top / p, 1));
    for (int bsum = 1; bsum <= top; ++bsum)
      for (const auto& b : partitions(bsum)) {
        if (!admissible(p, b)) continue;
        const Series g = gf_boundaries({p, b}, tr);
        for (int isum = 0; bsum + p * isum <= top; ++isum) {
          if ((bsum + p * isum) % p != 0) continue;
          const int edges = p == 2 ? (bsum + 2 * isum) / 2 : bsum + p * isum;
          for (const auto& parts : partitions(isum)) {
            const auto prof = as_profile(parts);
            for (int v = 1; v <= edges + 1; ++v) {
              const std::string id = "gf p=" + std::to_string(p) + " " + list_str(b) + " x" + profile_str(prof) +
                                     " v=" + std::to_string(v);
              guarded(r, id, [&] { compare(r, id, coeff_int(g, v, prof), oracle_gf_coeff(map_query(p, b, prof, v), lim)); });
            }
          }
        }
      }
  }
  return r;
}

Report verify_kernels(const VerifyOptions& o) {
  Report r;
  const int t_max = o.kernel_t_max, xdeg = o.kernel_xdeg_max;
  for (int p : ps_for(o, {2, 3, 4})) {
    const int vars = std::max(1, t_max / (p - 1));
    const Truncation tr(t_max, xdeg, vars);
    const Series rp = compute_Rp(p, tr);
    ProfileCounts oracle;
    const std::string base = "kernel p=" + std::to_string(p);
    guarded(r, base + " mobile enumeration", [&] { oracle = mobile_profile_counts(p, t_max, xdeg, vars); });
    if (oracle.empty()) continue;
    for (int t = 0; t <= t_max; ++t)
      for (const auto& prof : x_profiles(vars, xdeg)) {
        Profile pr;
        pr.whites = t;
        for (const auto& [i, n] : prof)
          for (int k = 0; k < n; ++k) pr.degrees.push_back(p * i);
        std::sort(pr.degrees.begin(), pr.degrees.end());
        const Rational fixed = rp.coeff(Monomial::from_profile(t, prof));
        const Rational lag = lagrange_coeff(p, 1, t, prof);
        const Rational trees(static_cast<long>(count_in(oracle, pr)));
        const std::string id = base + " t^" + std::to_string(t) + " x" + profile_str(prof);
        r.add(id, fixed == lag && lag == trees, to_string(fixed), to_string(lag) + " / " + to_string(trees));
      }
  }
  return r;
}

Report verify_blossoming_series(const VerifyOptions& o) {
  Report r;
  const Truncation tr(o.t_max, o.xdeg_max, std::max(1, o.t_max));
  if (!o.p || *o.p == 2) compare_series(r, "T = R", compute_R(tr), compute_T(tr));
  for (int p : ps_for(o, {2, 3, 4})) compare_series(r, "Tp = Rp p=" + std::to_string(p), compute_Rp(p, tr), compute_Tp(p, tr));
  return r;
}

Report verify_eynard(const VerifyOptions& o) {
  Report r;
  const Truncation tr(o.t_max, o.xdeg_max, std::max(1, o.t_max));
  const Series kernel = compute_R(Truncation(o.t_max + 1, o.xdeg_max, tr.var_max));
  for (int sum = 2; sum <= 10; ++sum)
    for (int l1 = 1; 2 * l1 <= sum; ++l1) {
      const std::vector<int> b{l1, sum - l1};
      if (!admissible(2, b)) continue;
      compare_series(r, "eynard " + list_str(b), eynard_two(l1, sum - l1, tr),
                     gf_boundaries_from_kernel({2, b}, kernel).restrict_to(tr));
    }
  for (int sum = 3; sum <= 12; ++sum)
    for (const auto& b : partitions(sum)) {
      if (b.size() != 3 || !admissible(2, b)) continue;
      compare_series(r, "eynard " + list_str(b), eynard_three(b[0], b[1], b[2], tr), gf_boundaries_from_kernel({2, b}, kernel));
    }
  return r;
}

Report verify_quasi_series(const VerifyOptions& o) {
  Report r;
  const Truncation tr(o.t_max, o.xdeg_max, std::max(1, o.t_max));
  const Truncation wide(o.t_max + 1, o.xdeg_max, tr.var_max);
  auto g = [&](int p, std::vector<int> b) { return gf_boundaries({p, std::move(b)}, tr); };
  auto dg = [&](int p, std::vector<int> b) { return d_dt(gf_boundaries({p, std::move(b)}, wide)).restrict_to(tr); };
  if (!o.p || *o.p == 2) {
    for (const std::vector<int>& rest : std::vector<std::vector<int>>{{}, {2}, {4}, {2, 2}}) {
      for (int a1 = 1; a1 <= 2; ++a1)
        for (int a2 = 1; a2 <= 2; ++a2) {
          std::vector<int> even{2 * a1, 2 * a2}, odd{2 * a1 - 1, 2 * a2 + 1};
          even.insert(even.end(), rest.begin(), rest.end());
          odd.insert(odd.end(), rest.begin(), rest.end());
          compare_series(r, "alpha-weighted " + list_str(odd) + " vs " + list_str(even),
                         g(2, even) * Rational(alpha(2, 2 * a1 - 1) * alpha(2, 2 * a2 + 1)),
                         g(2, odd) * Rational(alpha(2, 2 * a1) * alpha(2, 2 * a2)));
        }
      std::vector<int> ones{1, 1}, two{2};
      ones.insert(ones.end(), rest.begin(), rest.end());
      two.insert(two.end(), rest.begin(), rest.end());
      compare_series(r, "2 G" + list_str(ones) + " = d/dt G" + list_str(two), g(2, ones) * Rational(2), dg(2, two));
    }
  }
  for (int p : ps_for(o, {3, 4})) {
    if (p < 3) continue;
    for (const std::vector<int>& rest : std::vector<std::vector<int>>{{}, {p}}) {
      for (int d = 1; d < p; ++d) {
        std::vector<int> q{d, p - d}, one{p};
        q.insert(q.end(), rest.begin(), rest.end());
        one.insert(one.end(), rest.begin(), rest.end());
        compare_series(r, std::to_string(p) + " G" + list_str(q) + " = " + std::to_string(d * (p - d)) + " d/dt G" + list_str(one),
                       g(p, q) * Rational(p), dg(p, one) * Rational(d * (p - d)));
        for (int a1 = 1; a1 <= 2; ++a1) {
          std::vector<int> reg{p * a1, p}, quasi{p * a1 - d, p + d};
          reg.insert(reg.end(), rest.begin(), rest.end());
          quasi.insert(quasi.end(), rest.begin(), rest.end());
          compare_series(r, "alpha-weighted " + list_str(quasi) + " vs " + list_str(reg),
                         g(p, reg) * Rational(Integer(p - 1) * alpha(p, p * a1 - d) * alpha(p, p + d)),
                         g(p, quasi) * Rational(alpha(p, p * a1) * alpha(p, p)));
        }
      }
    }
  }
  return r;
}

namespace {

std::set<Profile> union_keys(const ProfileCounts& a, const ProfileCounts& b) {
  std::set<Profile> out;
  for (const auto& [k, v] : a) out.insert(k);
  for (const auto& [k, v] : b) out.insert(k);
  return out;
}

void compare_counts(Report& r, const std::string& id, const ProfileCounts& lhs, std::int64_t lf, const ProfileCounts& rhs,
                    std::int64_t rf) {
  for (const Profile& pr : union_keys(lhs, rhs)) {
    const std::int64_t a = lf * count_in(lhs, pr), b = rf * count_in(rhs, pr);
    r.add(id + " " + pr.str(), a == b, std::to_string(a), std::to_string(b));
  }
  if (lhs.empty() && rhs.empty()) r.add(id + " (nonempty)", false, "some profile", "none");
}

void compare_with_series(Report& r, const std::string& id, const ProfileCounts& counts, const Series& s, int p, int max_whites) {
  // every profile the enumeration could have produced must match, including zeros
  for (const auto& [pr, n] : counts) {
    const auto prof = half_profile(pr, p);
    const Integer want = coeff_int(s, pr.whites, prof);
    r.add(id + " " + pr.str(), want == n, to_string(want), std::to_string(n));
  }
  for (const auto& [m, c] : s.terms()) {
    if (m.t_exp > max_whites) continue;
    Profile pr;
    pr.whites = m.t_exp;
    for (int i : m.xs) pr.degrees.push_back(p * i);
    std::sort(pr.degrees.begin(), pr.degrees.end());
    if (pr.degrees.size() > 2 || (!pr.degrees.empty() && pr.degrees.back() > std::max(4, p))) continue;
    if (!counts.count(pr)) r.add(id + " " + pr.str(), false, to_string(c), "0");
  }
}

}  // namespace

Report verify_families(const VerifyOptions& o) {
  Report r;
  const FamilyBudget b2{o.family_whites, o.family_unmarked, 4};
  if (!o.p || *o.p == 2) {
    for (int a1 = 1; a1 <= 2; ++a1)
      for (int a2 = 1; a2 <= 2; ++a2) {
        const std::string suffix = "_{" + std::to_string(2 * a1) + "," + std::to_string(2 * a2) + "}";
        guarded(r, "families" + suffix, [&] {
          const auto bh = oracle_family_count({Family::BHat, 2, a1, a2}, b2);
          const auto qh = oracle_family_count({Family::QHat, 2, a1, a2}, b2);
          const auto full = oracle_family_count({Family::B, 2, a1, a2}, b2);
          compare_counts(r, "|Bhat" + suffix + "| = |Qhat_{" + std::to_string(2 * a1 - 1) + "," + std::to_string(2 * a2 + 1) + "}|",
                         bh, 1, qh, 1);
          const std::int64_t f = binomial(2 * a1 - 1, a1).get_si() * binomial(2 * a2 - 1, a2).get_si();
          compare_counts(r, "|B" + suffix + "| = " + std::to_string(f) + " |Bhat" + suffix + "|", full, 1, bh, f);
        });
      }
    guarded(r, "families Q_{1,1}", [&] {
      const Truncation tr(o.family_whites + 1, 2, 4);
      const Series rr = compute_R(tr);
      const Series dr = d_dt(rr);
      const auto q11 = oracle_family_count({Family::Q, 2, 1, 0}, b2);
      compare_counts(r, "|Q_{1,1}| = |H|", q11, 1, oracle_family_count({Family::H, 2}, b2), 1);
      compare_counts(r, "|Q_{1,1}| = |B_2'|", q11, 1, oracle_family_count({Family::B2Prime, 2}, b2), 1);
      compare_with_series(r, "|Q_{1,1}| = [R']", q11, dr, 2, o.family_whites);
      compare_with_series(r, "|K| = [R R']", oracle_family_count({Family::K, 2}, b2), rr * dr, 2, o.family_whites);
    });
  }
  for (int p : ps_for(o, {3, 4})) {
    if (p < 3) continue;
    const FamilyBudget bp{p == 3 ? o.family_whites : o.family_whites + 1, p == 3 ? o.family_unmarked : 1, p};
    for (int d = 1; d < p; ++d) {
      const std::string tag = "p=" + std::to_string(p) + " d=" + std::to_string(d);
      guarded(r, "families " + tag, [&] {
        const auto bh = oracle_family_count({Family::BPHat, p, 1, 1}, bp);
        const auto qh = oracle_family_count({Family::QPHat, p, 1, 1, d}, bp);
        compare_counts(r, tag + " " + std::to_string(p - 1) + " |Bhat_{p,p}| = |Qhat_{p-d,p+d}|", bh, p - 1, qh, 1);
        const auto q = oracle_family_count({Family::QP, p, 1, 0, p - d}, bp);
        compare_counts(r, tag + " |Q_{d,p-d}| = |B_p'|", q, 1, oracle_family_count({Family::BpPrime, p}, bp), 1);
      });
    }
  }
  return r;
}

Report verify_blossoming_objects(const VerifyOptions& o) {
  Report r;
  for (int p : ps_for(o, {2, 3})) {
    const int max_internal = p == 2 ? o.max_internal : std::min(o.max_internal, 3);
    const int max_i = 2;
    const std::string tag = "blossoming p=" + std::to_string(p);
    guarded(r, tag, [&] {
      const auto trees = blossoming_trees(p, max_internal, max_i);
      std::set<std::string> images;
      int bad = 0;
      for (const auto& t : trees) {
        const PlaneTree m = blossoming_to_mobile(t, p);
        const MobileClass want = p == 2 ? MobileClass::Bipartite : MobileClass::PRegular;
        if (validate_mobile(m, p) != want || !(mobile_to_blossoming(m, p) == t)) ++bad;
        images.insert(m.encode());
      }
      r.add(tag + " round trips", bad == 0, "0 failures", std::to_string(bad) + " failures");
      r.add(tag + " injective", images.size() == trees.size(), std::to_string(trees.size()), std::to_string(images.size()));
      MobileGrammar g;
      g.kind = Grammar::PRegular;
      g.p = p;
      g.max_whites = 1 + max_internal * ((p - 1) * max_i - 1);
      g.max_blacks = max_internal;
      g.max_degree = p * max_i;
      std::set<std::string> mobiles;
      for_each_rooted_mobile(g, {}, [&](const PlaneTree& m) { mobiles.insert(m.encode()); });
      r.add(tag + " surjective", mobiles == images, std::to_string(mobiles.size()) + " mobiles", std::to_string(images.size()) + " images");
    });
  }
  return r;
}

Report verify_bdg(const VerifyOptions& o) {
  Report r;
  for (int e = 1; e <= o.bdg_max_edges; ++e) {
    const std::string tag = "bdg E=" + std::to_string(e);
    guarded(r, tag, [&] {
      std::map<std::string, Profile> images;
      ProfileCounts image_counts;
      std::int64_t pointed = 0, invalid = 0, degree_mismatch = 0;
      for_each_pointed_map(e, [&](const PlanarMap& m, int v) {
        ++pointed;
        const PlaneTree t = bdg_forward(m, v);
        if (validate_mobile(t, 2) == MobileClass::Invalid) ++invalid;
        // face degrees become black degrees, non-pointed vertices become whites
        std::vector<int> faces, blacks;
        for (const auto& f : m.faces()) faces.push_back(static_cast<int>(f.size()));
        for (int u = 0; u < t.size(); ++u)
          if (t.node(u).color == Color::Black) blacks.push_back(t.degree(u));
        std::sort(faces.begin(), faces.end());
        std::sort(blacks.begin(), blacks.end());
        if (faces != blacks || t.count(Color::White) + 1 != static_cast<int>(m.vertices().size())) ++degree_mismatch;
        const Profile pr = profile_of(t, false);
        if (images.emplace(t.encode(), pr).second) ++image_counts[pr];
      });
      r.add(tag + " valid", invalid == 0, "0 invalid", std::to_string(invalid) + " invalid");
      r.add(tag + " degrees", degree_mismatch == 0, "0 mismatches", std::to_string(degree_mismatch) + " mismatches");
      r.add(tag + " injective", static_cast<std::int64_t>(images.size()) == pointed, std::to_string(pointed),
            std::to_string(images.size()));
      MobileGrammar g;
      g.kind = Grammar::Classical;
      g.max_whites = e + 1;
      g.max_blacks = e + 1;
      g.max_degree = 2 * e;
      g.degree_sum = 2 * e;
      ProfileCounts mobiles;
      for_each_black_rooted_mobile(g, 0, {}, [&](const PlaneTree& t) {
        int deg = 0;
        for (int u = 0; u < t.size(); ++u)
          if (t.node(u).color == Color::Black) deg += t.degree(u);
        if (deg == 2 * e) ++mobiles[profile_of(t, false)];
      });
      compare_counts(r, tag + " images = mobiles", mobiles, 1, image_counts, 1);
    });
  }
  return r;
}

namespace {

std::vector<std::vector<int>> compositions(int n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= n; ++first)
    for (auto rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

Profile forest_profile(const MobileForest& f) {
  Profile pr;
  for (const auto& c : f.components) {
    const Profile q = profile_of(c, false);
    pr.whites += q.whites;
    pr.degrees.insert(pr.degrees.end(), q.degrees.begin(), q.degrees.end());
  }
  std::sort(pr.degrees.begin(), pr.degrees.end());
  return pr;
}

void for_each_choice_sequence(int r, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> c(static_cast<std::size_t>(std::max(r - 1, 0)), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == r - 1) {
      visit(c);
      return;
    }
    for (int x = 0; x < r - 1 - k; ++x) {
      c[static_cast<std::size_t>(k)] = x;
      rec(k + 1);
    }
  };
  rec(0);
}

}  // namespace

Report verify_aggregation(const VerifyOptions& o) {
  Report rep;
  const int max_unmarked = 2, max_degree = 4;
  for (int p : ps_for(o, {2, 3})) {
    MobileGrammar pool_g;
    pool_g.kind = Grammar::PRegular;
    pool_g.p = p;
    pool_g.max_blacks = max_unmarked;
    pool_g.max_degree = std::max(max_degree / p, 1) * p;
    std::map<int, std::vector<PlaneTree>> pools;
    for (int total = 1; (p - 1) * total <= o.forest_components; ++total)
      for (const auto& groups : compositions(total)) {
        const int r = static_cast<int>(groups.size()), s = (p - 1) * total;
        // big enough that every forest with at most forest_whites whites is drawn
        const int pool_whites = std::max(3, o.forest_whites - s + 1);
        auto& pool = pools[pool_whites];
        if (pool.empty()) {
          pool_g.max_whites = pool_whites;
          for_each_rooted_mobile(pool_g, {}, [&](const PlaneTree& t) { pool.push_back(t); });
        }
        const std::string tag = "aggregation p=" + std::to_string(p) + " a=" + list_str(groups);
        guarded(rep, tag, [&] {
          ProfileCounts forest_side, mobile_side;
          std::set<std::string> images;
          std::int64_t trips = 0, broken = 0, pairs = 0;
          for_each_marked_forest(pool, s, r, o.forest_whites, [&](const MobileForest& f) {
            Profile pr = forest_profile(f);
            pr.whites -= r - 1;  // marked whites vanish in the merge
            if (static_cast<int>(pr.degrees.size()) > max_unmarked) return;
            ++forest_side[pr];
            for_each_choice_sequence(r, [&](const std::vector<int>& choices) {
              ++trips;
              const AggregateResult agg = aggregate(f, p, groups, choices);
              const DisaggregateResult back = disaggregate(agg.mobile, p, agg.disaggregation_choices);
              if (!(back.forest == f) || back.groups != groups || back.aggregation_choices != choices) ++broken;
              std::string key = agg.mobile.encode() + "|";
              for (int d : agg.disaggregation_choices) key += std::to_string(d) + ",";
              if (images.insert(key).second) ++pairs;
            });
          });
          rep.add(tag + " round trips", broken == 0, std::to_string(trips), std::to_string(trips - broken));
          rep.add(tag + " injective", pairs == trips, std::to_string(trips), std::to_string(pairs));

          MobileGrammar g;
          g.kind = Grammar::PRegular;
          g.p = p;
          g.max_whites = o.forest_whites - (r - 1);
          g.max_blacks = r + max_unmarked;
          g.max_degree = pool_g.max_degree;
          g.pruned_marks = true;
          g.place_marks = true;
          for (int i = 0; i < r; ++i) g.marked_degree[i + 1] = (p - 1) * groups[static_cast<std::size_t>(i)];
          std::int64_t undone = 0, total_mobiles = 0;
          for (int root = 1; root <= r; ++root)
            for_each_black_rooted_mobile(g, root, {}, [&](const PlaneTree& t) {
              if (static_cast<int>(marked_blacks(t).size()) != r) return;
              ++total_mobiles;
              ++mobile_side[profile_of(t, false)];
              for_each_choice_sequence(r, [&](const std::vector<int>& d) {
                try {
                  disaggregate(t, p, d);
                  ++undone;
                } catch (const std::exception&) {
                }
              });
            });
          std::int64_t per = 1;
          for (int k = 2; k < r; ++k) per *= k;
          rep.add(tag + " every mobile disaggregates", undone == total_mobiles * per, std::to_string(total_mobiles * per),
                  std::to_string(undone));
          compare_counts(rep, tag + " |forests| = |mobiles|", forest_side, 1, mobile_side, 1);
        });
      }
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"slicings", "gf-coeff", "kernels", "eynard", "lemmas", "bijections", "all"};
  return names;
}

Report run_suite(const std::string& name, const VerifyOptions& o) {
  Report r;
  const bool all = name == "all";
  bool known = all;
  if (all || name == "slicings") {
    known = true;
    r.append(verify_slicings(o));
    r.append(verify_catalan());
  }
  if (all || name == "gf-coeff") {
    known = true;
    r.append(verify_gf_coeff(o));
  }
  if (all || name == "kernels") {
    known = true;
    r.append(verify_kernels(o));
    r.append(verify_blossoming_series(o));
  }
  if (all || name == "eynard") {
    known = true;
    r.append(verify_eynard(o));
  }
  if (all || name == "lemmas") {
    known = true;
    r.append(verify_quasi_series(o));
    r.append(verify_families(o));
  }
  if (all || name == "bijections") {
    known = true;
    r.append(verify_blossoming_objects(o));
    r.append(verify_bdg(o));
    r.append(verify_aggregation(o));
  }
  if (!known) throw std::invalid_argument("unknown suite: " + name);
  return r;
}

}  // namespace cmaps
