#include "cmaps/oracles.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cmaps/bijections.hpp"
#include "cmaps/mobile_gen.hpp"

namespace cmaps {

int MapQuery::edges() const {
  int light = std::accumulate(boundaries.begin(), boundaries.end(), 0);
  for (const auto& [i, n] : internal) light += p * i * n;
  return p == 2 ? light / 2 : light;
}

namespace {

constexpr int kMaxDarts = 16;

struct Target {
  int darts = 0;
  std::array<int, kMaxDarts + 1> need{};  // face degree -> count (light faces for p >= 3)
  int faces = 0;
  int vertices = -1;
};

void check_query(const MapQuery& q) {
  if (q.p < 2) throw std::invalid_argument("p must be at least 2");
  for (int l : q.boundaries)
    if (l < 1) throw std::invalid_argument("boundary degrees must be positive");
  for (const auto& [i, n] : q.internal)
    if (i < 1 || n < 0) throw std::invalid_argument("internal profile entries must be positive");
}

// nullopt when no map can match (odd degree sum, no edges)
std::optional<Target> make_target(const MapQuery& q, const MapSearchLimits& lim) {
  check_query(q);
  int light = std::accumulate(q.boundaries.begin(), q.boundaries.end(), 0);
  for (const auto& [i, n] : q.internal) light += q.p * i * n;
  if (light == 0 || light % q.p != 0) return std::nullopt;
  const int e = q.edges();
  if (e > (q.p == 2 ? lim.max_edges_p2 : lim.max_edges_hyper) || 2 * e > kMaxDarts)
    throw BudgetExceeded("map search with " + std::to_string(e) + " edges exceeds the configured budget");
  Target t;
  t.darts = 2 * e;
  for (int l : q.boundaries) ++t.need[static_cast<std::size_t>(l)];
  for (const auto& [i, n] : q.internal) t.need[static_cast<std::size_t>(q.p * i)] += n;
  for (int c : t.need) t.faces += c;
  t.vertices = q.vertices.value_or(-1);
  return t;
}

// numberings of the boundaries among faces of matching degree times corner marks
Integer boundary_weight(const MapQuery& q, const Target& t) {
  std::map<int, int> b;
  for (int l : q.boundaries) ++b[l];
  Integer w = 1;
  for (const auto& [deg, k] : b) {
    const int f = t.need[static_cast<std::size_t>(deg)];
    w *= factorial(f) / factorial(f - k);
  }
  for (int l : q.boundaries) w *= l;
  return w;
}

bool connected(const int* sigma, int n) {
  std::uint32_t seen = 1;
  std::array<int, kMaxDarts> stack{};
  int top = 0, reached = 1;
  stack[static_cast<std::size_t>(top++)] = 0;
  while (top > 0) {
    const int d = stack[static_cast<std::size_t>(--top)];
    for (int u : {sigma[d], d ^ 1})
      if (!(seen >> u & 1u)) {
        seen |= 1u << u;
        ++reached;
        stack[static_cast<std::size_t>(top++)] = u;
      }
  }
  return reached == n;
}

int count_cycles(const int* perm, int n) {
  std::uint32_t seen = 0;
  int c = 0;
  for (int d = 0; d < n; ++d) {
    if (seen >> d & 1u) continue;
    ++c;
    for (int x = d; !(seen >> x & 1u); x = perm[x]) seen |= 1u << x;
  }
  return c;
}

// p = 2: faces of sigma o alpha must have exactly the target degrees
bool accept_bipartite(const int* sigma, const Target& t) {
  const int n = t.darts;
  std::array<int, kMaxDarts + 1> got{};
  std::uint32_t seen = 0;
  for (int d = 0; d < n; ++d) {
    if (seen >> d & 1u) continue;
    int len = 0;
    for (int x = d; !(seen >> x & 1u); x = sigma[x ^ 1]) {
      seen |= 1u << x;
      ++len;
    }
    if (++got[static_cast<std::size_t>(len)] > t.need[static_cast<std::size_t>(len)]) return false;
  }
  if (got != t.need) return false;
  const int v = count_cycles(sigma, n);
  if (t.vertices >= 0 && v != t.vertices) return false;
  return v - n / 2 + t.faces == 2 && connected(sigma, n);
}

std::int64_t scan_branch(const Target& t, int first) {
  const int n = t.darts;
  std::array<int, kMaxDarts> sigma{};
  std::vector<int> rest;
  for (int d = 0; d < n; ++d)
    if (d != first) rest.push_back(d);
  std::int64_t hits = 0;
  sigma[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), sigma.begin() + 1);
    if (accept_bipartite(sigma.data(), t)) ++hits;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return hits;
}

// Calls visit for every permutation of `elems` (written into perm) whose
// cycle lengths form the multiset `lengths`.
template <class Visit>
void for_each_typed_perm(std::vector<int>& elems, std::array<int, kMaxDarts + 1>& lengths, int* perm, Visit&& visit) {
  if (elems.empty()) {
    visit();
    return;
  }
  const int head = elems.front();
  for (int len = 1; len <= static_cast<int>(elems.size()); ++len) {
    if (lengths[static_cast<std::size_t>(len)] == 0) continue;
    --lengths[static_cast<std::size_t>(len)];
    // choose an ordered tuple of len-1 further elements
    std::vector<int> others(elems.begin() + 1, elems.end());
    std::vector<int> cyc{head};
    std::vector<char> used(others.size(), 0);
    auto rec = [&](auto& self) -> void {
      if (static_cast<int>(cyc.size()) == len) {
        for (std::size_t k = 0; k < cyc.size(); ++k) perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
        std::vector<int> remaining;
        for (std::size_t k = 0; k < others.size(); ++k)
          if (!used[k]) remaining.push_back(others[k]);
        for_each_typed_perm(remaining, lengths, perm, visit);
        return;
      }
      for (std::size_t k = 0; k < others.size(); ++k) {
        if (used[k]) continue;
        used[k] = 1;
        cyc.push_back(others[k]);
        self(self);
        cyc.pop_back();
        used[k] = 0;
      }
    };
    rec(rec);
    ++lengths[static_cast<std::size_t>(len)];
  }
}

// p >= 3: `mask` picks the light dart of every edge; phi is built cycle-type
// first on light and dark darts, and sigma(d) = phi(alpha(d)).
std::int64_t hyper_branch(const Target& t, int p, std::uint32_t mask) {
  const int n = t.darts, e = n / 2;
  std::vector<int> light, dark;
  for (int k = 0; k < e; ++k) {
    const bool low_light = mask >> k & 1u;
    light.push_back(low_light ? 2 * k : 2 * k + 1);
    dark.push_back(low_light ? 2 * k + 1 : 2 * k);
  }
  std::array<int, kMaxDarts + 1> light_type = t.need, dark_type{};
  dark_type[static_cast<std::size_t>(p)] = e / p;
  const int faces = t.faces + e / p;
  std::array<int, kMaxDarts> phi{}, sigma{};
  std::int64_t hits = 0;
  for_each_typed_perm(light, light_type, phi.data(), [&] {
    std::vector<int> dk = dark;
    for_each_typed_perm(dk, dark_type, phi.data(), [&] {
      for (int d = 0; d < n; ++d) sigma[static_cast<std::size_t>(d)] = phi[static_cast<std::size_t>(d ^ 1)];
      const int v = count_cycles(sigma.data(), n);
      if (t.vertices >= 0 && v != t.vertices) return;
      if (v - e + faces == 2 && connected(sigma.data(), n)) ++hits;
    });
  });
  return hits;
}

// number of (sigma, colouring) pairs with fixed alpha that match the target
Integer labelled_count(const MapQuery& q, const Target& t, bool parallel) {
  const int e = t.darts / 2;
  const int branches = q.p == 2 ? t.darts : 1 << e;
  std::vector<std::int64_t> part(static_cast<std::size_t>(branches), 0);
  if (q.p == 2) {
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int b = 0; b < branches; ++b) part[static_cast<std::size_t>(b)] = scan_branch(t, b);
  } else {
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int b = 0; b < branches; ++b)
      part[static_cast<std::size_t>(b)] = hyper_branch(t, q.p, static_cast<std::uint32_t>(b));
  }
  Integer total = 0;
  for (std::int64_t x : part) total += static_cast<long>(x);
  return total;
}

Integer normalize(const Integer& weighted, int edges) {
  const Integer den = (Integer(1) << edges) * factorial(edges);
  if (weighted % den != 0) throw std::logic_error("labelled map count is not divisible by 2^E E!");
  return weighted / den;
}

Integer gf_coeff_impl(const MapQuery& q, const MapSearchLimits& lim, bool parallel) {
  const auto t = make_target(q, lim);
  if (!t) return 0;
  return normalize(labelled_count(q, *t, parallel) * boundary_weight(q, *t), t->darts / 2);
}

}  // namespace

Integer oracle_gf_coeff(const MapQuery& q, const MapSearchLimits& lim) { return gf_coeff_impl(q, lim, true); }

Integer oracle_gf_coeff_serial(const MapQuery& q, const MapSearchLimits& lim) { return gf_coeff_impl(q, lim, false); }

Integer oracle_slicings(const MapQuery& q, const MapSearchLimits& lim) {
  MapQuery bare = q;
  bare.internal.clear();
  bare.vertices.reset();
  if (bare.boundaries.empty()) throw std::invalid_argument("slicings need at least one boundary");
  return oracle_gf_coeff(bare, lim);
}

Integer oracle_rooted_maps(const MapQuery& q, const MapSearchLimits& lim) {
  if (!q.boundaries.empty()) throw std::invalid_argument("rooted map counts take no boundaries");
  const auto t = make_target(q, lim);
  if (!t) return 0;
  const int e = t->darts / 2;
  return normalize(labelled_count(q, *t, true) * (q.p == 2 ? 2 * e : e), e);
}

ProfileCounts mobile_profile_counts(int p, int max_whites, int max_blacks, int max_i, const EnumLimits& limits) {
  MobileGrammar g;
  g.kind = Grammar::PRegular;
  g.p = p;
  g.max_whites = max_whites;
  g.max_blacks = max_blacks;
  g.max_degree = p * max_i;
  ProfileCounts out;
  for_each_rooted_mobile(g, limits, [&](const PlaneTree& t) { ++out[profile_of(t, false)]; });
  return out;
}

Integer oracle_mobiles(int p, int whites, const std::map<int, int>& profile, const EnumLimits& limits) {
  if (p < 2 || whites < 0) throw std::invalid_argument("bad mobile query");
  Profile want;
  want.whites = whites;
  int blacks = 0, max_i = 1;
  for (const auto& [i, n] : profile) {
    if (i < 1 || n < 0) throw std::invalid_argument("bad profile entry");
    for (int k = 0; k < n; ++k) want.degrees.push_back(p * i);
    blacks += n;
    if (n > 0) max_i = std::max(max_i, i);
  }
  const auto counts = mobile_profile_counts(p, whites, blacks, max_i, limits);
  const auto it = counts.find(want);
  return it == counts.end() ? Integer(0) : Integer(static_cast<long>(it->second));
}

const char* family_name(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::BHat: return "Bhat";
    case Family::Q: return "Q";
    case Family::QHat: return "Qhat";
    case Family::H: return "H";
    case Family::K: return "K";
    case Family::BP: return "Bp";
    case Family::BPHat: return "Bphat";
    case Family::QP: return "Qp";
    case Family::QPHat: return "Qphat";
    case Family::B2Prime: return "B2prime";
    case Family::BpPrime: return "Bpprime";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::B, Family::BHat, Family::Q, Family::QHat, Family::H, Family::K, Family::BP, Family::BPHat,
                   Family::QP, Family::QPHat, Family::B2Prime, Family::BpPrime})
    if (name == family_name(f)) return f;
  throw std::invalid_argument("unknown family: " + name);
}

namespace {

struct MarkedSpec {
  Grammar grammar;
  int p;
  int deg1;
  int deg2;  // degree of the second marked black; -1 marks a white instead
  MobileClass want;
  bool pruned;
};

ProfileCounts count_marked(const MarkedSpec& s, const FamilyBudget& b, const EnumLimits& limits) {
  if (s.deg1 < 1 || (s.deg2 != -1 && s.deg2 < 1)) throw std::invalid_argument("marked degrees must be positive");
  MobileGrammar g;
  g.kind = s.grammar;
  g.p = s.p;
  g.max_whites = b.max_whites + (s.deg2 == -1 ? 1 : 0);
  g.max_blacks = b.max_unmarked + (s.deg2 == -1 ? 1 : 2);
  g.max_degree = std::max(b.max_degree, s.deg2);
  g.marked_degree = {{1, s.deg1}};
  if (s.grammar == Grammar::Classical || s.grammar == Grammar::Hyper) g.irregular_degree = s.deg2;
  std::set<std::string> seen;
  ProfileCounts out;
  auto record = [&](PlaneTree u, int second) {
    if (validate_mobile(u, s.p) != s.want) return;
    if (s.pruned) {
      u = prune(u, second >= 0 ? std::vector<int>{0, second} : std::vector<int>{0});
    }
    const Profile pr = profile_of(u, s.deg2 == -1);
    if (pr.whites > b.max_whites || static_cast<int>(pr.degrees.size()) > b.max_unmarked) return;
    if (!pr.degrees.empty() && pr.degrees.back() > b.max_degree) return;
    int root = 0;
    for (int v = 0; v < u.size(); ++v)
      if (u.node(v).color == Color::Black && u.node(v).mark == 1) root = v;
    if (seen.insert(canonical_at(u, root)).second) ++out[pr];
  };
  for_each_black_rooted_mobile(g, 1, limits, [&](const PlaneTree& t) {
    for (int v = 1; v < t.size(); ++v) {
      const TreeNode& n = t.node(v);
      PlaneTree u = t;
      if (s.deg2 == -1) {
        if (n.color != Color::White) continue;
        u.node(v).mark = 2;
        record(std::move(u), -1);
      } else {
        if (n.color != Color::Black || t.degree(v) != s.deg2) continue;
        u.node(v).mark = 2;
        record(std::move(u), v);
      }
    }
  });
  return out;
}

}  // namespace

ProfileCounts oracle_family_count(const FamilyQuery& q, const FamilyBudget& b, const EnumLimits& limits) {
  const int p = q.p;
  auto quasi_p = [&](bool pruned) {
    if (p < 3) throw std::invalid_argument("quasi p-mobile families need p >= 3");
    if (q.d < 1 || q.d >= p) throw std::invalid_argument("d must lie in 1..p-1");
    return count_marked({Grammar::Hyper, p, p * q.a1 - q.d, p * q.a2 + q.d, MobileClass::QuasiP, pruned}, b, limits);
  };
  switch (q.family) {
    case Family::B:
    case Family::BHat:
      return count_marked({Grammar::Bipartite, 2, 2 * q.a1, 2 * q.a2, MobileClass::Bipartite, q.family == Family::BHat}, b, limits);
    case Family::Q:
    case Family::QHat:
      return count_marked({Grammar::Classical, 2, 2 * q.a1 - 1, 2 * q.a2 + 1, MobileClass::QuasiBipartite, q.family == Family::QHat},
                          b, limits);
    case Family::H:
      return count_marked({Grammar::Classical, 2, 1, 1, MobileClass::QuasiBipartite, false}, b, limits);
    case Family::K:
      return count_marked({Grammar::Bipartite, 2, 2, 2, MobileClass::Bipartite, true}, b, limits);
    case Family::BP:
    case Family::BPHat: {
      const MobileClass want = p == 2 ? MobileClass::Bipartite : MobileClass::PRegular;
      return count_marked({Grammar::PRegular, p, p * q.a1, p * q.a2, want, q.family == Family::BPHat}, b, limits);
    }
    case Family::QP:
      return quasi_p(false);
    case Family::QPHat:
      return quasi_p(true);
    case Family::B2Prime:
      return count_marked({Grammar::Bipartite, 2, 2, -1, MobileClass::Bipartite, false}, b, limits);
    case Family::BpPrime: {
      const MobileClass want = p == 2 ? MobileClass::Bipartite : MobileClass::PRegular;
      return count_marked({Grammar::PRegular, p, p, -1, want, false}, b, limits);
    }
  }
  throw std::invalid_argument("unknown family");
}

void for_each_pointed_map(int edges, const std::function<void(const PlanarMap&, int)>& visit) {
  for (const PlanarMap& m : rooted_planar_maps(edges))
    for (int v = 0; v < static_cast<int>(m.vertices().size()); ++v) visit(m, v);
}

std::vector<PlaneTree> blossoming_trees(int p, int max_internal, int max_i, const EnumLimits& limits) {
  ExpandRule expand = [&](const PlaneTree& t, int v, std::vector<ChildList>& out) {
    const TreeNode& n = t.node(v);
    switch (n.color) {
      case Color::White:
        if (v == 0) {
          out.push_back({{Color::White}});
          out.push_back({{p == 2 ? Color::Black : Color::Dark}});
        } else {
          out.push_back({});
        }
        return;
      case Color::Bud:
        out.push_back({});
        return;
      case Color::Dark:
        out.push_back(ChildList(static_cast<std::size_t>(p - 1), ChildSpec{Color::Bud}));
        for (int j = 0; j < p - 1; ++j) {
          ChildList kids(static_cast<std::size_t>(p - 1), ChildSpec{Color::Bud});
          kids[static_cast<std::size_t>(j)] = {Color::Black};
          out.push_back(kids);
        }
        return;
      case Color::Black:
        for (int i = 1; i <= max_i; ++i) {
          auto w = p == 2 ? words(2 * i - 1, {{Color::White}, {Color::Black}, {Color::Bud}},
                                  [&](const std::vector<int>& c) { return c[2] == i - 1; })
                          : words(p * i - 1, {{Color::White}, {Color::Dark}}, [](const std::vector<int>&) { return true; });
          out.insert(out.end(), w.begin(), w.end());
        }
        return;
    }
  };
  PruneRule prune_rule = [&](const PlaneTree& t) { return t.count(Color::Black) > max_internal; };
  std::vector<PlaneTree> out;
  enumerate_trees(PlaneTree(Color::White), expand, prune_rule, limits, [&](const PlaneTree& t) {
    if (is_blossoming_tree(t, p)) out.push_back(t);
  });
  return out;
}

void for_each_marked_forest(const std::vector<PlaneTree>& pool, int s, int r, int max_total_whites,
                            const std::function<void(const MobileForest&)>& visit) {
  MobileForest f;
  int whites = 0;
  std::function<void(int)> place = [&](int label) {
    if (label == r) {
      visit(f);
      return;
    }
    for (auto& c : f.components)
      for (int v = 0; v < c.size(); ++v) {
        if (c.node(v).color != Color::White || c.node(v).mark != 0) continue;
        c.node(v).mark = label;
        place(label + 1);
        c.node(v).mark = 0;
      }
  };
  std::function<void()> pick = [&]() {
    if (static_cast<int>(f.components.size()) == s) {
      place(1);
      return;
    }
    for (const auto& t : pool) {
      const int w = t.count(Color::White);
      if (whites + w > max_total_whites) continue;
      whites += w;
      f.components.push_back(t);
      pick();
      f.components.pop_back();
      whites -= w;
    }
  };
  pick();
}

}  // namespace cmaps
