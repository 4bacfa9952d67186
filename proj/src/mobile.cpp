#include "cmaps/mobile.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace cmaps {

const char* mobile_class_name(MobileClass c) {
  switch (c) {
    case MobileClass::Bipartite: return "bipartite";
    case MobileClass::QuasiBipartite: return "quasi-bipartite";
    case MobileClass::General: return "general";
    case MobileClass::PRegular: return "p-regular";
    case MobileClass::QuasiP: return "quasi-p";
    case MobileClass::Invalid: return "invalid";
  }
  return "?";
}

namespace {

// non-bud neighbours of v
std::vector<int> neighbours(const PlaneTree& t, int v) {
  std::vector<int> out;
  for (int u : t.rotation(v))
    if (t.node(u).color != Color::Bud) out.push_back(u);
  return out;
}

int bud_children(const PlaneTree& t, int v) {
  const auto& ch = t.node(v).children;
  return static_cast<int>(std::count_if(ch.begin(), ch.end(), [&](int c) { return t.node(c).color == Color::Bud; }));
}

int count_color(const PlaneTree& t, const std::vector<int>& vs, Color c) {
  return static_cast<int>(std::count_if(vs.begin(), vs.end(), [&](int u) { return t.node(u).color == c; }));
}

// vertices on the tree path from a to b, both included
std::vector<int> tree_path(const PlaneTree& t, int a, int b) {
  std::vector<int> up_a{a}, up_b{b};
  for (int x = a; t.node(x).parent >= 0;) up_a.push_back(x = t.node(x).parent);
  for (int x = b; t.node(x).parent >= 0;) up_b.push_back(x = t.node(x).parent);
  while (up_a.size() > 1 && up_b.size() > 1 && up_a[up_a.size() - 2] == up_b[up_b.size() - 2]) {
    up_a.pop_back();
    up_b.pop_back();
  }
  // both now end at the common ancestor
  up_b.pop_back();
  up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
  return up_a;
}

MobileClass fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return MobileClass::Invalid;
}

MobileClass classify_classical(const PlaneTree& t, std::string* why) {
  int bb_edges = 0;
  std::vector<int> odd;
  for (int v = 0; v < t.size(); ++v) {
    if (t.node(v).color != Color::Black) continue;
    const auto nb = neighbours(t, v);
    const int whites = count_color(t, nb, Color::White);
    if (bud_children(t, v) != whites) return fail(why, "black vertex " + std::to_string(v) + " has #buds != #white neighbours");
    for (int u : nb)
      if (t.node(u).color == Color::Black && u > v) ++bb_edges;
    if (t.degree(v) % 2 != 0) odd.push_back(v);
  }
  if (bb_edges == 0) return MobileClass::Bipartite;
  if (odd.size() == 2) {
    const auto path = tree_path(t, odd[0], odd[1]);
    const bool all_black = std::all_of(path.begin(), path.end(), [&](int u) { return t.node(u).color == Color::Black; });
    if (all_black && static_cast<int>(path.size()) - 1 == bb_edges) return MobileClass::QuasiBipartite;
  }
  return MobileClass::General;
}

}  // namespace

AlternatingPath alternating_path(const PlaneTree& t, int p) {
  AlternatingPath ap;
  std::vector<int> irregular;
  for (int v = 0; v < t.size(); ++v)
    if (t.node(v).color == Color::Black && t.degree(v) % p != 0) irregular.push_back(v);
  if (irregular.size() != 2) return ap;
  const int ra = t.degree(irregular[0]) % p, rb = t.degree(irregular[1]) % p;
  if (ra + rb != p) return ap;
  // v1 carries residue p - d, v2 residue d; take v1 as the lower id
  ap.v1 = irregular[0];
  ap.v2 = irregular[1];
  ap.d = rb;
  ap.nodes = tree_path(t, ap.v1, ap.v2);
  for (std::size_t k = 0; k < ap.nodes.size(); ++k) {
    const Color want = k % 2 == 0 ? Color::Black : Color::Dark;
    if (t.node(ap.nodes[k]).color != want) {
      ap.nodes.clear();
      return ap;
    }
  }
  for (std::size_t k = 0; k + 1 < ap.nodes.size(); ++k) ap.weights.push_back(k % 2 == 0 ? p - ap.d : ap.d);
  return ap;
}

MobileClass validate_mobile(const PlaneTree& t, int p, std::string* why) {
  if (p < 2) return fail(why, "p must be at least 2");
  if (t.empty()) return fail(why, "empty tree");
  const bool hyper = p > 2 || t.count(Color::Dark) > 0;
  for (int v = 0; v < t.size(); ++v) {
    const TreeNode& n = t.node(v);
    if (n.color == Color::Bud) {
      if (!n.children.empty() || n.parent < 0) return fail(why, "bud must be a non-root leaf");
      const Color pc = t.node(n.parent).color;
      if (pc != (hyper ? Color::Dark : Color::Black)) return fail(why, "bud attached to a vertex that cannot carry buds");
      continue;
    }
    for (int u : neighbours(t, v)) {
      const Color a = n.color, b = t.node(u).color;
      const bool ok = hyper ? ((a == Color::Black) != (b == Color::Black)) : (a == Color::Black || b == Color::Black);
      if (!ok) return fail(why, std::string("forbidden ") + color_name(a) + "-" + color_name(b) + " edge");
    }
  }
  if (!hyper) return classify_classical(t, why);

  int two_sided = 0;
  for (int v = 0; v < t.size(); ++v) {
    if (t.node(v).color != Color::Dark) continue;
    if (t.degree(v) != p) return fail(why, "dark square " + std::to_string(v) + " does not have degree p");
    const int lights = static_cast<int>(neighbours(t, v).size());
    if (lights < 1 || lights > 2) return fail(why, "dark square needs one or two light neighbours");
    if (lights == 2) ++two_sided;
  }
  std::vector<int> irregular;
  for (int v = 0; v < t.size(); ++v)
    if (t.node(v).color == Color::Black && t.degree(v) % p != 0) irregular.push_back(v);

  if (irregular.empty()) {
    if (two_sided != 0) return fail(why, "dark square between two lights in a regular mobile");
    for (int v = 0; v < t.size(); ++v) {
      if (t.node(v).color != Color::Black) continue;
      if (count_color(t, neighbours(t, v), Color::Dark) * p != t.degree(v))
        return fail(why, "light square " + std::to_string(v) + " has the wrong number of big buds");
    }
    return MobileClass::PRegular;
  }
  if (irregular.size() != 2) return fail(why, "more than two non-regular light squares");
  const AlternatingPath ap = alternating_path(t, p);
  if (ap.nodes.empty()) return fail(why, "non-regular vertices are not joined by a light/dark path");
  if (static_cast<int>(ap.nodes.size() / 2) != two_sided) return fail(why, "two-sided dark square off the alternating path");
  // weight sums at light squares
  std::vector<int> sum(static_cast<std::size_t>(t.size()), 0);
  std::set<std::pair<int, int>> path_edges;
  for (std::size_t k = 0; k + 1 < ap.nodes.size(); ++k) {
    const int a = ap.nodes[k], b = ap.nodes[k + 1];
    path_edges.insert({std::min(a, b), std::max(a, b)});
    sum[static_cast<std::size_t>(a)] += ap.weights[k];
    sum[static_cast<std::size_t>(b)] += ap.weights[k];
  }
  for (int v = 0; v < t.size(); ++v) {
    if (t.node(v).color != Color::Dark) continue;
    for (int u : neighbours(t, v))
      if (!path_edges.count({std::min(u, v), std::max(u, v)})) sum[static_cast<std::size_t>(u)] += p;
  }
  for (int v = 0; v < t.size(); ++v)
    if (t.node(v).color == Color::Black && sum[static_cast<std::size_t>(v)] != t.degree(v))
      return fail(why, "weights around light square " + std::to_string(v) + " do not sum to its degree");
  return MobileClass::QuasiP;
}

int add_big_bud(PlaneTree& t, int v, int p) {
  if (p == 2) return t.add_child(v, Color::Bud);
  const int d = t.add_child(v, Color::Dark);
  for (int k = 0; k < p - 1; ++k) t.add_child(d, Color::Bud);
  return d;
}

bool is_big_bud(const PlaneTree& t, int v) {
  const TreeNode& n = t.node(v);
  if (n.color == Color::Bud) return true;
  if (n.color != Color::Dark) return false;
  return std::all_of(n.children.begin(), n.children.end(), [&](int c) { return t.node(c).color == Color::Bud; });
}

PlaneTree prune(const PlaneTree& t, const std::vector<int>& vertices) {
  const std::set<int> at(vertices.begin(), vertices.end());
  PlaneTree out(t.node(0).color);
  out.node(0).mark = t.node(0).mark;
  std::function<void(int, int)> copy = [&](int old, int neu) {
    for (int c : t.node(old).children) {
      if (at.count(old) && is_big_bud(t, c)) continue;
      const int id = out.add_child(neu, t.node(c).color, t.node(c).weight);
      out.node(id).mark = t.node(c).mark;
      copy(c, id);
    }
  };
  copy(0, 0);
  return out;
}

std::vector<int> marked_blacks(const PlaneTree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.size(); ++v)
    if (t.node(v).color == Color::Black && t.node(v).mark != 0) out.push_back(v);
  std::sort(out.begin(), out.end(), [&](int a, int b) { return t.node(a).mark < t.node(b).mark; });
  return out;
}

Integer unprune_count(int p, int a) {
  if (p < 2 || a < 1) throw std::invalid_argument("unprune_count needs p >= 2 and a >= 1");
  return binomial(p * a - 1, a);
}

long composition_count(int n, int parts) {
  if (n < 0) return 0;
  if (parts == 0) return n == 0 ? 1 : 0;
  return binomial(n + parts - 1, parts - 1).get_si();
}

std::vector<int> composition_unrank(int n, int parts, long rank) {
  if (rank < 0 || rank >= composition_count(n, parts)) throw std::out_of_range("composition rank out of range");
  std::vector<int> out;
  int rem = n;
  for (int j = 0; j < parts; ++j) {
    if (j == parts - 1) {
      out.push_back(rem);
      break;
    }
    for (int v = 0; v <= rem; ++v) {
      const long c = composition_count(rem - v, parts - j - 1);
      if (rank < c) {
        out.push_back(v);
        rem -= v;
        break;
      }
      rank -= c;
    }
  }
  return out;
}

PlaneTree unprune_rank(const PlaneTree& pruned, int p, const std::vector<long>& ranks) {
  const auto marked = marked_blacks(pruned);
  if (ranks.size() != marked.size()) throw std::out_of_range("one placement index per marked vertex is required");
  // per marked vertex: buds to insert after each rotation entry
  std::vector<std::vector<int>> gaps(static_cast<std::size_t>(pruned.size()));
  for (std::size_t k = 0; k < marked.size(); ++k) {
    const int v = marked[k];
    const int deg = pruned.degree(v);
    if (deg % (p - 1) != 0) throw std::invalid_argument("pruned degree is not a multiple of p-1");
    gaps[static_cast<std::size_t>(v)] = composition_unrank(deg / (p - 1), deg, ranks[k]);
  }
  PlaneTree out(pruned.node(0).color);
  out.node(0).mark = pruned.node(0).mark;
  std::function<void(int, int)> copy = [&](int old, int neu) {
    const auto& g = gaps[static_cast<std::size_t>(old)];
    const auto& ch = pruned.node(old).children;
    const bool root = pruned.node(old).parent < 0;
    std::size_t gi = 0;
    auto buds = [&]() {
      if (gi < g.size())
        for (int b = 0; b < g[gi]; ++b) add_big_bud(out, neu, p);
      ++gi;
    };
    if (!root) buds();  // gap after the parent edge
    for (int c : ch) {
      const int id = out.add_child(neu, pruned.node(c).color, pruned.node(c).weight);
      out.node(id).mark = pruned.node(c).mark;
      copy(c, id);
      buds();
    }
  };
  copy(0, 0);
  return out;
}

int MobileForest::whites() const {
  int n = 0;
  for (const auto& c : components) n += c.count(Color::White);
  return n;
}

nlohmann::json MobileForest::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) comps.push_back(c.to_json());
  return {{"components", comps}};
}

MobileForest MobileForest::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("components") || !j.at("components").is_array())
    throw std::invalid_argument("forest JSON needs a components array");
  MobileForest f;
  for (const auto& c : j.at("components")) f.components.push_back(PlaneTree::from_json(c));
  return f;
}

}  // namespace cmaps
