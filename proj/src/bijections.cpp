#include "cmaps/bijections.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cmaps {

namespace {

// black rotations follow the face cycle backwards
constexpr bool kReverseFaceOrder = true;

long choose(int n, int k) { return binomial(n, k).get_si(); }

}  // namespace

PlaneTree bdg_forward(const PlanarMap& m, int v0) {
  if (!m.connected()) throw std::invalid_argument("map is disconnected");
  if (const int g = m.genus(); g != 0) throw std::invalid_argument("map has genus " + std::to_string(g) + ", expected 0");
  const int nv = static_cast<int>(m.vertices().size());
  const int nf = static_cast<int>(m.faces().size());
  if (v0 < 0 || v0 >= nv) throw std::invalid_argument("pointed vertex out of range");
  const auto dist = m.bfs_distances(v0);
  auto dist_of = [&](int dart) { return dist[static_cast<std::size_t>(m.vertex_of(dart))]; };

  RotationSystem rs;
  std::vector<int> black(static_cast<std::size_t>(nf)), white(static_cast<std::size_t>(nv), -1);
  for (int f = 0; f < nf; ++f) black[static_cast<std::size_t>(f)] = rs.add_node(Color::Black);
  for (int v = 0; v < nv; ++v)
    if (v != v0) white[static_cast<std::size_t>(v)] = rs.add_node(Color::White);

  // what the half-edge of dart x at the black vertex of face(x) points to
  std::vector<int> target(static_cast<std::size_t>(m.n_darts()));
  for (int x = 0; x < m.n_darts(); ++x) {
    const int du = dist_of(x), dw = dist_of(PlanarMap::alpha(x));
    int& tg = target[static_cast<std::size_t>(x)];
    if (dw == du + 1) {
      tg = rs.add_node(Color::Bud);
      rs.adj[static_cast<std::size_t>(tg)] = {black[static_cast<std::size_t>(m.face_of(x))]};
    } else if (du == dw + 1) {
      tg = white[static_cast<std::size_t>(m.vertex_of(x))];
    } else {
      tg = black[static_cast<std::size_t>(m.face_of(PlanarMap::alpha(x)))];
    }
  }
  int root_index = 0;
  for (int f = 0; f < nf; ++f) {
    std::vector<int> cyc = m.faces()[static_cast<std::size_t>(f)];
    if (kReverseFaceOrder) std::reverse(cyc.begin() + 1, cyc.end());
    auto& adj = rs.adj[static_cast<std::size_t>(black[static_cast<std::size_t>(f)])];
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      adj.push_back(target[static_cast<std::size_t>(cyc[k])]);
      if (cyc[k] == 0) root_index = static_cast<int>(k);
    }
  }
  for (int v = 0; v < nv; ++v) {
    if (v == v0) continue;
    auto& adj = rs.adj[static_cast<std::size_t>(white[static_cast<std::size_t>(v)])];
    for (int x : m.vertices()[static_cast<std::size_t>(v)])
      if (dist_of(x) == dist_of(PlanarMap::alpha(x)) + 1) adj.push_back(black[static_cast<std::size_t>(m.face_of(x))]);
  }
  PlaneTree out = root_at(rs, black[static_cast<std::size_t>(m.face_of(0))], root_index);
  if (out.size() != rs.size()) throw std::logic_error("mobile construction did not produce a tree");
  return out;
}

namespace {

// mutable unrooted graph used while aggregating and splitting
struct Work {
  std::vector<Color> color;
  std::vector<int> mark;
  std::vector<std::vector<int>> adj;
  std::vector<int> minid;
  std::vector<char> alive;

  int add(Color c, int mk, int id = INT_MAX) {
    color.push_back(c);
    mark.push_back(mk);
    adj.emplace_back();
    minid.push_back(id);
    alive.push_back(1);
    return static_cast<int>(color.size()) - 1;
  }
  std::vector<int>& nb(int v) { return adj[static_cast<std::size_t>(v)]; }
  void replace(int v, int from, int to) {
    for (int& a : nb(v))
      if (a == from) a = to;
  }
  // nodes of the component of `root`, with parents (parent[root] = -1)
  std::vector<int> component(int root, std::vector<int>* parent = nullptr) {
    std::vector<int> out{root}, par(color.size(), -2);
    par[static_cast<std::size_t>(root)] = -1;
    for (std::size_t k = 0; k < out.size(); ++k)
      for (int u : nb(out[k]))
        if (par[static_cast<std::size_t>(u)] == -2) {
          par[static_cast<std::size_t>(u)] = out[k];
          out.push_back(u);
        }
    if (parent) *parent = std::move(par);
    return out;
  }
  int component_min(int root) {
    int best = INT_MAX;
    for (int v : component(root)) best = std::min(best, minid[static_cast<std::size_t>(v)]);
    return best;
  }
  // live nodes as a rotation system; returns the id map
  RotationSystem export_rs(std::vector<int>& id) const {
    RotationSystem rs;
    id.assign(color.size(), -1);
    for (std::size_t v = 0; v < color.size(); ++v)
      if (alive[v]) id[v] = rs.add_node(color[v], mark[v]);
    for (std::size_t v = 0; v < color.size(); ++v)
      if (alive[v])
        for (int u : adj[v]) rs.adj[static_cast<std::size_t>(id[v])].push_back(id[static_cast<std::size_t>(u)]);
    return rs;
  }
};

void rotate_to_front(std::vector<int>& a, int x) {
  auto it = std::find(a.begin(), a.end(), x);
  if (it == a.end()) throw std::logic_error("rotation does not contain the expected neighbour");
  std::rotate(a.begin(), it, a.end());
}

}  // namespace

AggregateResult aggregate(const MobileForest& forest, int p, const std::vector<int>& groups,
                          const std::vector<int>& choices) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  const int r = static_cast<int>(groups.size());
  if (r < 1) throw std::invalid_argument("at least one group is required");
  for (int a : groups)
    if (a < 1) throw std::invalid_argument("group sizes must be positive");
  const int s = (p - 1) * std::accumulate(groups.begin(), groups.end(), 0);
  if (static_cast<int>(forest.components.size()) != s)
    throw std::invalid_argument("forest must have " + std::to_string(s) + " components");
  if (static_cast<int>(choices.size()) != r - 1) throw std::invalid_argument("expected r-1 choices");

  Work w;
  std::vector<int> mark_node(static_cast<std::size_t>(r), -1);
  std::vector<int> comp_root;
  int next_white = 0;
  for (const PlaneTree& raw : forest.components) {
    if (raw.empty() || raw.node(0).color != Color::White) throw std::invalid_argument("components must be rooted at a white vertex");
    const PlaneTree t = reroot(raw, 0, 0);
    const int offset = static_cast<int>(w.color.size());
    for (int v = 0; v < t.size(); ++v) {
      const TreeNode& n = t.node(v);
      int id = INT_MAX;
      if (n.color == Color::White) id = next_white++;
      if (n.mark != 0) {
        if (n.color != Color::White || n.mark < 1 || n.mark >= r || mark_node[static_cast<std::size_t>(n.mark)] != -1)
          throw std::invalid_argument("forest marks must be distinct white labels 1..r-1");
        mark_node[static_cast<std::size_t>(n.mark)] = offset + v;
      }
      w.add(n.color, 0, id);
      for (int u : t.rotation(v)) w.nb(offset + v).push_back(offset + u);
    }
    comp_root.push_back(offset);
  }
  for (int k = 1; k < r; ++k)
    if (mark_node[static_cast<std::size_t>(k)] == -1) throw std::invalid_argument("missing white mark " + std::to_string(k));

  std::vector<int> b(static_cast<std::size_t>(r) + 1);
  std::size_t next_comp = 0;
  for (int i = 1; i <= r; ++i) {
    const int bi = w.add(Color::Black, i);
    b[static_cast<std::size_t>(i)] = bi;
    for (int k = 0; k < (p - 1) * groups[static_cast<std::size_t>(i - 1)]; ++k) {
      const int c = comp_root[next_comp++];
      w.nb(bi).push_back(c);
      w.nb(c).insert(w.nb(c).begin(), bi);
    }
  }
  std::vector<int> roots(b.begin() + 1, b.end());
  AggregateResult res;
  res.disaggregation_choices.assign(static_cast<std::size_t>(r - 1), 0);

  for (int step = 1; step < r; ++step) {
    const int label = r - step;
    const int target = mark_node[static_cast<std::size_t>(label)];
    std::vector<std::pair<int, int>> eligible;  // (min white id, root)
    for (int root : roots) {
      const auto comp = w.component(root);
      if (std::find(comp.begin(), comp.end(), target) == comp.end()) eligible.push_back({w.component_min(root), root});
    }
    std::sort(eligible.begin(), eligible.end());
    const int c = choices[static_cast<std::size_t>(step - 1)];
    if (c < 0 || c >= static_cast<int>(eligible.size()))
      throw std::out_of_range("aggregation choice " + std::to_string(c) + " out of range at step " + std::to_string(step));
    const int bj = eligible[static_cast<std::size_t>(c)].second;
    const int u = w.nb(bj).back();
    if (w.color[static_cast<std::size_t>(u)] != Color::White) throw std::logic_error("rightmost neighbour is not white");

    std::vector<int> tail = w.nb(u);
    rotate_to_front(tail, bj);
    for (int x : tail) w.replace(x, u, target);
    w.nb(target).insert(w.nb(target).end(), tail.begin(), tail.end());
    w.minid[static_cast<std::size_t>(target)] = std::min(w.minid[static_cast<std::size_t>(target)], w.minid[static_cast<std::size_t>(u)]);
    w.alive[static_cast<std::size_t>(u)] = 0;
    for (int& mn : mark_node)
      if (mn == u) mn = target;
    roots.erase(std::find(roots.begin(), roots.end(), bj));

    // index of bj among the non-root marked blacks, as disaggregation sees them
    std::vector<int> nonroot;
    for (int i = 1; i <= r; ++i)
      if (std::find(roots.begin(), roots.end(), b[static_cast<std::size_t>(i)]) == roots.end()) nonroot.push_back(b[static_cast<std::size_t>(i)]);
    res.disaggregation_choices[static_cast<std::size_t>(r - step - 1)] =
        static_cast<int>(std::find(nonroot.begin(), nonroot.end(), bj) - nonroot.begin());
  }

  std::vector<int> id;
  const RotationSystem rs = w.export_rs(id);
  res.mobile = root_at(rs, id[static_cast<std::size_t>(roots.front())], 0);
  return res;
}

DisaggregateResult disaggregate(const PlaneTree& mobile, int p, const std::vector<int>& choices) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  const auto marked = marked_blacks(mobile);
  const int r = static_cast<int>(marked.size());
  if (r < 1) throw std::invalid_argument("mobile has no marked black vertex");
  for (int i = 0; i < r; ++i)
    if (mobile.node(marked[static_cast<std::size_t>(i)]).mark != i + 1)
      throw std::invalid_argument("marked blacks must carry labels 1..r");
  if (mobile.node(0).color != Color::Black || mobile.node(0).mark == 0)
    throw std::invalid_argument("mobile must be rooted at a marked black vertex");
  if (static_cast<int>(choices.size()) != r - 1) throw std::invalid_argument("expected r-1 choices");
  for (const auto& n : mobile.nodes())
    if (n.color != Color::Black && n.mark != 0) throw std::invalid_argument("only black vertices may be marked");

  Work w;
  for (int v = 0; v < mobile.size(); ++v) w.add(mobile.node(v).color, mobile.node(v).mark);
  for (int v = 0; v < mobile.size(); ++v) w.nb(v) = mobile.rotation(v);
  std::vector<int> roots{0};
  std::vector<int> last_child(static_cast<std::size_t>(mobile.size()), -1);  // per root: its rotation ends here

  for (int step = 1; step < r; ++step) {
    std::vector<int> eligible;
    for (int bk : marked)
      if (std::find(roots.begin(), roots.end(), bk) == roots.end()) eligible.push_back(bk);
    const int c = choices[static_cast<std::size_t>(step - 1)];
    if (c < 0 || c >= static_cast<int>(eligible.size()))
      throw std::out_of_range("disaggregation choice " + std::to_string(c) + " out of range at step " + std::to_string(step));
    const int bk = eligible[static_cast<std::size_t>(c)];
    int parent_w = -1, grand = -1;
    for (int root : roots) {
      std::vector<int> par;
      const auto comp = w.component(root, &par);
      if (std::find(comp.begin(), comp.end(), bk) != comp.end()) {
        parent_w = par[static_cast<std::size_t>(bk)];
        grand = parent_w >= 0 ? par[static_cast<std::size_t>(parent_w)] : -1;
        break;
      }
    }
    if (parent_w < 0 || w.color[static_cast<std::size_t>(parent_w)] != Color::White || grand < 0)
      throw std::invalid_argument("marked black vertex does not hang below a white vertex");
    std::vector<int> rot = w.nb(parent_w);
    rotate_to_front(rot, grand);
    const auto cut = std::find(rot.begin(), rot.end(), bk);
    std::vector<int> suffix(cut, rot.end());
    rot.erase(cut, rot.end());
    const int u = w.add(Color::White, w.mark[static_cast<std::size_t>(parent_w)]);
    w.nb(parent_w) = rot;
    w.nb(u) = suffix;
    for (int x : suffix) w.replace(x, parent_w, u);
    w.mark[static_cast<std::size_t>(parent_w)] = step;
    last_child.resize(w.color.size(), -1);
    last_child[static_cast<std::size_t>(bk)] = u;
    roots.push_back(bk);
  }

  DisaggregateResult res;
  std::vector<int> kept(w.color.size(), 1);
  for (int bk : marked) kept[static_cast<std::size_t>(bk)] = 0;
  for (int i = 0; i < r; ++i) {
    const int bk = marked[static_cast<std::size_t>(i)];
    std::vector<int> kids = w.nb(bk);
    if (const int lc = last_child[static_cast<std::size_t>(bk)]; lc >= 0) {
      rotate_to_front(kids, lc);
      std::rotate(kids.begin(), kids.begin() + 1, kids.end());
    }
    if (kids.size() % static_cast<std::size_t>(p - 1) != 0)
      throw std::invalid_argument("marked black degree is not a multiple of p-1");
    res.groups.push_back(static_cast<int>(kids.size()) / (p - 1));
    for (int c : kids) {
      if (w.color[static_cast<std::size_t>(c)] != Color::White) throw std::invalid_argument("marked black vertex has a non-white neighbour");
      // detach c from bk and root its component at the corner after bk
      RotationSystem rs;
      std::vector<int> id(w.color.size(), -1);
      std::vector<int> par;
      const auto comp = w.component(c, &par);
      for (int v : comp)
        if (kept[static_cast<std::size_t>(v)]) id[static_cast<std::size_t>(v)] = rs.add_node(w.color[static_cast<std::size_t>(v)], w.mark[static_cast<std::size_t>(v)]);
      for (int v : comp) {
        if (!kept[static_cast<std::size_t>(v)]) continue;
        std::vector<int> a = w.nb(v);
        if (v == c) {
          rotate_to_front(a, bk);
          a.erase(a.begin());
        }
        for (int x : a)
          if (kept[static_cast<std::size_t>(x)]) rs.adj[static_cast<std::size_t>(id[static_cast<std::size_t>(v)])].push_back(id[static_cast<std::size_t>(x)]);
      }
      res.forest.components.push_back(root_at(rs, id[static_cast<std::size_t>(c)], 0));
    }
  }

  // recover the aggregation choices that rebuild `mobile`
  std::vector<int> agg(static_cast<std::size_t>(r - 1), 0);
  std::function<bool(int)> search = [&](int k) {
    if (k == r - 1) {
      const AggregateResult back = aggregate(res.forest, p, res.groups, agg);
      return back.mobile == mobile && back.disaggregation_choices == choices;
    }
    for (int c = 0; c < r - 1 - k; ++c) {
      agg[static_cast<std::size_t>(k)] = c;
      if (search(k + 1)) return true;
    }
    return false;
  };
  if (!search(0)) throw std::logic_error("disaggregation is not inverted by any aggregation choice sequence");
  res.aggregation_choices = agg;
  return res;
}

long subset_rank(const std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  long rank = 0;
  int prev = -1;
  for (int m = 0; m < k; ++m) {
    for (int v = prev + 1; v < subset[static_cast<std::size_t>(m)]; ++v) rank += choose(n - v - 1, k - m - 1);
    prev = subset[static_cast<std::size_t>(m)];
  }
  return rank;
}

std::vector<int> subset_unrank(long rank, int k, int n) {
  if (rank < 0 || rank >= choose(n, k)) throw std::out_of_range("subset rank out of range");
  std::vector<int> out;
  int v = 0;
  for (int m = 0; m < k; ++m) {
    for (;; ++v) {
      const long c = choose(n - v - 1, k - m - 1);
      if (rank < c) break;
      rank -= c;
    }
    out.push_back(v++);
  }
  return out;
}

namespace {

bool fail_tree(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

// The internal vertex below a tree edge: for p >= 3 the edge passes through an
// intermediate dark square; returns (light, position among the dark's children).
std::pair<int, int> below(const PlaneTree& t, int v, int p) {
  if (t.node(v).color == Color::White) return {-1, 0};
  if (p == 2) return {v, 0};
  const auto& ch = t.node(v).children;
  for (std::size_t j = 0; j < ch.size(); ++j)
    if (t.node(ch[j]).color == Color::Black) return {ch[j], static_cast<int>(j)};
  throw std::invalid_argument("intermediate dark square without a light child");
}

bool is_subtree_slot(const PlaneTree& t, int c, int p) {
  const Color col = t.node(c).color;
  if (col == Color::White) return true;
  if (p == 2) return col == Color::Black;
  return col == Color::Dark && !is_big_bud(t, c);
}

}  // namespace

bool is_blossoming_tree(const PlaneTree& t, int p, std::string* why) {
  if (p < 2) return fail_tree(why, "p must be at least 2");
  if (t.empty() || t.node(0).color != Color::White || t.node(0).children.size() != 1)
    return fail_tree(why, "the root leaf must be white with exactly one child");
  if (const int c = t.node(0).children.front(); !is_subtree_slot(t, c, p) || (t.node(c).color == Color::Dark && is_big_bud(t, c)))
    return fail_tree(why, "the root leaf must carry a leaf or an internal vertex");
  for (int v = 1; v < t.size(); ++v) {
    const TreeNode& n = t.node(v);
    switch (n.color) {
      case Color::White:
        if (!n.children.empty()) return fail_tree(why, "leaves must not have children");
        break;
      case Color::Bud:
        if (!n.children.empty()) return fail_tree(why, "buds must be leaves");
        break;
      case Color::Dark: {
        if (p == 2) return fail_tree(why, "no dark squares when p = 2");
        if (static_cast<int>(n.children.size()) != p - 1) return fail_tree(why, "dark squares must have degree p");
        int lights = 0;
        for (int c : n.children) {
          if (t.node(c).color == Color::Black) ++lights;
          else if (t.node(c).color != Color::Bud) return fail_tree(why, "dark squares carry buds and at most one light child");
        }
        if (lights > 1) return fail_tree(why, "dark squares carry at most one light child");
        const Color pc = t.node(n.parent).color;
        if (lights == 0 && pc != Color::Black) return fail_tree(why, "big buds must hang on light squares");
        if (lights == 1 && n.parent != 0 && pc != Color::Black) return fail_tree(why, "misplaced intermediate dark square");
        break;
      }
      case Color::Black: {
        const Color pc = t.node(n.parent).color;
        if (p > 2 && pc != Color::Dark) return fail_tree(why, "light squares must sit below an intermediate dark square");
        if (p == 2 && !(pc == Color::Black || n.parent == 0)) return fail_tree(why, "internal vertex below a leaf");
        int subtrees = 0, buds = 0;
        for (int c : n.children) {
          if (is_subtree_slot(t, c, p)) ++subtrees;
          else if (is_big_bud(t, c)) ++buds;
          else return fail_tree(why, "unexpected child of an internal vertex");
        }
        if (subtrees == 0 || subtrees % (p - 1) != 0) return fail_tree(why, "arity must be a positive multiple of p-1");
        if (buds != subtrees / (p - 1) - 1) return fail_tree(why, "an internal vertex of arity (p-1)i needs i-1 big buds");
        break;
      }
    }
  }
  return true;
}

PlaneTree blossoming_to_mobile(const PlaneTree& tree, int p) {
  std::string why;
  if (!is_blossoming_tree(tree, p, &why)) throw std::invalid_argument("not a blossoming tree: " + why);
  PlaneTree out(Color::White);
  // appends to white `wo` the children encoding the subtree below tree node v
  std::function<void(int, int)> build = [&](int v, int wo) {
    const auto [light, j] = below(tree, v, p);
    if (light < 0) return;
    const auto& slots = tree.node(light).children;
    const int n = static_cast<int>(slots.size());  // pi - 1
    const int i = (n + 1) / p;
    std::vector<int> bud_pos, subtrees;
    for (int k = 0; k < n; ++k) {
      if (is_subtree_slot(tree, slots[static_cast<std::size_t>(k)], p)) subtrees.push_back(slots[static_cast<std::size_t>(k)]);
      else bud_pos.push_back(k);
    }
    const long rank = j * choose(n, i - 1) + subset_rank(bud_pos, n);
    const auto big = subset_unrank(rank, i, n);
    const int b = out.add_child(wo, Color::Black);
    std::size_t next = 0, bi = 0;
    for (int k = 0; k < n; ++k) {
      if (bi < big.size() && big[bi] == k) {
        add_big_bud(out, b, p);
        ++bi;
      } else {
        const int wc = out.add_child(b, Color::White);
        build(subtrees[next++], wc);
      }
    }
    build(subtrees.back(), wo);
  };
  build(tree.node(0).children.front(), 0);
  return out;
}

PlaneTree mobile_to_blossoming(const PlaneTree& mobile, int p) {
  const MobileClass cls = validate_mobile(mobile, p);
  if (cls != (p == 2 ? MobileClass::Bipartite : MobileClass::PRegular) || mobile.node(0).color != Color::White)
    throw std::invalid_argument("expected a rooted p-mobile");
  PlaneTree out(Color::White);
  // subtree below tree node `parent` for the mobile at white w from child index `from`
  std::function<void(int, std::size_t, int)> unbuild = [&](int w, std::size_t from, int parent) {
    const auto& wc = mobile.node(w).children;
    if (from == wc.size()) {
      out.add_child(parent, Color::White);
      return;
    }
    const int b = wc[from];
    const auto& slots = mobile.node(b).children;
    const int n = static_cast<int>(slots.size());
    const int i = (n + 1) / p;
    std::vector<int> big, whites;
    for (int k = 0; k < n; ++k) {
      if (is_big_bud(mobile, slots[static_cast<std::size_t>(k)])) big.push_back(k);
      else whites.push_back(slots[static_cast<std::size_t>(k)]);
    }
    const long rank = subset_rank(big, n);
    const long per = choose(n, i - 1);
    const int j = static_cast<int>(rank / per);
    const auto bud_pos = subset_unrank(rank % per, i - 1, n);
    int light;
    if (p == 2) {
      light = out.add_child(parent, Color::Black);
    } else {
      const int d = out.add_child(parent, Color::Dark);
      light = -1;
      for (int q = 0; q < p - 1; ++q) {
        if (q == j) light = out.add_child(d, Color::Black);
        else out.add_child(d, Color::Bud);
      }
    }
    std::size_t bi = 0, next = 0;
    const std::size_t last = whites.size();  // the final subtree slot is the rest of w
    for (int k = 0; k < n; ++k) {
      if (bi < bud_pos.size() && bud_pos[bi] == k) {
        add_big_bud(out, light, p);
        ++bi;
      } else if (next < last) {
        unbuild(whites[next++], 0, light);
      } else {
        unbuild(w, from + 1, light);
      }
    }
  };
  unbuild(0, 0, 0);
  return out;
}

}  // namespace cmaps
