#include "cmaps/mobile_gen.hpp"

#include <algorithm>
#include <set>

namespace cmaps {

std::vector<int> MobileGrammar::degree_options(const PlaneTree& t, int v) const {
  const int mark = t.node(v).mark;
  if (mark != 0) {
    auto it = marked_degree.find(mark);
    if (it != marked_degree.end()) return {it->second};
  }
  int hi = max_degree;
  if (degree_sum >= 0) hi = std::min(hi, degree_sum);
  bool irregular_left = irregular_degree >= 0;
  if (kind == Grammar::Hyper && t.node(v).parent >= 0 && t.node(t.node(v).parent).color != Color::Dark) irregular_left = false;
  if (irregular_left)
    for (int u = 0; u < v; ++u)
      if (t.node(u).color == Color::Black && t.node(u).mark == 0 && t.degree(u) % p != 0) irregular_left = false;
  std::vector<int> out;
  for (int k = 1; k <= hi; ++k) {
    if (kind == Grammar::Bipartite && k % 2 != 0) continue;
    if (kind == Grammar::PRegular && k % p != 0) continue;
    if (irregular_degree >= 0 && k % p != 0 && !(irregular_left && k == irregular_degree)) continue;
    out.push_back(k);
  }
  return out;
}

void MobileGrammar::expand(const PlaneTree& t, int v, std::vector<ChildList>& out) const {
  const TreeNode& n = t.node(v);
  switch (n.color) {
    case Color::Bud:
      out.push_back({});
      return;
    case Color::Dark: {
      if (kind != Grammar::Hyper) {
        out.push_back(ChildList(static_cast<std::size_t>(p - 1), ChildSpec{Color::Bud}));
        return;
      }
      out.push_back(ChildList(static_cast<std::size_t>(p - 1), ChildSpec{Color::Bud}));
      const int light = n.parent;
      const TreeNode& ln = t.node(light);
      if (!(ln.parent < 0 || t.node(ln.parent).color == Color::Dark)) return;
      for (int sib : ln.children)
        if (sib != v && t.node(sib).color == Color::Dark)
          for (int c : t.node(sib).children)
            if (t.node(c).color == Color::Black) return;
      for (int j = 0; j < p - 1; ++j) {
        ChildList kids(static_cast<std::size_t>(p - 1), ChildSpec{Color::Bud});
        kids[static_cast<std::size_t>(j)] = {Color::Black};
        out.push_back(kids);
      }
      return;
    }
    case Color::White: {
      std::vector<ChildSpec> alphabet{{Color::Black}};
      if (place_marks) {
        std::set<int> used;
        for (const auto& node : t.nodes())
          if (node.color == Color::Black && node.mark != 0) used.insert(node.mark);
        for (const auto& [label, deg] : marked_degree)
          if (!used.count(label)) alphabet.push_back({Color::Black, label});
      }
      const int room = max_blacks - t.count(Color::Black);
      for (int len = 0; len <= room; ++len) {
        auto w = words(len, alphabet, [](const std::vector<int>& c) {
          for (std::size_t k = 1; k < c.size(); ++k)
            if (c[k] > 1) return false;
          return true;
        });
        out.insert(out.end(), w.begin(), w.end());
      }
      return;
    }
    case Color::Black:
      break;
  }
  const bool has_parent = n.parent >= 0;
  const bool parent_white = has_parent && t.node(n.parent).color == Color::White;
  const bool pruned = n.mark != 0 && pruned_marks && marked_degree.count(n.mark);
  for (int k : degree_options(t, v)) {
    const int slots = k - (has_parent ? 1 : 0);
    if (slots < 0) continue;
    if (pruned) {
      if (!has_parent || parent_white) out.push_back(ChildList(static_cast<std::size_t>(slots), ChildSpec{Color::White}));
      continue;
    }
    std::vector<ChildList> w;
    switch (kind) {
      case Grammar::Bipartite:
        w = words(slots, {{Color::White}, {Color::Bud}},
                  [&](const std::vector<int>& c) { return c[1] == c[0] + (parent_white ? 1 : 0); });
        break;
      case Grammar::Classical:
        w = words(slots, {{Color::White}, {Color::Black}, {Color::Bud}},
                  [&](const std::vector<int>& c) { return c[2] == c[0] + (parent_white ? 1 : 0); });
        break;
      case Grammar::PRegular: {
        const Color big = p == 2 ? Color::Bud : Color::Dark;
        w = words(slots, {{Color::White}, {big}}, [&](const std::vector<int>& c) { return c[1] * p == k; });
        break;
      }
      case Grammar::Hyper:
        w = words(slots, {{Color::White}, {Color::Dark}}, [](const std::vector<int>&) { return true; });
        break;
    }
    out.insert(out.end(), w.begin(), w.end());
  }
}

bool MobileGrammar::prune(const PlaneTree& t) const {
  int whites = 0, blacks = 0, deg = 0;
  for (int v = 0; v < t.size(); ++v) {
    const Color c = t.node(v).color;
    if (c == Color::White) ++whites;
    if (c == Color::Black) {
      ++blacks;
      deg += t.degree(v);
    }
  }
  if (whites > max_whites || blacks > max_blacks) return true;
  return degree_sum >= 0 && deg > degree_sum;
}

std::uint64_t MobileGrammar::run(const PlaneTree& seed, const EnumLimits& limits,
                                 const std::function<void(const PlaneTree&)>& visit) const {
  return enumerate_trees(
      seed, [this](const PlaneTree& t, int v, std::vector<ChildList>& out) { expand(t, v, out); },
      [this](const PlaneTree& t) { return prune(t); }, limits, visit);
}

std::uint64_t for_each_rooted_mobile(const MobileGrammar& g, const EnumLimits& limits,
                                     const std::function<void(const PlaneTree&)>& visit) {
  return g.run(PlaneTree(Color::White), limits, visit);
}

std::uint64_t for_each_black_rooted_mobile(const MobileGrammar& g, int root_mark, const EnumLimits& limits,
                                           const std::function<void(const PlaneTree&)>& visit) {
  PlaneTree seed(Color::Black);
  seed.node(0).mark = root_mark;
  return g.run(seed, limits, visit);
}

std::string canonical_at(const PlaneTree& t, int v) {
  const int deg = std::max(t.degree(v), 1);
  std::string best;
  for (int k = 0; k < deg; ++k) {
    std::string e = reroot(t, v, k).encode();
    if (k == 0 || e < best) best = std::move(e);
  }
  return best;
}

}  // namespace cmaps
