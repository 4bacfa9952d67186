#include "doctest.h"

#include <map>
#include <set>

#include "cmaps/bijections.hpp"
#include "cmaps/mobile_gen.hpp"

using namespace cmaps;

namespace {

std::vector<PlaneTree> rooted_mobiles(int p, int max_whites, int max_blacks) {
  MobileGrammar g;
  g.kind = Grammar::PRegular;
  g.p = p;
  g.max_whites = max_whites;
  g.max_blacks = max_blacks;
  g.max_degree = 2 * p;
  std::vector<PlaneTree> out;
  for_each_rooted_mobile(g, {}, [&](const PlaneTree& t) { out.push_back(t); });
  return out;
}

std::vector<int> whites_of(const PlaneTree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.size(); ++v)
    if (t.node(v).color == Color::White) out.push_back(v);
  return out;
}

// all forests of s components from `pool` carrying white marks 1..r-1
void for_each_forest(const std::vector<PlaneTree>& pool, int s, int r, const std::function<void(const MobileForest&)>& visit) {
  MobileForest f;
  std::function<void(int)> place = [&](int label) {
    if (label == r) {
      visit(f);
      return;
    }
    for (auto& c : f.components)
      for (int v : whites_of(c)) {
        if (c.node(v).mark != 0) continue;
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
      f.components.push_back(t);
      pick();
      f.components.pop_back();
    }
  };
  pick();
}

void for_each_choice(int r, const std::function<void(const std::vector<int>&)>& visit) {
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

struct RoundTrip {
  int inputs = 0;
  std::set<std::string> images;
};

RoundTrip check_round_trips(int p, const std::vector<int>& groups, const std::vector<PlaneTree>& pool) {
  const int r = static_cast<int>(groups.size());
  int s = 0;
  for (int a : groups) s += (p - 1) * a;
  RoundTrip rt;
  for_each_forest(pool, s, r, [&](const MobileForest& f) {
    for_each_choice(r, [&](const std::vector<int>& choices) {
      const AggregateResult agg = aggregate(f, p, groups, choices);
      const DisaggregateResult back = disaggregate(agg.mobile, p, agg.disaggregation_choices);
      REQUIRE(back.forest == f);
      REQUIRE(back.groups == groups);
      REQUIRE(back.aggregation_choices == choices);
      ++rt.inputs;
      std::string key = agg.mobile.encode() + "|";
      for (int d : agg.disaggregation_choices) key += std::to_string(d) + ",";
      rt.images.insert(key);
    });
  });
  return rt;
}

// blossoming trees with at most `max_internal` internal vertices of arity (p-1)i, i <= max_i
std::vector<PlaneTree> blossoming_trees(int p, int max_internal, int max_i) {
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
          std::vector<ChildList> w = p == 2 ? words(2 * i - 1, {{Color::White}, {Color::Black}, {Color::Bud}},
                                                    [&](const std::vector<int>& c) { return c[2] == i - 1; })
                                            : words(p * i - 1, {{Color::White}, {Color::Dark}},
                                                    [](const std::vector<int>&) { return true; });
          out.insert(out.end(), w.begin(), w.end());
        }
        return;
    }
  };
  PruneRule prune = [&](const PlaneTree& t) { return t.count(Color::Black) > max_internal; };
  std::vector<PlaneTree> out;
  enumerate_trees(PlaneTree(Color::White), expand, prune, {}, [&](const PlaneTree& t) {
    if (is_blossoming_tree(t, p)) out.push_back(t);
  });
  return out;
}

}  // namespace

TEST_CASE("subset ranking is a bijection onto lexicographic order") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      const long total = binomial(n, k).get_si();
      std::vector<int> prev;
      for (long r = 0; r < total; ++r) {
        const auto s = subset_unrank(r, k, n);
        CHECK(static_cast<int>(s.size()) == k);
        CHECK(subset_rank(s, n) == r);
        if (r > 0) CHECK(prev < s);
        prev = s;
      }
    }
  CHECK_THROWS_AS(subset_unrank(3, 1, 3), std::out_of_range);
}

TEST_CASE("bdg on the smallest maps") {
  const PlanarMap edge({0, 1});
  const PlaneTree m0 = bdg_forward(edge, 0);
  CHECK(m0.count(Color::White) == 1);
  CHECK(m0.count(Color::Black) == 1);
  CHECK(m0.degree(0) == 2);
  CHECK(validate_mobile(m0, 2) == MobileClass::Bipartite);
  CHECK(bdg_forward(edge, 1).encode() != m0.encode());

  const PlanarMap loop({1, 0});
  const PlaneTree ml = bdg_forward(loop, 0);
  CHECK(ml.count(Color::White) == 0);
  CHECK(ml.count(Color::Black) == 2);
  CHECK(ml.degree(0) == 1);
  CHECK(validate_mobile(ml, 2) == MobileClass::QuasiBipartite);

  CHECK_THROWS_AS(bdg_forward(PlanarMap({2, 3, 1, 0}), 0), std::invalid_argument);
  CHECK_THROWS_AS(bdg_forward(PlanarMap({0, 1, 2, 3}), 0), std::invalid_argument);
  CHECK_THROWS_AS(bdg_forward(edge, 2), std::invalid_argument);
}

TEST_CASE("rooted planar map counts") {
  const std::vector<std::size_t> expected{2, 9, 54, 378};
  for (int e = 1; e <= 4; ++e) CHECK(rooted_planar_maps(e).size() == expected[static_cast<std::size_t>(e - 1)]);
}

TEST_CASE("bdg is a bijection onto classical mobiles rooted at a black half-edge") {
  for (int e = 1; e <= 4; ++e) {
    CAPTURE(e);
    std::set<std::string> images;
    std::size_t pointed = 0;
    for (const PlanarMap& m : rooted_planar_maps(e)) {
      for (int v = 0; v < static_cast<int>(m.vertices().size()); ++v) {
        const PlaneTree t = bdg_forward(m, v);
        const MobileClass cls = validate_mobile(t, 2);
        CHECK(cls != MobileClass::Invalid);
        int odd_faces = 0;
        for (const auto& f : m.faces()) odd_faces += static_cast<int>(f.size() % 2);
        CHECK(cls == (odd_faces == 0 ? MobileClass::Bipartite
                                     : odd_faces == 2 ? MobileClass::QuasiBipartite : MobileClass::General));
        CHECK(t.count(Color::White) == static_cast<int>(m.vertices().size()) - 1);
        CHECK(t.count(Color::Black) == static_cast<int>(m.faces().size()));
        images.insert(t.encode());
        ++pointed;
      }
    }
    CHECK(images.size() == pointed);

    MobileGrammar g;
    g.kind = Grammar::Classical;
    g.max_whites = e + 1;
    g.max_blacks = e + 1;
    g.max_degree = 2 * e;
    g.degree_sum = 2 * e;
    std::set<std::string> mobiles;
    for_each_black_rooted_mobile(g, 0, {}, [&](const PlaneTree& t) {
      int deg = 0;
      for (int v = 0; v < t.size(); ++v)
        if (t.node(v).color == Color::Black) deg += t.degree(v);
      if (deg == 2 * e) mobiles.insert(t.encode());
    });
    CHECK(mobiles == images);
  }
}

TEST_CASE("aggregation with a single group adds only the marked root") {
  const auto pool = rooted_mobiles(2, 2, 1);
  for (const auto& t : pool) {
    MobileForest f;
    f.components = {t};
    const auto agg = aggregate(f, 2, {1}, {});
    CHECK(agg.mobile.node(0).color == Color::Black);
    CHECK(agg.mobile.node(0).mark == 1);
    CHECK(agg.mobile.degree(0) == 1);
    CHECK(agg.disaggregation_choices.empty());
    const auto back = disaggregate(agg.mobile, 2, {});
    CHECK(back.forest == f);
    CHECK(back.groups == std::vector<int>{1});
  }
}

TEST_CASE("aggregation round trips") {
  SUBCASE("p=2, a=(1,1)") {
    const auto rt = check_round_trips(2, {1, 1}, rooted_mobiles(2, 2, 1));
    CHECK(rt.inputs > 0);
    CHECK(static_cast<int>(rt.images.size()) == rt.inputs);
  }
  SUBCASE("p=2, a=(2,1)") {
    const auto rt = check_round_trips(2, {2, 1}, rooted_mobiles(2, 2, 1));
    CHECK(static_cast<int>(rt.images.size()) == rt.inputs);
  }
  SUBCASE("p=2, a=(1,1,1)") {
    const auto rt = check_round_trips(2, {1, 1, 1}, rooted_mobiles(2, 2, 1));
    CHECK(static_cast<int>(rt.images.size()) == rt.inputs);
  }
  SUBCASE("p=2, a=(1,1,1,1)") {
    const auto rt = check_round_trips(2, {1, 1, 1, 1}, rooted_mobiles(2, 1, 0));
    CHECK(static_cast<int>(rt.images.size()) == rt.inputs);
  }
  SUBCASE("p=3, a=(1,1)") {
    const auto rt = check_round_trips(3, {1, 1}, rooted_mobiles(3, 3, 1));
    CHECK(static_cast<int>(rt.images.size()) == rt.inputs);
  }
}

TEST_CASE("aggregation rejects bad input") {
  MobileForest f;
  f.components = {PlaneTree(Color::White), PlaneTree(Color::White)};
  CHECK_THROWS_AS(aggregate(f, 2, {1, 1}, {0}), std::invalid_argument);  // mark w_1 missing
  f.components[0].node(0).mark = 1;
  CHECK_NOTHROW(aggregate(f, 2, {1, 1}, {0}));
  CHECK_THROWS_AS(aggregate(f, 2, {1, 1}, {1}), std::out_of_range);
  CHECK_THROWS_AS(aggregate(f, 2, {1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(aggregate(f, 2, {1, 1}, {}), std::invalid_argument);
}

TEST_CASE("blossoming trees and p-mobiles") {
  for (int p = 2; p <= 3; ++p) {
    CAPTURE(p);
    const int max_i = 2;
    const int max_internal = p == 2 ? 3 : 2;
    std::set<std::string> images;
    const auto trees = blossoming_trees(p, max_internal, max_i);
    CHECK(!trees.empty());
    for (const auto& t : trees) {
      const PlaneTree m = blossoming_to_mobile(t, p);
      CHECK(validate_mobile(m, p) == (p == 2 ? MobileClass::Bipartite : MobileClass::PRegular));
      CHECK(mobile_to_blossoming(m, p) == t);
      images.insert(m.encode());
    }
    CHECK(images.size() == trees.size());

    MobileGrammar g;
    g.kind = Grammar::PRegular;
    g.p = p;
    g.max_whites = 1 + max_internal * ((p - 1) * max_i - 1);
    g.max_blacks = max_internal;
    g.max_degree = p * max_i;
    std::set<std::string> mobiles;
    for_each_rooted_mobile(g, {}, [&](const PlaneTree& m) { mobiles.insert(m.encode()); });
    CHECK(mobiles == images);
  }
  PlaneTree bad(Color::White);
  bad.add_child(0, Color::Bud);
  CHECK_FALSE(is_blossoming_tree(bad, 2));
  CHECK_THROWS_AS(blossoming_to_mobile(bad, 2), std::invalid_argument);
}
