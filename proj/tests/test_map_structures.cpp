#include "doctest.h"

#include <set>

#include "cmaps/mobile.hpp"
#include "cmaps/mobile_gen.hpp"
#include "cmaps/planar_map.hpp"

using namespace cmaps;

namespace {

PlaneTree smallest_mobile() {
  PlaneTree t(Color::White);
  const int b = t.add_child(0, Color::Black);
  t.add_child(b, Color::Bud);
  return t;
}

// triangle: edge k = darts 2k (v_k -> v_{k+1}) and 2k+1
PlanarMap triangle() {
  std::vector<int> sigma(6);
  for (int k = 0; k < 3; ++k) {
    const int out = 2 * k, in = 2 * ((k + 2) % 3) + 1;
    sigma[static_cast<std::size_t>(out)] = in;
    sigma[static_cast<std::size_t>(in)] = out;
  }
  return PlanarMap(sigma);
}

}  // namespace

TEST_CASE("orbits and genus") {
  const PlanarMap edge({0, 1});
  CHECK(edge.vertices().size() == 2);
  CHECK(edge.faces().size() == 1);
  CHECK(edge.genus() == 0);

  const PlanarMap loop({1, 0});
  CHECK(loop.vertices().size() == 1);
  REQUIRE(loop.faces().size() == 2);
  CHECK(loop.faces()[0].size() == 1);
  CHECK(loop.faces()[1].size() == 1);
  CHECK(loop.genus() == 0);

  // sigma = (0 2 1 3): one vertex, one face, two edges
  const PlanarMap torus({2, 3, 1, 0});
  CHECK(torus.vertices().size() == 1);
  CHECK(torus.faces().size() == 1);
  CHECK(torus.genus() == 1);

  // sigma = (0 2)(1 3) is the planar double edge
  const PlanarMap dbl({2, 3, 0, 1});
  CHECK(dbl.genus() == 0);
  CHECK(dbl.faces().size() == 2);
}

TEST_CASE("face degrees sum to the number of darts") {
  for (const PlanarMap& m : {PlanarMap({0, 1}), PlanarMap({1, 0}), triangle(), PlanarMap({2, 3, 1, 0})}) {
    std::size_t total = 0;
    for (const auto& f : m.faces()) total += f.size();
    CHECK(static_cast<int>(total) == m.n_darts());
    const int chi = static_cast<int>(m.vertices().size()) - m.n_edges() + static_cast<int>(m.faces().size());
    CHECK(chi - 2 == -2 * m.genus());
  }
}

TEST_CASE("invalid maps") {
  CHECK_THROWS_AS(PlanarMap({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarMap({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarMap(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarMap({0, 2}), std::invalid_argument);
  const PlanarMap two_edges({0, 1, 2, 3});
  CHECK_FALSE(two_edges.connected());
  CHECK_THROWS_AS(two_edges.genus(), std::invalid_argument);
}

TEST_CASE("distances") {
  CHECK(PlanarMap({0, 1}).bfs_distances(0) == std::vector<int>{0, 1});
  CHECK(PlanarMap({1, 0}).bfs_distances(0) == std::vector<int>{0});
  const PlanarMap path({0, 2, 1, 3});
  CHECK(path.bfs_distances(0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("hypermap colourings") {
  CHECK(hypermap_colorings(PlanarMap({1, 0}), 2).empty());
  const auto dbl = hypermap_colorings(PlanarMap({2, 3, 0, 1}), 2);
  REQUIRE(dbl.size() == 2);
  CHECK(dbl[0][0] != dbl[1][0]);
  // both faces of the triangle have degree 3, so both colourings qualify
  const auto tri = hypermap_colorings(triangle(), 3);
  CHECK(tri.size() == 2);
  CHECK(hypermap_colorings(triangle(), 2).empty());
  // a tree map has one face on both sides of each edge
  CHECK(hypermap_colorings(PlanarMap({0, 1}), 2).empty());
}

TEST_CASE("map JSON round trip") {
  const PlanarMap m({2, 3, 0, 1}, 1);
  const auto j = m.to_json();
  CHECK(j.dump() == R"({"n_darts":4,"pointed_vertex":1,"sigma":[2,3,0,1]})");
  const PlanarMap back = PlanarMap::from_json(j);
  CHECK(back.sigma() == m.sigma());
  CHECK(back.pointed_vertex() == 1);
  CHECK(back.to_json().dump() == j.dump());
  CHECK_THROWS_AS(PlanarMap::from_json(nlohmann::json::parse(R"({"n_darts":4,"sigma":[0,1]})")), std::invalid_argument);
  CHECK_THROWS_AS(PlanarMap::from_json(nlohmann::json::parse(R"({"n_darts":2,"sigma":[0,0]})")), std::invalid_argument);
}

TEST_CASE("plane tree basics") {
  PlaneTree t(Color::White);
  const int b = t.add_child(0, Color::Black);
  t.add_child(b, Color::White);
  t.add_child(b, Color::Bud);
  t.add_child(b, Color::Bud);
  CHECK(t.degree(b) == 4);
  CHECK(t.rotation(b).front() == 0);
  CHECK(t.count(Color::Bud) == 2);
  CHECK(t.encode() == "W(B(Wuu))");
  const PlaneTree back = PlaneTree::from_json(t.to_json());
  CHECK(back == t);
  CHECK(back.to_json().dump() == t.to_json().dump());
  CHECK_THROWS_AS(parse_color("purple"), std::invalid_argument);
}

TEST_CASE("rerooting keeps the cyclic structure") {
  PlaneTree t(Color::White);
  const int b = t.add_child(0, Color::Black);
  const int w = t.add_child(b, Color::White);
  t.add_child(b, Color::Bud);
  t.node(w).mark = 3;
  CHECK(reroot(t, b, 1).encode() == "B(W#3uW)");
  const PlaneTree r = reroot(t, b, 2);  // first child: the bud
  CHECK(r.encode() == "B(uWW#3)");
  // going back gives the original
  CHECK(reroot(r, 2, 0).encode() == t.encode());
  std::set<std::string> codes;
  for (int k = 0; k < 3; ++k) codes.insert(reroot(t, b, k).encode());
  CHECK(codes.size() == 3);
}

TEST_CASE("classification of classical mobiles") {
  CHECK(validate_mobile(smallest_mobile(), 2) == MobileClass::Bipartite);

  PlaneTree loop(Color::Black);
  loop.add_child(0, Color::Black);
  CHECK(validate_mobile(loop, 2) == MobileClass::QuasiBipartite);

  PlaneTree q(Color::Black);  // degree 3 (black, white, bud) and degree 1
  q.add_child(0, Color::Black);
  q.add_child(0, Color::White);
  q.add_child(0, Color::Bud);
  CHECK(validate_mobile(q, 2) == MobileClass::QuasiBipartite);

  PlaneTree bad = smallest_mobile();
  bad.add_child(1, Color::Bud);
  std::string why;
  CHECK(validate_mobile(bad, 2, &why) == MobileClass::Invalid);
  CHECK(why.find("buds") != std::string::npos);

  PlaneTree ww(Color::White);
  ww.add_child(0, Color::White);
  CHECK(validate_mobile(ww, 2) == MobileClass::Invalid);

  // a black path between the two odd vertices
  PlaneTree chain(Color::Black);
  const int m = chain.add_child(0, Color::Black);
  chain.add_child(0, Color::Black);
  chain.add_child(m, Color::Black);
  CHECK(validate_mobile(chain, 2) == MobileClass::QuasiBipartite);

  // a black star has four odd vertices
  PlaneTree star(Color::Black);
  for (int k = 0; k < 3; ++k) star.add_child(0, Color::Black);
  CHECK(validate_mobile(star, 2) == MobileClass::General);
}

TEST_CASE("classification of p-mobiles") {
  PlaneTree t(Color::White);
  const int b = t.add_child(0, Color::Black);
  t.add_child(b, Color::White);
  add_big_bud(t, b, 3);
  CHECK(validate_mobile(t, 3) == MobileClass::PRegular);

  PlaneTree q(Color::White);
  const int v1 = q.add_child(0, Color::Black);
  const int d = q.add_child(v1, Color::Dark);
  q.add_child(d, Color::Black);
  q.add_child(d, Color::Bud);
  CHECK(validate_mobile(q, 3) == MobileClass::QuasiP);
  const auto ap = alternating_path(q, 3);
  CHECK(ap.weights == std::vector<int>{2, 1});
  CHECK(ap.d == 1);

  PlaneTree wrong(Color::White);
  const int l = wrong.add_child(0, Color::Black);
  wrong.add_child(l, Color::White);
  wrong.add_child(l, Color::White);
  CHECK(validate_mobile(wrong, 3) == MobileClass::Invalid);

  PlaneTree bud_on_light = smallest_mobile();
  CHECK(validate_mobile(bud_on_light, 3) == MobileClass::Invalid);
}

TEST_CASE("unpruning counts") {
  CHECK(unprune_count(2, 1) == 1);
  CHECK(unprune_count(2, 2) == 3);
  CHECK(unprune_count(3, 1) == 2);
  CHECK(composition_count(2, 2) == 3);
  CHECK(composition_unrank(2, 2, 0) == std::vector<int>{0, 2});
  CHECK(composition_unrank(2, 2, 2) == std::vector<int>{2, 0});
  CHECK_THROWS_AS(composition_unrank(2, 2, 3), std::out_of_range);
}

TEST_CASE("unprune_rank enumerates every bud placement exactly once") {
  for (int p = 2; p <= 4; ++p)
    for (int a = 1; a <= 3; ++a) {
      // pruned marked black of degree (p-1)a hanging below a white root
      PlaneTree pruned(Color::White);
      const int b = pruned.add_child(0, Color::Black);
      pruned.node(b).mark = 1;
      for (int k = 0; k < (p - 1) * a - 1; ++k) pruned.add_child(b, Color::White);
      const long n = unprune_count(p, a).get_si();
      std::set<std::string> seen;
      for (long r = 0; r < n; ++r) {
        const PlaneTree m = unprune_rank(pruned, p, {r});
        CHECK(validate_mobile(m, p) == (p == 2 ? MobileClass::Bipartite : MobileClass::PRegular));
        CHECK(m.degree(1) == p * a);
        CHECK(prune(m, {1}).encode() == pruned.encode());
        seen.insert(m.encode());
      }
      CHECK(static_cast<long>(seen.size()) == n);
      CHECK_THROWS_AS(unprune_rank(pruned, p, {n}), std::out_of_range);
    }
}

TEST_CASE("generated rooted mobiles are valid") {
  for (int p = 2; p <= 3; ++p) {
    MobileGrammar g;
    g.kind = Grammar::PRegular;
    g.p = p;
    g.max_whites = 3;
    g.max_blacks = 2;
    g.max_degree = 2 * p;
    std::uint64_t n = for_each_rooted_mobile(g, {}, [&](const PlaneTree& t) {
      CHECK(validate_mobile(t, p) == (p == 2 ? MobileClass::Bipartite : MobileClass::PRegular));
    });
    CHECK(n > 0);
  }
}

TEST_CASE("forest JSON") {
  MobileForest f;
  f.components.push_back(smallest_mobile());
  f.components.push_back(PlaneTree(Color::White));
  f.components[1].node(0).mark = 1;
  CHECK(f.whites() == 2);
  CHECK(MobileForest::from_json(f.to_json()) == f);
}
