#include "cmaps/planar_map.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cmaps {

namespace {

void cycles_of(int n, const auto& next, std::vector<std::vector<int>>& cycles, std::vector<int>& owner) {
  owner.assign(static_cast<std::size_t>(n), -1);
  for (int d = 0; d < n; ++d) {
    if (owner[static_cast<std::size_t>(d)] != -1) continue;
    const int id = static_cast<int>(cycles.size());
    cycles.emplace_back();
    int x = d;
    do {
      owner[static_cast<std::size_t>(x)] = id;
      cycles.back().push_back(x);
      x = next(x);
    } while (x != d);
  }
}

}  // namespace

PlanarMap::PlanarMap(std::vector<int> sigma, std::optional<int> pointed_vertex)
    : sigma_(std::move(sigma)), pointed_(pointed_vertex) {
  const int n = n_darts();
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("a map needs a positive even number of darts");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int s : sigma_) {
    if (s < 0 || s >= n || seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("sigma is not a permutation");
    seen[static_cast<std::size_t>(s)] = 1;
  }
  cycles_of(n, [&](int d) { return sigma_[static_cast<std::size_t>(d)]; }, vertices_, vertex_of_);
  cycles_of(n, [&](int d) { return phi(d); }, faces_, face_of_);
  if (pointed_ && (*pointed_ < 0 || *pointed_ >= static_cast<int>(vertices_.size())))
    throw std::invalid_argument("pointed vertex out of range");
}

bool PlanarMap::connected() const {
  const auto dist = bfs_distances(0);
  return std::all_of(dist.begin(), dist.end(), [](int x) { return x >= 0; });
}

int PlanarMap::genus() const {
  if (!connected()) throw std::invalid_argument("genus of a disconnected map");
  const int chi = static_cast<int>(vertices_.size()) - n_edges() + static_cast<int>(faces_.size());
  return (2 - chi) / 2;
}

std::vector<int> PlanarMap::bfs_distances(int v0) const {
  const int nv = static_cast<int>(vertices_.size());
  if (v0 < 0 || v0 >= nv) throw std::out_of_range("bfs_distances: bad vertex");
  std::vector<int> dist(static_cast<std::size_t>(nv), -1);
  std::deque<int> queue{v0};
  dist[static_cast<std::size_t>(v0)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int d : vertices_[static_cast<std::size_t>(v)]) {
      const int w = vertex_of(alpha(d));
      if (dist[static_cast<std::size_t>(w)] == -1) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

nlohmann::json PlanarMap::to_json() const {
  nlohmann::json j = {{"n_darts", n_darts()}, {"sigma", sigma_}};
  if (pointed_) j["pointed_vertex"] = *pointed_;
  return j;
}

PlanarMap PlanarMap::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sigma")) throw std::invalid_argument("map JSON needs a sigma array");
  auto sigma = j.at("sigma").get<std::vector<int>>();
  if (j.contains("n_darts") && j.at("n_darts").get<int>() != static_cast<int>(sigma.size()))
    throw std::invalid_argument("n_darts does not match sigma length");
  std::optional<int> pv;
  if (j.contains("pointed_vertex") && !j.at("pointed_vertex").is_null()) pv = j.at("pointed_vertex").get<int>();
  return PlanarMap(std::move(sigma), pv);
}

std::vector<std::vector<FaceColor>> hypermap_colorings(const PlanarMap& m, int p) {
  const int nf = static_cast<int>(m.faces().size());
  std::vector<int> side(static_cast<std::size_t>(nf), -1);
  // 2-colour the face adjacency graph; an edge with one face on both sides kills it
  for (int start = 0; start < nf; ++start) {
    if (side[static_cast<std::size_t>(start)] != -1) continue;
    if (start != 0) return {};  // face adjacency of a connected map is connected
    side[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      for (int d : m.faces()[static_cast<std::size_t>(f)]) {
        const int g = m.face_of(PlanarMap::alpha(d));
        if (g == f) return {};
        auto& sg = side[static_cast<std::size_t>(g)];
        if (sg == -1) {
          sg = 1 - side[static_cast<std::size_t>(f)];
          queue.push_back(g);
        } else if (sg == side[static_cast<std::size_t>(f)]) {
          return {};
        }
      }
    }
  }
  std::vector<std::vector<FaceColor>> out;
  for (int dark_side = 0; dark_side < 2; ++dark_side) {
    std::vector<FaceColor> col(static_cast<std::size_t>(nf));
    bool ok = true;
    for (int f = 0; f < nf; ++f) {
      const bool dark = side[static_cast<std::size_t>(f)] == dark_side;
      col[static_cast<std::size_t>(f)] = dark ? FaceColor::Dark : FaceColor::Light;
      if (dark && static_cast<int>(m.faces()[static_cast<std::size_t>(f)].size()) != p) ok = false;
    }
    if (ok) out.push_back(std::move(col));
  }
  return out;
}

}  // namespace cmaps

namespace cmaps {

std::vector<int> canonical_sigma(const PlanarMap& m) {
  const int n = m.n_darts();
  std::vector<int> label(static_cast<std::size_t>(n), -1), order;
  auto visit = [&](int d) {
    if (label[static_cast<std::size_t>(d)] >= 0) return;
    const int k = static_cast<int>(order.size());
    label[static_cast<std::size_t>(d)] = k;
    label[static_cast<std::size_t>(d ^ 1)] = k + 1;
    order.push_back(d);
    order.push_back(d ^ 1);
  };
  visit(0);
  for (std::size_t k = 0; k < order.size(); ++k) visit(m.sigma()[static_cast<std::size_t>(order[k])]);
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("map is disconnected");
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d)
    out[static_cast<std::size_t>(label[static_cast<std::size_t>(d)])] = label[static_cast<std::size_t>(m.sigma()[static_cast<std::size_t>(d)])];
  return out;
}

std::vector<PlanarMap> rooted_planar_maps(int edges) {
  if (edges < 1 || edges > 5) throw std::invalid_argument("rooted_planar_maps supports 1..5 edges");
  std::vector<int> sigma(static_cast<std::size_t>(2 * edges));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::set<std::vector<int>> seen;
  std::vector<PlanarMap> out;
  do {
    const PlanarMap m(sigma);
    if (!m.connected() || m.genus() != 0) continue;
    auto c = canonical_sigma(m);
    if (seen.insert(c).second) out.emplace_back(std::move(c));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace cmaps
