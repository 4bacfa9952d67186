#pragma once

// Maps as rotation systems on darts 0..n-1. sigma(d) is the next dart
// counter-clockwise around the origin of d, alpha(d) = d ^ 1 is the other half
// of the edge, and faces are the cycles of phi = sigma o alpha; the face of
// dart d is the one on its right.

#include <optional>
#include <vector>

#include "json.hpp"

namespace cmaps {

class PlanarMap {
 public:
  /// Throws std::invalid_argument unless sigma is a permutation of an even,
  /// positive number of darts. Connectivity and genus are not required here.
  explicit PlanarMap(std::vector<int> sigma, std::optional<int> pointed_vertex = std::nullopt);

  int n_darts() const { return static_cast<int>(sigma_.size()); }
  int n_edges() const { return n_darts() / 2; }
  const std::vector<int>& sigma() const { return sigma_; }
  std::optional<int> pointed_vertex() const { return pointed_; }

  static int alpha(int d) { return d ^ 1; }
  int phi(int d) const { return sigma_[static_cast<std::size_t>(d ^ 1)]; }

  /// Cycles of sigma / phi, each starting at its smallest dart, ordered by it.
  /// Vertex and face ids are indices into these lists.
  const std::vector<std::vector<int>>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int vertex_of(int d) const { return vertex_of_[static_cast<std::size_t>(d)]; }
  int face_of(int d) const { return face_of_[static_cast<std::size_t>(d)]; }

  bool connected() const;
  /// (2 - V + E - F) / 2 for a connected map.
  int genus() const;

  /// Graph distances from vertex v0 (-1 if unreachable).
  std::vector<int> bfs_distances(int v0) const;

  nlohmann::json to_json() const;
  static PlanarMap from_json(const nlohmann::json& j);

 private:
  std::vector<int> sigma_;
  std::optional<int> pointed_;
  std::vector<std::vector<int>> vertices_, faces_;
  std::vector<int> vertex_of_, face_of_;
};

/// Relabels darts by traversal from dart 0 (edges keep pairs 2k, 2k+1), so
/// that two connected maps are isomorphic as maps rooted at dart 0 iff their
/// canonical sigmas are equal.
std::vector<int> canonical_sigma(const PlanarMap& m);

/// One representative per isomorphism class of rooted planar maps with
/// `edges` edges, in canonical form. Exhaustive over sigma, so edges <= 5.
std::vector<PlanarMap> rooted_planar_maps(int edges);

enum class FaceColor : unsigned char { Light, Dark };

/// All proper light/dark face colourings (faces on the two sides of every edge
/// differ) whose dark faces all have degree p. At most two entries, and when
/// there are two they are colour swaps of each other.
std::vector<std::vector<FaceColor>> hypermap_colorings(const PlanarMap& m, int p);

}  // namespace cmaps
