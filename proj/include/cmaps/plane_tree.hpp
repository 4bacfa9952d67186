#pragma once

// Rooted plane trees with coloured nodes, the common carrier for mobiles,
// p-mobiles, pruned mobiles and blossoming trees.
//
// Node 0 is the root. Children are listed counter-clockwise; for a non-root
// node the parent edge comes first in its rotation, so the child list of every
// node fully encodes the cyclic arrangement. Buds are leaf nodes of colour Bud.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace cmaps {

enum class Color : std::uint8_t {
  White,  // white / round vertex, or a leaf of a blossoming tree
  Black,  // black / light-square vertex
  Dark,   // dark-square vertex (big bud or intermediate)
  Bud,    // dangling half-edge
};

const char* color_name(Color c);
Color parse_color(const std::string& name);

struct TreeNode {
  Color color = Color::White;
  int parent = -1;
  std::vector<int> children;
  int weight = 0;  // weight of the edge to the parent; 0 means unweighted/default
  int mark = 0;    // 0 when unmarked, otherwise the mark label
};

class PlaneTree {
 public:
  PlaneTree() = default;
  explicit PlaneTree(Color root_color);

  int add_child(int parent, Color color, int weight = 0);

  int size() const { return static_cast<int>(nodes_.size()); }
  bool empty() const { return nodes_.empty(); }
  const TreeNode& node(int v) const { return nodes_[static_cast<std::size_t>(v)]; }
  TreeNode& node(int v) { return nodes_[static_cast<std::size_t>(v)]; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  /// Counter-clockwise neighbours of v (buds included), starting at the
  /// parent for non-root nodes and at the root corner for the root.
  std::vector<int> rotation(int v) const;
  int degree(int v) const;
  int count(Color c) const;

  /// Canonical string: equal codes iff equal rooted trees (colours, marks,
  /// weights and child order).
  std::string encode() const;

  nlohmann::json to_json() const;
  static PlaneTree from_json(const nlohmann::json& j);

  bool operator==(const PlaneTree& o) const { return encode() == o.encode(); }

 private:
  void encode_into(int v, std::string& out) const;
  nlohmann::json node_json(int v) const;

  std::vector<TreeNode> nodes_;
};

/// Unrooted view of a tree: per node, the cyclic counter-clockwise list of
/// neighbour ids (buds are nodes of degree one).
struct RotationSystem {
  std::vector<Color> color;
  std::vector<int> mark;
  std::vector<std::vector<int>> adj;

  int add_node(Color c, int m = 0);
  int size() const { return static_cast<int>(color.size()); }
};

RotationSystem to_rotation_system(const PlaneTree& t);

/// Roots `rs` at node `root`, taking adj[root][start] as the first child.
/// Must be a tree. `old_to_new`, when given, receives the id mapping.
PlaneTree root_at(const RotationSystem& rs, int root, int start, std::vector<int>* old_to_new = nullptr);

/// Same tree rooted at node v with rotation(v)[k] as the first child.
PlaneTree reroot(const PlaneTree& t, int v, int k);

}  // namespace cmaps
