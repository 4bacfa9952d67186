#pragma once

// Mobiles, p-mobiles and their pruned forms, all carried by PlaneTree.
//
// Colours: White = round vertex, Black = (light-square) black vertex,
// Dark = dark-square vertex, Bud = dangling half-edge. Classical mobiles
// (p = 2) hang buds directly on black vertices. Hypermobiles hang buds on
// dark squares only; a dark square with one light neighbour and p-1 buds is a
// big bud. A black vertex's degree is its number of incident half-edges.

#include <string>
#include <vector>

#include "cmaps/numerics.hpp"
#include "cmaps/plane_tree.hpp"

namespace cmaps {

enum class MobileClass {
  Bipartite,       // classical, no black-black edge
  QuasiBipartite,  // classical, black-black edges form a path joining the two odd blacks
  General,         // classical, any other arrangement of black-black edges
  PRegular,        // p-mobile: every light of degree pi has i big buds
  QuasiP,          // quasi p-mobile with an alternating path
  Invalid,
};

const char* mobile_class_name(MobileClass c);

/// Classifies `m` as a mobile for parameter p. When `why` is given and the
/// result is Invalid it receives a short reason.
MobileClass validate_mobile(const PlaneTree& m, int p, std::string* why = nullptr);

/// Non-regular vertices and alternating-path weights of a quasi p-mobile.
struct AlternatingPath {
  int v1 = -1, v2 = -1;     // v1 has degree = p - d (mod p), v2 has d (mod p)
  int d = 0;
  std::vector<int> nodes;  // v1, dark, light, ..., dark, v2
  std::vector<int> weights;
};
AlternatingPath alternating_path(const PlaneTree& m, int p);

/// Appends a big bud to v: a Bud for p = 2, a Dark carrying p-1 Buds otherwise.
int add_big_bud(PlaneTree& t, int v, int p);
bool is_big_bud(const PlaneTree& t, int v);

/// Copy of `t` without the (big) buds hanging at the listed vertices.
PlaneTree prune(const PlaneTree& t, const std::vector<int>& vertices);

/// Marked black vertices (mark != 0) ordered by mark label.
std::vector<int> marked_blacks(const PlaneTree& t);

/// Number of ways to put a big buds back around a pruned vertex of degree (p-1)a.
Integer unprune_count(int p, int a);

/// Reinserts big buds at every marked black vertex of a pruned mobile.
/// `ranks[k]` is the lexicographic rank of the composition (buds per gap)
/// used at the k-th marked vertex. Gap j sits right after rotation(v)[j].
PlaneTree unprune_rank(const PlaneTree& pruned, int p, const std::vector<long>& ranks);

/// Compositions of n into `parts` non-negative parts, in lexicographic order.
long composition_count(int n, int parts);
std::vector<int> composition_unrank(int n, int parts, long rank);

/// Rooted mobiles plus marked white vertices w_1..w_{r-1} (white mark labels).
struct MobileForest {
  std::vector<PlaneTree> components;

  int whites() const;
  nlohmann::json to_json() const;
  static MobileForest from_json(const nlohmann::json& j);
  bool operator==(const MobileForest& o) const { return components == o.components; }
};

}  // namespace cmaps
