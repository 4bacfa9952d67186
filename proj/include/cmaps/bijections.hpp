#pragma once

// Constructive correspondences between pointed maps, mobiles, forests of
// mobiles and blossoming trees.

#include <vector>

#include "cmaps/mobile.hpp"
#include "cmaps/planar_map.hpp"

namespace cmaps {

/// Mobile of the planar map pointed at vertex v0, rooted at the half-edge
/// that dart 0 produces at the black vertex of its face. Edges are oriented
/// away from v0 by distance; along an oriented edge the face on the left gets
/// the mobile edge to the far endpoint and the face on the right a bud, and
/// an edge between equidistant vertices joins the two face vertices.
/// Throws std::invalid_argument for a disconnected or non-planar map.
PlaneTree bdg_forward(const PlanarMap& m, int v0);

struct AggregateResult {
  PlaneTree mobile;                         // pruned, rooted at its final root black vertex
  std::vector<int> disaggregation_choices;  // undoes the aggregation
};

/// Groups the components of `forest` under new marked black vertices
/// b_1..b_r (b_i takes the next (p-1)*groups[i] components), then merges
/// components at the marked whites w_{r-1}, ..., w_1. At step i, choices[i-1]
/// indexes the components not containing the current mark, sorted by their
/// smallest white vertex (whites numbered in forest order).
AggregateResult aggregate(const MobileForest& forest, int p, const std::vector<int>& groups,
                          const std::vector<int>& choices);

struct DisaggregateResult {
  MobileForest forest;
  std::vector<int> groups;
  std::vector<int> aggregation_choices;  // aggregate(forest, groups, these) gives the input back
};

/// Splits a pruned mobile rooted at a marked black vertex. At step i,
/// choices[i-1] indexes the marked blacks that are not the root of their
/// component, sorted by label; the split creates white mark w_i.
DisaggregateResult disaggregate(const PlaneTree& mobile, int p, const std::vector<int>& choices);

/// Blossoming trees: node 0 is the root leaf (White) with a single child.
/// Internal vertices are Black; for p >= 3 every edge down to a Black passes
/// through an intermediate Dark carrying p-2 buds, and big buds are Darks
/// with p-1 buds (plain buds when p = 2).
bool is_blossoming_tree(const PlaneTree& t, int p, std::string* why = nullptr);

PlaneTree blossoming_to_mobile(const PlaneTree& tree, int p);
PlaneTree mobile_to_blossoming(const PlaneTree& mobile, int p);

/// Lexicographic rank of a sorted k-subset of {0..n-1}, and its inverse.
long subset_rank(const std::vector<int>& subset, int n);
std::vector<int> subset_unrank(long rank, int k, int n);

}  // namespace cmaps
