#pragma once

// Grammars for exhaustive mobile generation on top of enumerate_trees.

#include <map>

#include "cmaps/tree_enum.hpp"

namespace cmaps {

enum class Grammar {
  Bipartite,  // classical mobiles without black-black edges
  Classical,  // classical mobiles, black-black edges allowed
  PRegular,   // p-mobiles (big buds only); for p = 2 the same as Bipartite
  Hyper,      // quasi p-mobiles rooted at a light square: dark squares with two light
              // neighbours form a single chain going down from the root
};

struct MobileGrammar {
  Grammar kind = Grammar::PRegular;
  int p = 2;
  int max_whites = 4;
  int max_blacks = 3;      // all black vertices, marked ones included
  int max_degree = 4;      // unmarked black vertices
  int degree_sum = -1;     // exact total black degree when >= 0
  std::map<int, int> marked_degree;  // mark label -> degree of that black vertex
  bool pruned_marks = false;         // marked blacks carry no (big) buds
  bool place_marks = false;          // marked blacks may appear below white vertices
  int irregular_degree = -1;         // Classical/Hyper: unmarked blacks have degree divisible by p,
                                     // except at most one of this degree (-1: no restriction)

  void expand(const PlaneTree& t, int v, std::vector<ChildList>& out) const;
  bool prune(const PlaneTree& t) const;
  std::uint64_t run(const PlaneTree& seed, const EnumLimits& limits,
                    const std::function<void(const PlaneTree&)>& visit) const;

 private:
  std::vector<int> degree_options(const PlaneTree& t, int v) const;
};

/// Mobiles rooted at a corner of a white vertex, within the budget.
std::uint64_t for_each_rooted_mobile(const MobileGrammar& g, const EnumLimits& limits,
                                     const std::function<void(const PlaneTree&)>& visit);

/// Mobiles rooted at a half-edge of a black vertex carrying `root_mark`
/// (0 for none); with a mark its degree comes from g.marked_degree.
std::uint64_t for_each_black_rooted_mobile(const MobileGrammar& g, int root_mark, const EnumLimits& limits,
                                           const std::function<void(const PlaneTree&)>& visit);

/// Smallest encoding over all rootings at a half-edge of v.
std::string canonical_at(const PlaneTree& t, int v);

}  // namespace cmaps
