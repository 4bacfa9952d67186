#pragma once

// Exhaustive generation of plane trees by expanding nodes in id order.
// A rule lists, for a node that has just been created, every admissible
// sequence of children; a prune predicate cuts partial trees early.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "cmaps/plane_tree.hpp"

namespace cmaps {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChildSpec {
  Color color;
  int mark = 0;
};
using ChildList = std::vector<ChildSpec>;

using ExpandRule = std::function<void(const PlaneTree& t, int v, std::vector<ChildList>& out)>;
using PruneRule = std::function<bool(const PlaneTree& t)>;

struct EnumLimits {
  int max_nodes = 48;
  std::uint64_t max_steps = 50'000'000;  // partial trees examined
};

/// Calls `visit` on every complete tree grown from `seed`. Returns the
/// number of trees visited. Throws BudgetExceeded past `limits.max_steps`.
std::uint64_t enumerate_trees(const PlaneTree& seed, const ExpandRule& expand, const PruneRule& prune,
                              const EnumLimits& limits, const std::function<void(const PlaneTree&)>& visit);

/// All words of the given length over `alphabet` whose letter counts satisfy
/// `accept` (called with per-letter counts), in lexicographic order.
std::vector<ChildList> words(int length, const std::vector<ChildSpec>& alphabet,
                             const std::function<bool(const std::vector<int>&)>& accept);

/// (whites, sorted degrees of unmarked black vertices)
struct Profile {
  int whites = 0;
  std::vector<int> degrees;
  auto operator<=>(const Profile&) const = default;
  std::string str() const;
};
using ProfileCounts = std::map<Profile, std::int64_t>;

/// Profile of a tree: whites counted except those with a mark when
/// `skip_marked_whites`, black degrees taken over unmarked blacks.
Profile profile_of(const PlaneTree& t, bool skip_marked_whites = false);

}  // namespace cmaps
