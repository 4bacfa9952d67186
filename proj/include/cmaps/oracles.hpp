#pragma once

// Brute-force counts by exhaustive enumeration of rotation systems and of
// plane trees. Nothing here uses the series engine.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cmaps/mobile.hpp"
#include "cmaps/numerics.hpp"
#include "cmaps/planar_map.hpp"
#include "cmaps/tree_enum.hpp"

namespace cmaps {

/// Maps with numbered, corner-marked boundary faces of the given degrees and
/// unmarked internal faces: internal[i] faces of degree p*i. For p >= 3 the
/// faces above are the light faces of a hypermap whose dark faces have degree p.
struct MapQuery {
  int p = 2;
  std::vector<int> boundaries;
  std::map<int, int> internal;
  std::optional<int> vertices;  // keep only maps with this many vertices

  int edges() const;  // E for p = 2, epsilon for p >= 3
};

struct MapSearchLimits {
  int max_edges_p2 = 5;  // full scan over S_{2E}
  int max_edges_hyper = 7;
};

/// Counts via sum over sigma of (#numberings * prod l_i) / (2^E E!).
Integer oracle_gf_coeff(const MapQuery& q, const MapSearchLimits& lim = {});
Integer oracle_gf_coeff_serial(const MapQuery& q, const MapSearchLimits& lim = {});
/// oracle_gf_coeff with no internal faces and no vertex filter.
Integer oracle_slicings(const MapQuery& q, const MapSearchLimits& lim = {});

/// Rooted maps (p = 2) or rooted p-constellations with the given internal
/// profile and vertex count: one boundary-free count times the number of edges.
Integer oracle_rooted_maps(const MapQuery& q, const MapSearchLimits& lim = {});

/// Rooted p-mobiles (rooted at a white corner) by (white count, profile),
/// for all profiles with at most max_blacks black vertices of degree at most p*max_i.
ProfileCounts mobile_profile_counts(int p, int max_whites, int max_blacks, int max_i,
                                    const EnumLimits& limits = {});
/// Number of rooted p-mobiles with `whites` whites and profile i -> n_i.
Integer oracle_mobiles(int p, int whites, const std::map<int, int>& profile, const EnumLimits& limits = {});

enum class Family {
  B,       // bipartite, marked blacks of degrees 2a1, 2a2
  BHat,    // the same, pruned
  Q,       // quasi-bipartite, marked odd blacks of degrees 2a1-1, 2a2+1
  QHat,
  H,       // Q with a1 = 1, a2 = 0: mobiles reduced to their middle part
  K,       // BHat with a1 = a2 = 1
  BP,      // p-mobiles, marked lights of degrees p*a1, p*a2
  BPHat,
  QP,      // quasi p-mobiles, marked lights of degrees p*a1-d, p*a2+d
  QPHat,
  B2Prime, // one marked black of degree 2 and one marked white
  BpPrime, // one marked light of degree p and one marked white
};

const char* family_name(Family f);
Family parse_family(const std::string& name);

struct FamilyQuery {
  Family family = Family::B;
  int p = 2;
  int a1 = 1, a2 = 1, d = 1;
};

struct FamilyBudget {
  int max_whites = 4;
  int max_unmarked = 2;  // unmarked black vertices
  int max_degree = 4;    // of unmarked black vertices
};

/// Unrooted marked mobiles of the family, counted per (white count, sorted
/// degrees of unmarked blacks) for every profile inside the budget.
ProfileCounts oracle_family_count(const FamilyQuery& q, const FamilyBudget& b, const EnumLimits& limits = {});

/// All rooted planar maps with `edges` edges, each pointed at every vertex.
void for_each_pointed_map(int edges, const std::function<void(const PlanarMap&, int)>& visit);

/// Blossoming trees whose internal vertices (at most max_internal) have
/// arity (p-1)i with i <= max_i.
std::vector<PlaneTree> blossoming_trees(int p, int max_internal, int max_i, const EnumLimits& limits = {});

/// Every forest of s components drawn from `pool` (with repetition, ordered)
/// with distinct white marks 1..r-1 placed in every possible way.
void for_each_marked_forest(const std::vector<PlaneTree>& pool, int s, int r, int max_total_whites,
                            const std::function<void(const MobileForest&)>& visit);

}  // namespace cmaps
