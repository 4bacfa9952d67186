#pragma once

// Generating functions and closed-form counts for p-hypermaps with r numbered,
// corner-marked boundary faces of prescribed degrees.
//
//   G^{(p)}_{l_1..l_r} = prod alpha(l_i) * (c/s) * d^{r-2}/dt^{r-2} R_p^s
//
// with s = (p-1)/p * sum l_i and c = 1 (all l_i multiples of p) or p-1
// (exactly two are not). For r = 1 the "-1st derivative" is the antiderivative
// with zero constant term.

#include "cmaps/series.hpp"

#include <stdexcept>
#include <vector>

namespace cmaps {

/// Raised for boundary lists outside the (quasi-)constellation cases: a
/// degree sum not divisible by p, or a number of non-multiples of p other than
/// 0 or 2. Four or more such boundaries is an open case with no known formula.
class BoundaryParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BoundarySpec {
  int p = 2;
  std::vector<int> degrees;

  /// Throws BoundaryParityError (or std::invalid_argument for p < 2, an empty
  /// list or a non-positive degree).
  void validate() const;
  int r() const { return static_cast<int>(degrees.size()); }
  int non_multiples() const;
};

struct DerivedQuantities {
  int s = 0;        // (p-1)/p * sum l_i
  int epsilon = 0;  // sum l_i, edges of the hypermap
  int e = 0;        // sum l_i / 2, edges of the classical map when p = 2
  int d = 0;        // sum l_i / p, dark faces
  int v = 0;        // epsilon - d - r + 2, vertices
  int c = 1;        // 1 or p-1
};

DerivedQuantities derive(const BoundarySpec& spec);

/// l! / (floor(l/p)! (l - floor(l/p) - 1)!)
Integer alpha(int p, int l);

/// The constant prod alpha(l_i) * c / s.
Rational boundary_constant(const BoundarySpec& spec);

/// G^{(p)} accurate up to `tr`. The kernel is computed internally with the
/// t bound padded by r-2 so the derivatives lose nothing inside `tr`.
Series gf_boundaries(const BoundarySpec& spec, const Truncation& tr);

/// Same, reusing a kernel R_p computed at `kernel.trunc()`; the result is
/// accurate up to t_max = kernel t_max - max(r-2, 0).
Series gf_boundaries_from_kernel(const BoundarySpec& spec, const Series& kernel);

/// Number of p-hypermaps whose only light faces are the r numbered,
/// corner-marked boundaries: c (s-1)!/v! prod alpha(l_i).
Integer slicings_count(const BoundarySpec& spec);

/// Closed forms for two and three boundaries (p = 2) with gamma^2 = R and
/// y'(1) = gamma / R' rewritten so that only integer powers of R appear.
Series eynard_two(int l1, int l2, const Truncation& tr);
Series eynard_three(int l1, int l2, int l3, const Truncation& tr);

/// Rooted p-constellations (p = 2: rooted bipartite maps), integrated from
/// C_p' = p/(p-1) R_p with zero constant term.
Series rooted_maps_gf(int p, const Truncation& tr);

}  // namespace cmaps
