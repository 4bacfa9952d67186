#pragma once

// Kernel series of rooted mobiles and blossoming trees.
//
//   R_p = t + sum_i x_i C(pi-1, i) R_p^{(p-1)i}        (R = R_2)
//   T_p = t + sum_i (p-1) C(pi-1, i-1) x_i T_p^{(p-1)i}
//   S   = sum_i x_i C(2i-1, i) R^{i-1},  so that R = t + R S
//
// t counts white (round) vertices, x_i counts black (light-square) vertices of
// degree p*i.

#include "cmaps/series.hpp"

#include <map>

namespace cmaps {

Series compute_R(const Truncation& tr);
Series compute_Rp(int p, const Truncation& tr);
Series compute_S(const Truncation& tr);
Series compute_T(const Truncation& tr);
Series compute_Tp(int p, const Truncation& tr);

/// [t^n prod_i x_i^{n_i}] R_p^s by Lagrange-Burmann inversion of
/// t = z - A(z), A(z) = sum_i x_i C(pi-1, i) z^{(p-1)i}. Uses no series
/// arithmetic at all: the single multinomial term of (1 - A(z)/z)^{-n} that
/// can contribute is evaluated directly.
Rational lagrange_coeff(int p, int s, int n, const std::map<int, int>& profile);

/// Default D: variables beyond xdeg_max times the largest half-degree can
/// never be reached.
int default_var_max(int xdeg_max, int max_half_degree);

}  // namespace cmaps
