#include "cmaps/boundary.hpp"

#include "cmaps/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cmaps {

int BoundarySpec::non_multiples() const {
  return static_cast<int>(std::count_if(degrees.begin(), degrees.end(), [&](int l) { return l % p != 0; }));
}

void BoundarySpec::validate() const {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (degrees.empty()) throw std::invalid_argument("at least one boundary is required");
  for (int l : degrees)
    if (l < 1) throw std::invalid_argument("boundary degrees must be positive");
  const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
  if (total % p != 0)
    throw BoundaryParityError("unsupported boundary parity: degree sum " + std::to_string(total) +
                              " is not a multiple of p=" + std::to_string(p));
  const int odd = non_multiples();
  if (odd != 0 && odd != 2)
    throw BoundaryParityError("unsupported boundary parity: " + std::to_string(odd) +
                              " boundaries are not multiples of p=" + std::to_string(p) +
                              "; only 0 or 2 are covered (4 or more is an open case)");
}

DerivedQuantities derive(const BoundarySpec& spec) {
  spec.validate();
  DerivedQuantities q;
  q.epsilon = std::accumulate(spec.degrees.begin(), spec.degrees.end(), 0);
  q.d = q.epsilon / spec.p;
  q.s = (spec.p - 1) * q.d;
  q.e = q.epsilon / 2;
  q.v = q.epsilon - q.d - spec.r() + 2;
  q.c = spec.non_multiples() == 0 ? 1 : spec.p - 1;
  return q;
}

Integer alpha(int p, int l) {
  if (p < 2 || l < 1) throw std::invalid_argument("alpha needs p >= 2 and l >= 1");
  const int q = l / p;
  return factorial(l) / (factorial(q) * factorial(l - q - 1));
}

Rational boundary_constant(const BoundarySpec& spec) {
  const DerivedQuantities q = derive(spec);
  Integer prod = q.c;
  for (int l : spec.degrees) prod *= alpha(spec.p, l);
  return ratio(prod, q.s);
}

Series gf_boundaries_from_kernel(const BoundarySpec& spec, const Series& kernel) {
  const DerivedQuantities q = derive(spec);
  const int r = spec.r();
  const Truncation& ktr = kernel.trunc();
  const int lost = std::max(r - 2, 0);
  if (ktr.t_max < lost) throw std::invalid_argument("kernel truncation too small for r-2 derivatives");
  Series g = pow(kernel, q.s);
  if (r == 1) {
    g = integrate_dt(g);
  } else {
    for (int k = 0; k < r - 2; ++k) g = d_dt(g);
  }
  g *= boundary_constant(spec);
  return g.restrict_to(Truncation(ktr.t_max - lost, ktr.xdeg_max, ktr.var_max));
}

Series gf_boundaries(const BoundarySpec& spec, const Truncation& tr) {
  spec.validate();
  const int lost = std::max(spec.r() - 2, 0);
  const Series kernel = compute_Rp(spec.p, Truncation(tr.t_max + lost, tr.xdeg_max, tr.var_max));
  return gf_boundaries_from_kernel(spec, kernel);
}

Integer slicings_count(const BoundarySpec& spec) {
  const DerivedQuantities q = derive(spec);
  if (q.v < 1) throw std::invalid_argument("boundary list admits no map (v < 1)");
  Integer num = q.c * factorial(q.s - 1);
  for (int l : spec.degrees) num *= alpha(spec.p, l);
  const Integer den = factorial(q.v);
  if (num % den != 0) throw std::logic_error("slicings count is not an integer");
  return num / den;
}

namespace {

// 1/n! with the convention 1/n! = 0 for negative n
Rational inv_factorial(long n) {
  if (n < 0) return 0;
  return ratio(1, factorial(n));
}

}  // namespace

Series eynard_two(int l1, int l2, const Truncation& tr) {
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("boundary lengths must be positive");
  if ((l1 + l2) % 2 != 0) throw BoundaryParityError("unsupported boundary parity: l1 + l2 must be even");
  Rational sum = 0;
  const Rational num(factorial(l1) * factorial(l2));
  for (int j = 0; j <= l2 / 2; ++j) {
    Rational term = num * (l2 - 2 * j);
    term *= inv_factorial(j) * inv_factorial((l1 - l2) / 2 + j) * inv_factorial((l1 + l2) / 2 - j) *
            inv_factorial(l2 - j);
    sum += term;
  }
  return pow(compute_R(tr), (l1 + l2) / 2) * sum;
}

Series eynard_three(int l1, int l2, int l3, const Truncation& tr) {
  if (l1 < 1 || l2 < 1 || l3 < 1) throw std::invalid_argument("boundary lengths must be positive");
  const int odd = (l1 % 2) + (l2 % 2) + (l3 % 2);
  if (odd != 0 && odd != 2) throw BoundaryParityError("unsupported boundary parity: need 0 or 2 odd lengths");
  // gamma^{L-1} / y'(1) = gamma^{L-2} R' = R^{L/2-1} R'
  const Truncation padded(tr.t_max + 1, tr.xdeg_max, tr.var_max);
  const Series r = compute_R(padded);
  const Series dr = d_dt(r).restrict_to(tr);
  Series g = pow(r.restrict_to(tr), (l1 + l2 + l3) / 2 - 1) * dr;
  g *= Rational(alpha(2, l1) * alpha(2, l2) * alpha(2, l3));
  return g;
}

Series rooted_maps_gf(int p, const Truncation& tr) {
  return integrate_dt(compute_Rp(p, tr) * ratio(p, p - 1));
}

}  // namespace cmaps
