#include "cmaps/kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cmaps {

namespace {

void require_p(int p) {
  if (p < 2) throw std::invalid_argument("constellation order p must be at least 2");
}

// X -> t + sum_i weight(i) x_i X^{(p-1)i}
Series kernel_update(int p, const std::vector<Rational>& weight, const Series& x) {
  const Truncation& tr = x.trunc();
  Series out = Series::t(tr);
  // every x_i term adds one to the x-degree, so the powers only need xdeg_max - 1
  if (tr.xdeg_max == 0) return out;
  Truncation inner(tr.t_max, tr.xdeg_max - 1, tr.var_max);
  Series base = x.restrict_to(inner);
  Series power = Series::constant(inner, 1);
  int have = 0;
  for (int i = 1; i <= tr.var_max; ++i) {
    const int want = (p - 1) * i;
    while (have < want) {
      power = mul(power, base);
      ++have;
    }
    if (power.is_zero()) break;
    for (const auto& [m, c] : power.terms()) {
      std::vector<int> xs = m.xs;
      xs.insert(std::upper_bound(xs.begin(), xs.end(), i), i);
      out.add_term(Monomial(m.t_exp, std::move(xs)), c * weight[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

Series solve_kernel(int p, const Truncation& tr, std::vector<Rational> weight) {
  return solve_fixpoint([&](const Series& x) { return kernel_update(p, weight, x); }, tr);
}

}  // namespace

Series compute_Rp(int p, const Truncation& tr) {
  require_p(p);
  std::vector<Rational> w(static_cast<std::size_t>(tr.var_max) + 1);
  for (int i = 1; i <= tr.var_max; ++i) w[static_cast<std::size_t>(i)] = binomial(p * i - 1, i);
  return solve_kernel(p, tr, std::move(w));
}

Series compute_R(const Truncation& tr) { return compute_Rp(2, tr); }

Series compute_Tp(int p, const Truncation& tr) {
  require_p(p);
  // (p-1) placements of the p-2 buds on the dark square above the root,
  // C(pi-1, i-1) placements of the i-1 big buds among the children
  std::vector<Rational> w(static_cast<std::size_t>(tr.var_max) + 1);
  for (int i = 1; i <= tr.var_max; ++i)
    w[static_cast<std::size_t>(i)] = Rational(p - 1) * Rational(binomial(p * i - 1, i - 1));
  return solve_kernel(p, tr, std::move(w));
}

Series compute_T(const Truncation& tr) { return compute_Tp(2, tr); }

Series compute_S(const Truncation& tr) {
  const Series r = compute_R(tr);
  Series s(tr);
  if (tr.xdeg_max == 0) return s;
  Truncation inner(tr.t_max, tr.xdeg_max - 1, tr.var_max);
  const Series base = r.restrict_to(inner);
  Series power = Series::constant(inner, 1);
  for (int i = 1; i <= tr.var_max; ++i) {
    if (i > 1) power = mul(power, base);
    const Rational w(binomial(2 * i - 1, i));
    for (const auto& [m, c] : power.terms()) {
      std::vector<int> xs = m.xs;
      xs.insert(std::upper_bound(xs.begin(), xs.end(), i), i);
      s.add_term(Monomial(m.t_exp, std::move(xs)), c * w);
    }
  }
  return s;
}

Rational lagrange_coeff(int p, int s, int n, const std::map<int, int>& profile) {
  require_p(p);
  if (s < 1) throw std::invalid_argument("lagrange_coeff needs a positive power");
  if (n < 1) return 0;
  // [t^n] z^s = (s/n) [z^{n-s}] (1 - A(z)/z)^{-n}
  //           = (s/n) sum_k C(n+k-1, k) [z^{n-s}] (A(z)/z)^k
  long k = 0;
  long zexp = 0;
  Rational multinomial = 1;
  for (auto [i, ni] : profile) {
    if (ni == 0) continue;
    if (i < 1 || ni < 0) return 0;
    k += ni;
    zexp += static_cast<long>(ni) * ((p - 1) * i - 1);
    multinomial /= Rational(factorial(ni));
    Integer c = binomial(static_cast<long>(p) * i - 1, i);
    Integer cpow;
    mpz_pow_ui(cpow.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(ni));
    multinomial *= Rational(cpow);
  }
  if (zexp != n - s) return 0;
  multinomial *= Rational(factorial(k));
  return ratio(s, n) * Rational(binomial(n + k - 1, k)) * multinomial;
}

int default_var_max(int xdeg_max, int max_half_degree) {
  return std::max(1, xdeg_max * std::max(1, max_half_degree));
}

}  // namespace cmaps
