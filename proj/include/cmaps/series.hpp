#pragma once

// Truncated multivariate power series in t and x_1..x_D with exact rational
// coefficients. Every series carries its truncation; binary operations require
// equal truncations and drop any term falling outside them.

#include "cmaps/numerics.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace cmaps {

struct Truncation {
  int t_max = 0;     // largest t exponent kept
  int xdeg_max = 0;  // largest total degree in x_1..x_D kept
  int var_max = 1;   // D, the largest variable index tracked

  Truncation() = default;
  Truncation(int t, int xdeg, int vars);

  bool operator==(const Truncation&) const = default;
};

/// t^t_exp times the product of x_i over the sorted index multiset `xs`
/// (x1^2 x3 is {1, 1, 3}). Ordered by (t exponent, x-degree, indices).
struct Monomial {
  int t_exp = 0;
  std::vector<int> xs;

  Monomial() = default;
  Monomial(int t, std::vector<int> indices);
  /// Builds from (index, multiplicity) pairs; zero multiplicities are ignored.
  static Monomial from_profile(int t, const std::map<int, int>& profile);

  int xdeg() const { return static_cast<int>(xs.size()); }
  int exponent(int index) const;
  std::map<int, int> profile() const;
  bool fits(const Truncation& tr) const;

  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const;
};

class Series {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Series(Truncation tr);

  static Series constant(Truncation tr, const Rational& c);
  static Series t(Truncation tr);
  static Series x(Truncation tr, int index);
  static Series monomial(Truncation tr, const Monomial& m, const Rational& c);

  const Truncation& trunc() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of an in-truncation monomial; throws std::out_of_range otherwise.
  Rational coeff(const Monomial& m) const;
  /// Adds c to the coefficient of m; silently drops m if it is outside the truncation.
  void add_term(const Monomial& m, const Rational& c);

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& c);

  bool operator==(const Series& o) const { return trunc_ == o.trunc_ && terms_ == o.terms_; }

  /// Drops every term outside `smaller` and relabels the series with it.
  Series restrict_to(const Truncation& smaller) const;
  /// Sets all x variables to zero.
  Series at_x_zero() const;

  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  Truncation trunc_;
  Terms terms_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator-(Series a);
Series operator*(Series a, const Rational& c);
Series operator*(const Rational& c, Series a);
Series operator*(const Series& a, const Series& b);

/// Truncated product. `mul` splits the outer loop over OpenMP threads;
/// `mul_serial` is the single-threaded reference it is tested against.
Series mul(const Series& a, const Series& b);
Series mul_serial(const Series& a, const Series& b);

Series pow(const Series& a, int n);
Series d_dt(const Series& a);
Series integrate_dt(const Series& a);

using SeriesMap = std::function<Series(const Series&)>;

/// Iterates X <- update(X) from update(0). The update must raise x-degree
/// (degree-k part of update(X) depends only on the degree < k part of X), so
/// xdeg_max + 1 rounds reach the fixed point. Throws std::runtime_error if
/// the residual is still non-zero after that.
Series solve_fixpoint(const SeriesMap& update, const Truncation& tr);

}  // namespace cmaps
