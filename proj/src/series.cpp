#include "cmaps/series.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cmaps {

Truncation::Truncation(int t, int xdeg, int vars) : t_max(t), xdeg_max(xdeg), var_max(vars) {
  if (t < 0 || xdeg < 0) throw std::invalid_argument("truncation bounds must be non-negative");
  if (vars < 1) throw std::invalid_argument("truncation must track at least one x variable");
}

Monomial::Monomial(int t, std::vector<int> indices) : t_exp(t), xs(std::move(indices)) {
  std::sort(xs.begin(), xs.end());
}

Monomial Monomial::from_profile(int t, const std::map<int, int>& profile) {
  std::vector<int> xs;
  for (auto [i, n] : profile) xs.insert(xs.end(), static_cast<std::size_t>(std::max(n, 0)), i);
  return Monomial(t, std::move(xs));
}

int Monomial::exponent(int index) const {
  return static_cast<int>(std::count(xs.begin(), xs.end(), index));
}

std::map<int, int> Monomial::profile() const {
  std::map<int, int> p;
  for (int i : xs) ++p[i];
  return p;
}

bool Monomial::fits(const Truncation& tr) const {
  if (t_exp < 0 || t_exp > tr.t_max || xdeg() > tr.xdeg_max) return false;
  return xs.empty() || (xs.front() >= 1 && xs.back() <= tr.var_max);
}

bool Monomial::operator<(const Monomial& o) const {
  if (t_exp != o.t_exp) return t_exp < o.t_exp;
  if (xs.size() != o.xs.size()) return xs.size() < o.xs.size();
  return xs < o.xs;
}

Series::Series(Truncation tr) : trunc_(tr) {}

Series Series::constant(Truncation tr, const Rational& c) {
  return monomial(tr, Monomial{}, c);
}

Series Series::t(Truncation tr) { return monomial(tr, Monomial(1, {}), 1); }

Series Series::x(Truncation tr, int index) { return monomial(tr, Monomial(0, {index}), 1); }

Series Series::monomial(Truncation tr, const Monomial& m, const Rational& c) {
  Series s(tr);
  s.add_term(m, c);
  return s;
}

Rational Series::coeff(const Monomial& m) const {
  if (!m.fits(trunc_)) throw std::out_of_range("monomial outside the series truncation");
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || !m.fits(trunc_)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_same(const Truncation& a, const Truncation& b) {
  if (!(a == b)) throw std::invalid_argument("series truncation mismatch");
}

}  // namespace

Series& Series::operator+=(const Series& o) {
  require_same(trunc_, o.trunc_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same(trunc_, o.trunc_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Series Series::restrict_to(const Truncation& smaller) const {
  Series out(smaller);
  for (const auto& [m, c] : terms_)
    if (m.fits(smaller)) out.terms_.emplace(m, c);
  return out;
}

Series Series::at_x_zero() const {
  Series out(trunc_);
  for (const auto& [m, c] : terms_)
    if (m.xs.empty()) out.terms_.emplace(m, c);
  return out;
}

std::string Series::to_text() const {
  std::ostringstream os;
  for (const auto& [m, c] : terms_) {
    os << "t^" << m.t_exp;
    for (auto [i, n] : m.profile()) os << " x" << i << "^" << n;
    os << " : " << to_string(c) << "\n";
  }
  return os.str();
}

nlohmann::json Series::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json x = nlohmann::json::array();
    for (auto [i, n] : m.profile()) x.push_back({i, n});
    terms.push_back({{"t", m.t_exp}, {"x", x}, {"coeff", to_string(c)}});
  }
  return {{"t_max", trunc_.t_max},
          {"xdeg_max", trunc_.xdeg_max},
          {"var_max", trunc_.var_max},
          {"terms", terms}};
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator-(Series a) { return a *= Rational(-1); }
Series operator*(Series a, const Rational& c) { return a *= c; }
Series operator*(const Rational& c, Series a) { return a *= c; }
Series operator*(const Series& a, const Series& b) { return mul(a, b); }

namespace {

using TermVec = std::vector<std::pair<Monomial, Rational>>;

// Accumulates lhs[i] * rhs for i in [begin, end) into `out`.
void mul_rows(const TermVec& lhs, const TermVec& rhs, const Truncation& tr, std::size_t begin,
              std::size_t end, Series::Terms& out) {
  Monomial prod;
  for (std::size_t i = begin; i < end; ++i) {
    const auto& [ma, ca] = lhs[i];
    for (const auto& [mb, cb] : rhs) {
      // rhs is sorted by t exponent first, so later terms only overshoot further
      if (ma.t_exp + mb.t_exp > tr.t_max) break;
      if (ma.xdeg() + mb.xdeg() > tr.xdeg_max) continue;
      prod.t_exp = ma.t_exp + mb.t_exp;
      prod.xs.resize(ma.xs.size() + mb.xs.size());
      std::merge(ma.xs.begin(), ma.xs.end(), mb.xs.begin(), mb.xs.end(), prod.xs.begin());
      auto [it, inserted] = out.try_emplace(prod, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
}

Series from_terms(const Truncation& tr, Series::Terms&& acc) {
  Series out(tr);
  for (auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

}  // namespace

Series mul_serial(const Series& a, const Series& b) {
  require_same(a.trunc(), b.trunc());
  TermVec lhs(a.terms().begin(), a.terms().end());
  TermVec rhs(b.terms().begin(), b.terms().end());
  Series::Terms acc;
  mul_rows(lhs, rhs, a.trunc(), 0, lhs.size(), acc);
  return from_terms(a.trunc(), std::move(acc));
}

Series mul(const Series& a, const Series& b) {
  require_same(a.trunc(), b.trunc());
  TermVec lhs(a.terms().begin(), a.terms().end());
  TermVec rhs(b.terms().begin(), b.terms().end());
  if (lhs.size() * rhs.size() < 4096 || omp_get_max_threads() == 1) {
    Series::Terms acc;
    mul_rows(lhs, rhs, a.trunc(), 0, lhs.size(), acc);
    return from_terms(a.trunc(), std::move(acc));
  }

  const int nthreads = omp_get_max_threads();
  std::vector<Series::Terms> partial(static_cast<std::size_t>(nthreads));
  const std::size_t n = lhs.size();
#pragma omp parallel num_threads(nthreads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    const auto nt = static_cast<std::size_t>(omp_get_num_threads());
    // interleaved rows balance the triangular cost profile
    Series::Terms& acc = partial[tid];
    for (std::size_t i = tid; i < n; i += nt) mul_rows(lhs, rhs, a.trunc(), i, i + 1, acc);
  }
  // rational addition is exact, so merge order does not affect the result
  Series::Terms acc = std::move(partial[0]);
  for (std::size_t k = 1; k < partial.size(); ++k)
    for (auto& [m, c] : partial[k]) {
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second += c;
    }
  return from_terms(a.trunc(), std::move(acc));
}

Series pow(const Series& a, int n) {
  if (n < 0) throw std::invalid_argument("negative series power");
  Series result = Series::constant(a.trunc(), 1);
  Series base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Series d_dt(const Series& a) {
  Series out(a.trunc());
  for (const auto& [m, c] : a.terms()) {
    if (m.t_exp == 0) continue;
    out.add_term(Monomial(m.t_exp - 1, m.xs), c * m.t_exp);
  }
  return out;
}

Series integrate_dt(const Series& a) {
  Series out(a.trunc());
  for (const auto& [m, c] : a.terms())
    out.add_term(Monomial(m.t_exp + 1, m.xs), c / Rational(m.t_exp + 1));
  return out;
}

Series solve_fixpoint(const SeriesMap& update, const Truncation& tr) {
  Series x = update(Series(tr));
  for (int round = 0; round < tr.xdeg_max + 1; ++round) {
    Series next = update(x);
    if (next == x) return x;
    x = std::move(next);
  }
  if (!(update(x) == x))
    throw std::runtime_error("fixed-point iteration did not converge; update is not x-contracting");
  return x;
}

}  // namespace cmaps
