#include "cmaps/numerics.hpp"

#include <stdexcept>

namespace cmaps {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial with negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long j = 1; j <= k; ++j) {
    r *= n - k + j;
    // r = C(n-k+j, j) * j, so the division is exact
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(j));
  }
  return r;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool is_decimal(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) throw std::invalid_argument("not an integer: " + std::string(text));
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("sign in denominator: " + std::string(text));
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return ratio(num, den);
}

}  // namespace cmaps
