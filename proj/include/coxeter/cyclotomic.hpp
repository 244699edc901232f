#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "coxeter/polynomial.hpp"

namespace coxeter {

namespace detail {

inline const RationalPolynomial& cyclotomic_memo(unsigned n, std::map<unsigned, RationalPolynomial>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 = prod_{d | n} Phi_d
  RationalPolynomial p = RationalPolynomial::monomial(n) - RationalPolynomial::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_div(p, cyclotomic_memo(d, memo));
  }
  return memo.emplace(n, std::move(p)).first->second;
}

}  // namespace detail

/// The n-th cyclotomic polynomial, with integer coefficients.
inline RationalPolynomial cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::map<unsigned, RationalPolynomial> memo;
  return detail::cyclotomic_memo(n, memo);
}

/// y-polynomials D_k with D_k(x + 1/x) = x^k + x^-k.
inline std::vector<RationalPolynomial> dickson_table(std::size_t kmax) {
  std::vector<RationalPolynomial> d;
  d.push_back(RationalPolynomial::constant(2));
  if (kmax >= 1) d.push_back(RationalPolynomial::monomial(1));
  const RationalPolynomial y = RationalPolynomial::monomial(1);
  for (std::size_t k = 2; k <= kmax; ++k) d.push_back(y * d[k - 1] - d[k - 2]);
  return d;
}

/// Minimal polynomial of 2cos(pi/level).
///
/// For level >= 2 this is obtained from the palindromic Phi_{2L}(x) of
/// degree 2h by writing x^-h Phi_{2L}(x) as a polynomial in y = x + 1/x.
/// Level 1 is the rational field and uses the fixed generator x - 2.
inline RationalPolynomial real_cyclotomic_minpoly(unsigned level) {
  if (level == 0) throw std::invalid_argument("level must be positive");
  if (level == 1) return RationalPolynomial{Rational(-2), Rational(1)};
  const RationalPolynomial phi = cyclotomic_polynomial(2 * level);
  const std::size_t h = static_cast<std::size_t>(phi.degree()) / 2;
  const auto dk = dickson_table(h);
  RationalPolynomial g = RationalPolynomial::constant(phi.coeff(h));
  for (std::size_t k = 1; k <= h; ++k) g = g + phi.coeff(h + k) * dk[k];
  return g;
}

/// Euler's totient, used to check minimal-polynomial degrees.
inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace coxeter
