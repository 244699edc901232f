#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "coxeter/rational.hpp"

namespace coxeter {

/// Dense univariate polynomial, coefficients in ascending degree.
/// The representation is kept trimmed: the zero polynomial has no
/// coefficients and otherwise the leading coefficient is nonzero.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  /// x^k
  static Polynomial monomial(std::size_t k, T c = T(1)) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  template <typename U>
  U operator()(const U& x) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * T(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<T> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] = v[k] + a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] = v[k] + b.coeffs_[k];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) { return constant(s) * p; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over a field; returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DivisionByZero();
    std::vector<T> rem = num.coeffs_;
    if (num.degree() < den.degree()) return {Polynomial{}, num};
    std::vector<T> quot(rem.size() - den.coeffs_.size() + 1, T(0));
    const T lead_inv = T(1) / den.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
      T q = rem[k + den.coeffs_.size() - 1] * lead_inv;
      if (q == T(0)) continue;
      for (std::size_t j = 0; j < den.coeffs_.size(); ++j) rem[k + j] = rem[k + j] - q * den.coeffs_[j];
      quot[k] = std::move(q);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  /// Exact quotient; throws when `den` does not divide `num`.
  friend Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw Error("polynomial division is not exact");
    return q;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = p.coeffs_.size(); k-- > 0;) {
      if (p.coeffs_[k] == T(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << p.coeffs_[k] << ")";
      if (k > 0) os << "*x";
      if (k > 1) os << "^" << k;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Number of distinct real roots of a squarefree `p` in the half-open
/// interval (lo, hi], counted with a Sturm sequence.
inline int sturm_root_count(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  std::vector<RationalPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    RationalPolynomial r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  auto variations = [&](const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const auto& q : chain) {
      const int s = sign(q(x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return variations(lo) - variations(hi);
}

}  // namespace coxeter
