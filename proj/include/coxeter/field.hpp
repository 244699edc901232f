#pragma once

// Exact arithmetic in Q(2cos(pi/L)).
//
// A field is identified by its level L. Elements are polynomials in
// theta = 2cos(pi/L) reduced modulo the minimal polynomial of theta, with
// arbitrary-precision rational coefficients. Signs are decided by exact
// zero testing followed by interval evaluation on a rational enclosure of
// theta that is bisected until the result excludes zero.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/cyclotomic.hpp"
#include "coxeter/order.hpp"
#include "coxeter/polynomial.hpp"
#include "coxeter/rational.hpp"

namespace coxeter {

class FieldMismatch : public Error {
 public:
  FieldMismatch(unsigned a, unsigned b)
      : Error("field mismatch: level " + std::to_string(a) + " vs level " + std::to_string(b)) {}
};

/// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
};

class RealCyclotomicField;
using FieldPtr = std::shared_ptr<const RealCyclotomicField>;

class RealCyclotomicField {
 public:
  /// Shared, immutable descriptor for Q(2cos(pi/level)).
  static FieldPtr for_level(unsigned level);

  unsigned level() const { return level_; }
  std::size_t degree() const { return static_cast<std::size_t>(minpoly_.degree()); }
  const RationalPolynomial& minpoly() const { return minpoly_; }
  /// Isolating interval for theta. Degenerate (lo == hi) when theta is rational.
  const Interval& theta_enclosure() const { return theta_; }

  /// One bisection step on an enclosure of theta; returns a new interval.
  Interval refine(const Interval& enclosure) const {
    if (enclosure.lo == enclosure.hi) return enclosure;
    const Rational mid = enclosure.midpoint();
    const int s_mid = sign(minpoly_(mid));
    if (s_mid == 0) return {mid, mid};
    if (s_mid == sign(minpoly_(enclosure.lo))) return {mid, enclosure.hi};
    return {enclosure.lo, mid};
  }

  /// Level of the least field containing every 2cos(pi/m) for the given orders.
  static unsigned level_for(const std::vector<Order>& orders) {
    unsigned level = 1;
    for (const auto& m : orders) {
      if (m.is_finite() && m.value() >= 3) level = std::lcm(level, m.value());
    }
    return level;
  }

  explicit RealCyclotomicField(unsigned level);

 private:
  unsigned level_;
  RationalPolynomial minpoly_;
  Interval theta_;
};

class FieldElement {
 public:
  /// Zero, not yet attached to a field. Unattached elements are rationals and
  /// adopt the field of whatever they are combined with.
  FieldElement() = default;
  FieldElement(long c) : rep_(RationalPolynomial::constant(Rational(c))) {}  // NOLINT
  FieldElement(const Rational& c) : rep_(RationalPolynomial::constant(canonical(c))) {}  // NOLINT
  FieldElement(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
    for (auto& c : coeffs) c.canonicalize();
    rep_ = RationalPolynomial(std::move(coeffs));
    reduce();
  }

  static FieldElement theta(const FieldPtr& field) { return FieldElement(field, {Rational(0), Rational(1)}); }

  const FieldPtr& field() const { return field_; }
  unsigned level() const { return field_ ? field_->level() : 1; }

  /// Trimmed coefficients in ascending powers of theta.
  const std::vector<Rational>& coefficients() const { return rep_.coeffs(); }
  /// Coefficients padded to the field degree.
  std::vector<Rational> padded_coefficients() const {
    std::vector<Rational> c = rep_.coeffs();
    const std::size_t d = field_ ? field_->degree() : 1;
    if (c.size() < d) c.resize(d, Rational(0));
    return c;
  }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const {
    if (!is_rational()) throw Error("field element is not rational");
    return rep_.coeff(0);
  }

  FieldElement operator-() const { return make(field_, -rep_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return make(common_field(a, b), a.rep_ + b.rep_);
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return make(common_field(a, b), a.rep_ - b.rep_);
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldPtr f = common_field(a, b);
    FieldElement r = make(f, a.rep_ * b.rep_);
    r.reduce();
    return r;
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  /// Multiplicative inverse via the extended Euclidean algorithm against the
  /// minimal polynomial.
  FieldElement inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return make(field_, RationalPolynomial::constant(1 / rep_.coeff(0)));
    // Invariant: r_i = s_i * rep (mod minpoly)
    RationalPolynomial r0 = field_->minpoly(), r1 = rep_;
    RationalPolynomial s0, s1 = RationalPolynomial::constant(1);
    while (r1.degree() > 0) {
      auto [q, r] = divmod(r0, r1);
      RationalPolynomial s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r1 is a nonzero constant because minpoly is irreducible.
    FieldElement inv = make(field_, Rational(1 / r1.coeff(0)) * s1);
    inv.reduce();
    return inv;
  }

  /// Interval containing the real value, evaluated on the given enclosure of theta.
  Interval evaluate(const Interval& theta) const {
    Interval acc{Rational(0), Rational(0)};
    const auto& c = rep_.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * theta + Interval{*it, *it};
    return acc;
  }

  /// Interval of width at most 2^-bits containing the real value.
  Interval enclose(unsigned bits) const {
    if (is_rational()) return {rep_.coeff(0), rep_.coeff(0)};
    Rational limit(1);
    limit /= Rational(Integer(1) << bits);
    Interval theta = field_->theta_enclosure();
    Interval value = evaluate(theta);
    while (value.width() > limit) {
      theta = field_->refine(theta);
      value = evaluate(theta);
    }
    return value;
  }

  /// Exact sign: -1, 0 or +1.
  int sign() const {
    if (is_rational()) return coxeter::sign(rep_.coeff(0));
    Interval theta = field_->theta_enclosure();
    Interval value = evaluate(theta);
    while (value.contains_zero()) {
      theta = field_->refine(theta);
      value = evaluate(theta);
    }
    return coxeter::sign(value.lo);
  }

  double to_double() const { return enclose(96).midpoint().get_d(); }

  /// Decimal string with `digits` places after the point.
  std::string to_decimal(int digits) const {
    const unsigned bits = static_cast<unsigned>(std::ceil((digits + 3) * 3.3219280948873623)) + 4;
    return coxeter::to_decimal(enclose(bits).midpoint(), digits);
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_ && b.field_ && a.field_->level() != b.field_->level() && !(a.is_rational() && b.is_rational())) {
      return false;
    }
    return a.rep_ == b.rep_;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (const auto& c : rep_.coeffs()) h = detail::hash_combine(h, hash_value(c));
    return h;
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    const auto& c = x.rep_.coeffs();
    if (c.empty()) return os << "0";
    if (c.size() == 1) return os << to_string(c[0]);
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << to_string(c[k]);
      if (k > 0) os << "*t";
      if (k > 1) os << "^" << k;
    }
    return os;
  }

 private:
  static FieldElement make(FieldPtr field, RationalPolynomial rep) {
    FieldElement x;
    x.field_ = std::move(field);
    x.rep_ = std::move(rep);
    return x;
  }

  static FieldPtr common_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field_) return b.field_;
    if (!b.field_ || a.field_ == b.field_) return a.field_;
    if (a.field_->level() != b.field_->level()) throw FieldMismatch(a.field_->level(), b.field_->level());
    return a.field_;
  }

  void reduce() {
    if (!field_) {
      if (rep_.degree() > 0) throw Error("non-rational field element requires a field");
      return;
    }
    if (rep_.degree() >= static_cast<long>(field_->degree())) rep_ = rep_ % field_->minpoly();
  }

  FieldPtr field_;
  RationalPolynomial rep_;
};

inline int sign(const FieldElement& x) { return x.sign(); }

struct FieldElementHash {
  std::size_t operator()(const FieldElement& x) const { return x.hash(); }
};

inline RealCyclotomicField::RealCyclotomicField(unsigned level) : level_(level) {
  if (level == 0) throw std::invalid_argument("field level must be positive");
  minpoly_ = real_cyclotomic_minpoly(level);
  if (minpoly_.degree() == 1) {
    const Rational root = -minpoly_.coeff(0);
    theta_ = {root, root};
    return;
  }
  // The nearest other conjugate is 2cos(3pi/L) or further away.
  const double pi = std::numbers::pi;
  const double approx = 2.0 * std::cos(pi / level);
  const double gap = 4.0 * std::sin(2.0 * pi / level) * std::sin(pi / level);
  theta_ = {Rational(approx - gap / 4), Rational(approx + gap / 4)};
  if (sign(minpoly_(theta_.lo)) * sign(minpoly_(theta_.hi)) >= 0 ||
      sturm_root_count(minpoly_, theta_.lo, theta_.hi) != 1) {
    throw Error("failed to isolate 2cos(pi/" + std::to_string(level) + ")");
  }
  const Rational target = Rational(1) / Rational(Integer(1) << 64);
  while (theta_.width() > target && theta_.lo != theta_.hi) theta_ = refine(theta_);
}

inline FieldPtr RealCyclotomicField::for_level(unsigned level) {
  static std::mutex mutex;
  static std::map<unsigned, FieldPtr> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[level];
  if (!slot) slot = std::make_shared<const RealCyclotomicField>(level);
  return slot;
}

inline FieldPtr field_for_level(unsigned level) {
  if (level == 0) throw std::invalid_argument("field level must be positive");
  return RealCyclotomicField::for_level(level);
}

/// Exact 2cos(pi/m) in `field`; infinity maps to 2 so that the Tits entry
/// -value/2 is -1.
inline FieldElement two_cos_pi_over(const Order& m, const FieldPtr& field) {
  if (m.is_infinite()) return FieldElement(field, {Rational(2)});
  const unsigned order = m.value();
  if (order == 0) throw std::invalid_argument("order must be positive");
  if (order == 1) return FieldElement(field, {Rational(-2)});
  if (order == 2) return FieldElement(field, {Rational(0)});
  if (field->level() % order != 0) {
    throw std::invalid_argument("order " + std::to_string(order) + " does not divide field level " +
                                std::to_string(field->level()));
  }
  // c_k = 2cos(k pi / L): c_0 = 2, c_1 = theta, c_{k+1} = theta c_k - c_{k-1}
  const unsigned steps = field->level() / order;
  const FieldElement theta = FieldElement::theta(field);
  FieldElement prev(field, {Rational(2)});
  FieldElement cur = theta;
  for (unsigned k = 1; k < steps; ++k) {
    FieldElement next = theta * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace coxeter
