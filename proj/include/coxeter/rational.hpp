#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coxeter {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// mpq_class(num, den) does not reduce; everything stored must be canonical.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

inline Rational ratio(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return canonical(Rational(num, den));
}

/// Renders "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

namespace detail {

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = std::hash<int>{}(mpz_sgn(z));
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
  }
  return h;
}

}  // namespace detail

inline std::size_t hash_value(const Rational& q) {
  return detail::hash_combine(detail::hash_mpz(q.get_num_mpz_t()),
                              detail::hash_mpz(q.get_den_mpz_t()));
}

/// Decimal rendering of an exact rational, rounded half away from zero to
/// `digits` places after the point.
inline std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  Integer rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  std::string body = rounded.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(q) < 0 && rounded != 0) body.insert(0, "-");
  return body;
}

}  // namespace coxeter
