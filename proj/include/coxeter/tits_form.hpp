#pragma once

// The Tits bilinear form of a Coxeter system: construction, exact signature
// by congruence, classification, and chamber predicates.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coxeter/field.hpp"
#include "coxeter/linalg.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/report.hpp"
#include "coxeter/system.hpp"

namespace coxeter {

using Vector = std::vector<FieldElement>;
using FieldMatrix = Matrix<FieldElement>;

class DegenerateForm : public Error {
 public:
  DegenerateForm() : Error("bilinear form is degenerate") {}
};

class DegenerateRestriction : public Error {
 public:
  DegenerateRestriction() : Error("restriction of the form to the given span is degenerate") {}
};

class PreconditionUnmet : public Error {
 public:
  explicit PreconditionUnmet(std::string hypothesis)
      : Error("precondition unmet: " + hypothesis), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Symmetric bilinear form on the span of e_1..e_n, as its Gram matrix.
struct FormMatrix {
  FieldPtr field;
  FieldMatrix entries;

  std::size_t size() const { return entries.rows(); }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }

  FieldElement apply(const Vector& u, const Vector& v) const { return dot(u, entries * v); }

  friend bool operator==(const FormMatrix& a, const FormMatrix& b) { return a.entries == b.entries; }
};

struct Signature {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t z = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Signature& s) {
    return os << "(" << s.p << "," << s.q << "," << s.z << ")";
  }
};

enum class Classification {
  PositiveDefinite,
  PositiveSemidefiniteDegenerate,
  HyperbolicType,
  IndefiniteOther,
  DegenerateOther,
};

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::PositiveDefinite: return "PositiveDefinite";
    case Classification::PositiveSemidefiniteDegenerate: return "PositiveSemidefiniteDegenerate";
    case Classification::HyperbolicType: return "HyperbolicType";
    case Classification::IndefiniteOther: return "IndefiniteOther";
    case Classification::DegenerateOther: return "DegenerateOther";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, Classification c) { return os << to_string(c); }

/// B(e_i, e_j) = -cos(pi/m_ij), with -1 for infinite orders.
inline FormMatrix build_tits_form(const CoxeterSystem& system) {
  const FieldPtr field = field_for_level(system.field_level());
  const std::size_t n = system.rank();
  FieldMatrix b(n, n);
  const FieldElement minus_half(Rational(-1, 2));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b(i, j) = two_cos_pi_over(system.order(i, j), field) * minus_half;
  }
  return {field, std::move(b)};
}

/// Diagonal of a matrix congruent to `m` obtained by symmetric elimination.
///
/// A nonzero diagonal pivot is preferred. When the remaining block has a zero
/// diagonal but a nonzero entry D[i][j], row/column j is added into i, which
/// puts 2 D[i][j] on the diagonal.
template <typename T>
std::vector<T> congruence_diagonal(Matrix<T> d) {
  if (!d.is_symmetric()) throw std::invalid_argument("congruence_diagonal: matrix must be symmetric");
  const std::size_t n = d.rows();
  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(d(i, a), d(i, b));
  };
  std::vector<T> pivots;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i) {
      if (!detail::is_zero(d(i, i))) piv = i;
    }
    if (piv == n) {
      for (std::size_t i = k; i < n && piv == n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (i != j && !detail::is_zero(d(i, j))) {
            for (std::size_t c = 0; c < n; ++c) d(i, c) = d(i, c) + d(j, c);
            for (std::size_t r = 0; r < n; ++r) d(r, i) = d(r, i) + d(r, j);
            piv = i;
            break;
          }
        }
      }
    }
    if (piv == n) {
      // remaining block is zero
      while (pivots.size() < n) pivots.push_back(T(0));
      return pivots;
    }
    swap_index(k, piv);
    const T inv = T(1) / d(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (detail::is_zero(d(i, k))) continue;
      const T f = d(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) d(i, j) = d(i, j) - f * d(k, j);
      for (std::size_t r = k; r < n; ++r) d(r, i) = d(r, i) - f * d(r, k);
    }
    pivots.push_back(d(k, k));
  }
  return pivots;
}

template <typename T>
Signature signature(const Matrix<T>& m) {
  Signature s;
  for (const auto& pivot : congruence_diagonal(m)) {
    switch (sign(pivot)) {
      case 1: ++s.p; break;
      case -1: ++s.q; break;
      default: ++s.z; break;
    }
  }
  return s;
}

inline Signature signature(const FormMatrix& form) { return signature(form.entries); }

inline Classification classify(const Signature& s) {
  const std::size_t n = s.p + s.q + s.z;
  if (s.p == n) return Classification::PositiveDefinite;
  if (s.q == 0) return Classification::PositiveSemidefiniteDegenerate;
  if (s.z == 0 && s.p + 1 == n && s.q == 1) return Classification::HyperbolicType;
  if (s.z == 0) return Classification::IndefiniteOther;
  return Classification::DegenerateOther;
}

inline Classification classify(const CoxeterSystem& system) { return classify(signature(build_tits_form(system))); }

inline bool chamber_contains(const FormMatrix& form, const Vector& v) {
  for (const auto& x : form.entries * v) {
    if (x.sign() != 1) return false;
  }
  return true;
}

/// The point v with B(v, e_i) = 1 for every i.
inline Vector canonical_chamber_point(const FormMatrix& form) {
  try {
    return solve(form.entries, Vector(form.size(), FieldElement(1)));
  } catch (const SingularMatrix&) {
    throw DegenerateForm();
  }
}

/// Deterministic points v = B^-1 c for random strictly positive rational c.
inline std::vector<Vector> sample_chamber_points(const FormMatrix& form, std::uint64_t seed, std::size_t count) {
  FieldMatrix inv;
  try {
    inv = inverse(form.entries);
  } catch (const SingularMatrix&) {
    throw DegenerateForm();
  }
  std::mt19937_64 rng(seed);
  std::vector<Vector> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Vector c;
    for (std::size_t i = 0; i < form.size(); ++i) {
      const auto num = static_cast<long>(1 + rng() % 1000);
      const auto den = static_cast<long>(1 + rng() % 97);
      c.emplace_back(ratio(num, den));
    }
    points.push_back(inv * c);
  }
  return points;
}

/// Gram matrix of the form restricted to span(basis).
inline FormMatrix restrict_form(const FormMatrix& form, const std::vector<Vector>& basis) {
  FieldMatrix g(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) g(a, b) = form.apply(basis[a], basis[b]);
  }
  return {form.field, std::move(g)};
}

/// Basis of {v : B(v, b) = 0 for all b in basis}.
inline std::vector<Vector> orthogonal_complement(const FormMatrix& form, const std::vector<Vector>& basis) {
  if (!basis.empty() && determinant(restrict_form(form, basis).entries).is_zero()) throw DegenerateRestriction();
  FieldMatrix rows(basis.size(), form.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const Vector r = form.entries.transpose() * basis[a];
    for (std::size_t j = 0; j < form.size(); ++j) rows(a, j) = r[j];
  }
  if (basis.empty()) return kernel(FieldMatrix(1, form.size()));
  return kernel(rows);
}

inline Polynomial<FieldElement> char_poly(const FormMatrix& form) { return characteristic_polynomial(form.entries); }

inline Vector basis_vector(std::size_t n, std::size_t i) {
  Vector e(n, FieldElement(0));
  e[i] = FieldElement(1);
  return e;
}

namespace detail {

inline std::string render(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace detail

/// Checks the numeric consequences that a lattice Coxeter group forces on its
/// Tits form: signature (n-1,1) and B(v,v) < 0 throughout the chamber.
///
/// Requires an irreducible system with non-degenerate, non-positive form
/// (equivalently: W infinite). Whether W actually is a lattice in O(B) is
/// not decided here.
inline Report theorem3_check(const CoxeterSystem& system, std::size_t sample_count, std::uint64_t seed) {
  if (!is_irreducible(system)) throw PreconditionUnmet("system is irreducible");
  const FormMatrix form = build_tits_form(system);
  const Signature sig = signature(form);
  if (sig.z > 0) throw PreconditionUnmet("Tits form is non-degenerate");
  if (sig.q == 0) throw PreconditionUnmet("Coxeter group is infinite (Tits form not positive definite)");

  const std::size_t n = system.rank();
  Report report;
  report.title = "chamber signature check";

  // p >= 2, via a positive definite pair span or an all-infinite triangle.
  std::optional<std::pair<std::size_t, std::size_t>> finite_pair;
  for (std::size_t i = 0; i < n && !finite_pair; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (system.is_finite_pair(i, j)) {
        finite_pair = {i, j};
        break;
      }
    }
  }
  if (finite_pair) {
    const auto [i, j] = *finite_pair;
    const FormMatrix pair = restrict_form(form, {basis_vector(n, i), basis_vector(n, j)});
    const Signature ps = signature(pair);
    report.expect_equal("span(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ") is positive definite",
                        Signature{2, 0, 0}, ps, ps == Signature{2, 0, 0});
  } else if (n >= 3) {
    const FormMatrix tri = restrict_form(form, {basis_vector(n, 0), basis_vector(n, 1), basis_vector(n, 2)});
    const Signature ts = signature(tri);
    report.expect_equal("span(e1,e2,e3) has signature (2,1)", Signature{2, 1, 0}, ts, ts == Signature{2, 1, 0});
  }

  const Signature hyperbolic{n - 1, 1, 0};
  report.expect_equal("signature is (n-1,1)", hyperbolic, sig, sig == hyperbolic);

  const Vector v0 = canonical_chamber_point(form);
  const FieldElement q0 = form.apply(v0, v0);
  report.add("canonical point lies in C", "true", chamber_contains(form, v0) ? "true" : "false",
             chamber_contains(form, v0));
  report.add("B(v,v) < 0 at canonical point " + detail::render(v0), "< 0", q0.to_decimal(12), q0.sign() < 0);
  report.witnesses.push_back({"B(v0,v0)", q0});

  std::size_t negative = 0;
  std::size_t inside = 0;
  const auto samples = sample_chamber_points(form, seed, sample_count);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const FieldElement q = form.apply(samples[k], samples[k]);
    if (q.sign() < 0) ++negative;
    if (chamber_contains(form, samples[k])) ++inside;
    report.witnesses.push_back({"B(v,v) sample " + std::to_string(k), q});
  }
  const std::string total = std::to_string(samples.size());
  report.add("sampled points lie in C", total, std::to_string(inside), inside == samples.size());
  report.add("B(v,v) < 0 at sampled points", total, std::to_string(negative), negative == samples.size());
  report.notes.push_back(
      "only the numeric consequences are checked; whether W is a lattice in O(B) is not decided");
  return report;
}

}  // namespace coxeter
