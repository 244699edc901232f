#pragma once

// Reproduction of the explicit computations for the rank-3 right-angled
// system with m12 = m23 = inf, m13 = 2: its Tits form, the integral base
// change identifying that form with the Killing form of sl(2,R), and the
// adjoint images of the PSL(2,Z) elements x^2 and w x^2 w^-1.
//
// Expected values live in the constant tables below and are never derived
// from the engines they check.

#include <cstddef>
#include <string>
#include <vector>

#include "coxeter/geom_rep.hpp"
#include "coxeter/linalg.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/report.hpp"
#include "coxeter/system.hpp"
#include "coxeter/tits_form.hpp"

namespace coxeter::verify {

namespace constants {

// Tits form of the all-infinite triangle and its characteristic polynomial
// (x-2)^2 (x+1), ascending coefficients.
inline const IntMatrix kTriangleForm{{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
inline const std::vector<long> kTriangleCharPoly{4, 0, -3, 1};
inline const std::vector<long> kTriangleEigenvalues{2, 2, -1};

inline const IntMatrix kTitsForm{{1, -1, 0}, {-1, 1, -1}, {0, -1, 1}};
inline const IntMatrix kRhoS1{{-1, 2, 0}, {0, 1, 0}, {0, 0, 1}};
inline const IntMatrix kRhoS2{{1, 0, 0}, {2, -1, 2}, {0, 0, 1}};
inline const IntMatrix kRhoS3{{1, 0, 0}, {0, 1, 0}, {0, 2, -1}};

// Columns are e1+e2, e2, e2+e3.
inline const IntMatrix kBaseChange{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}};
inline const IntMatrix kFormNewBasis{{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}};
inline const IntMatrix kRhoS1NewBasis{{1, 2, 2}, {0, -1, -2}, {0, 0, 1}};
inline const IntMatrix kRhoS2NewBasis{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
inline const IntMatrix kRhoS3NewBasis{{1, 0, 0}, {-2, -1, 0}, {2, 2, 1}};

// sl(2) basis: eps1 = -2 E12, eps2 = diag(1,-1), eps3 = E21.
inline const IntMatrix kEps1{{0, -2}, {0, 0}};
inline const IntMatrix kEps2{{1, 0}, {0, -1}};
inline const IntMatrix kEps3{{0, 0}, {1, 0}};
inline const IntMatrix kKillingForm{{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}};

inline const IntMatrix kW{{0, -1}, {1, 0}};
inline const IntMatrix kX{{1, 1}, {0, 1}};
inline const IntMatrix kXSquared{{1, 2}, {0, 1}};
inline const IntMatrix kWX2WInv{{1, 0}, {-2, 1}};
inline const IntMatrix kWX2WInvInverse{{1, 0}, {2, 1}};

inline const IntMatrix kAdXSquared{{1, 2, 2}, {0, 1, 2}, {0, 0, 1}};
inline const IntMatrix kAdWX2WInvInverse{{1, 0, 0}, {4, 1, 0}, {8, 4, 1}};
inline const IntMatrix kRhoS2S1{{1, 2, 2}, {0, 1, 2}, {0, 0, 1}};
inline const IntMatrix kRhoS2S3{{1, 0, 0}, {2, 1, 0}, {2, 2, 1}};

inline constexpr std::size_t kDisjointnessLength = 8;

}  // namespace constants

/// The rank-3 right-angled system m12 = m23 = inf, m13 = 2.
inline CoxeterSystem right_angled_system() {
  return CoxeterSystem::with_orders(3, {{{0, 1}, Order::infinity()}, {{1, 2}, Order::infinity()}, {{0, 2}, Order(2)}});
}

/// The rank-3 system with every m_ij infinite.
inline CoxeterSystem infinite_triangle_system() {
  return CoxeterSystem::with_orders(
      3, {{{0, 1}, Order::infinity()}, {{1, 2}, Order::infinity()}, {{0, 2}, Order::infinity()}});
}

namespace detail {

inline RationalMatrix to_rational(const IntMatrix& m) {
  return m.map([](long long x) { return Rational(static_cast<long>(x)); });
}

inline bool is_integral(const FieldMatrix& m) {
  for (const auto& x : m.data()) {
    if (!x.is_rational() || x.rational_value().get_den() != 1) return false;
  }
  return true;
}

inline bool is_integral(const RationalMatrix& m) {
  for (const auto& x : m.data()) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

template <typename M>
std::string str(const M& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

template <typename M>
void expect_matrix(Report& r, const std::string& name, const IntMatrix& expected, const M& computed) {
  bool pass = false;
  if constexpr (std::is_same_v<M, FieldMatrix>) {
    pass = computed == to_field(expected);
  } else {
    pass = computed == to_rational(expected);
  }
  r.add(name, str(expected), str(computed), pass);
}

/// Coordinates of a traceless 2x2 matrix [[a,b],[c,-a]] in the eps basis.
inline std::vector<Rational> eps_coordinates(const RationalMatrix& y) {
  return {Rational(y(0, 1) / -2), y(0, 0), y(1, 0)};
}

inline std::vector<RationalMatrix> eps_basis() {
  return {to_rational(constants::kEps1), to_rational(constants::kEps2), to_rational(constants::kEps3)};
}

}  // namespace detail

/// K(X,Y) = tr(XY)/2 on traceless 2x2 matrices.
inline Rational killing(const RationalMatrix& x, const RationalMatrix& y) { return trace(x * y) / 2; }

/// Gram matrix of K on the eps basis.
inline RationalMatrix killing_matrix() {
  const auto eps = detail::eps_basis();
  RationalMatrix k(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) k(i, j) = killing(eps[i], eps[j]);
  }
  return k;
}

/// Matrix of Ad(g): Y -> g Y g^-1 on the eps basis; column j holds Ad(g) eps_j.
inline RationalMatrix adjoint_matrix(const RationalMatrix& g) {
  const auto eps = detail::eps_basis();
  const RationalMatrix g_inv = inverse(g);
  RationalMatrix ad(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    const auto c = detail::eps_coordinates(g * eps[j] * g_inv);
    for (std::size_t i = 0; i < 3; ++i) ad(i, j) = c[i];
  }
  return ad;
}

inline Report verify_triangle_eigenvalues() {
  Report r;
  r.title = "all-infinite triangle eigenvalues";
  const FormMatrix b1 = build_tits_form(infinite_triangle_system());
  detail::expect_matrix(r, "Tits form of the all-infinite triangle", constants::kTriangleForm, b1.entries);

  const Polynomial<FieldElement> cp = char_poly(b1);
  std::vector<FieldElement> expected_coeffs;
  for (long c : constants::kTriangleCharPoly) expected_coeffs.emplace_back(c);
  const Polynomial<FieldElement> expected(expected_coeffs);
  r.expect_equal("characteristic polynomial", expected, cp, cp == expected);

  Polynomial<FieldElement> rest = cp;
  bool divides = true;
  for (long ev : constants::kTriangleEigenvalues) {
    auto [q, rem] = divmod(rest, Polynomial<FieldElement>{FieldElement(-ev), FieldElement(1)});
    divides = divides && rem.is_zero();
    rest = q;
  }
  divides = divides && rest == Polynomial<FieldElement>{FieldElement(1)};
  r.add("char poly = (x-2)(x-2)(x+1) by exact division", "quotient 1, remainders 0", divides ? "ok" : "failed",
        divides);

  const Signature sig = signature(b1);
  r.expect_equal("signature", Signature{2, 1, 0}, sig, sig == Signature{2, 1, 0});
  const FieldElement tr = trace(b1.entries);
  r.expect_equal("trace = 2 + 2 - 1", "3", tr, tr == FieldElement(3));
  return r;
}

inline Report verify_base_change() {
  Report r;
  r.title = "integral base change";
  const CoxeterSystem system = right_angled_system();
  const FormMatrix form = build_tits_form(system);
  detail::expect_matrix(r, "Tits form", constants::kTitsForm, form.entries);

  const IntMatrix* old_basis[] = {&constants::kRhoS1, &constants::kRhoS2, &constants::kRhoS3};
  const IntMatrix* new_basis[] = {&constants::kRhoS1NewBasis, &constants::kRhoS2NewBasis, &constants::kRhoS3NewBasis};
  for (std::size_t i = 0; i < 3; ++i) {
    const RepMatrix s = reflection_matrix(form, i);
    const std::string name = "rho(s" + std::to_string(i + 1) + ")";
    detail::expect_matrix(r, name, *old_basis[i], s.entries);
    detail::expect_matrix(r, name + " in basis {e1+e2, e2, e2+e3}", *new_basis[i],
                          change_basis(s, constants::kBaseChange).entries);
  }

  const FormMatrix changed = change_basis(form, constants::kBaseChange);
  detail::expect_matrix(r, "P^T B P", constants::kFormNewBasis, changed.entries);
  const Signature before = signature(form);
  const Signature after = signature(changed);
  r.expect_equal("signature of B", Signature{2, 1, 0}, before, before == Signature{2, 1, 0});
  r.expect_equal("signature of P^T B P", Signature{2, 1, 0}, after, after == Signature{2, 1, 0});
  return r;
}

inline Report verify_killing_form() {
  Report r;
  r.title = "Killing form on sl(2)";
  const auto eps = detail::eps_basis();
  const Rational k22 = killing(eps[1], eps[1]);
  const Rational k13 = killing(eps[0], eps[2]);
  r.expect_equal("K(eps2,eps2)", "1", k22, k22 == 1);
  r.expect_equal("K(eps1,eps3)", "-1", k13, k13 == -1);
  const RationalMatrix k = killing_matrix();
  detail::expect_matrix(r, "Killing form matrix", constants::kKillingForm, k);

  const FormMatrix changed = change_basis(build_tits_form(right_angled_system()), constants::kBaseChange);
  const FieldMatrix kf = k.map([](const Rational& q) { return FieldElement(q); });
  r.add("P^T B P equals the Killing form", detail::str(kf), detail::str(changed.entries), kf == changed.entries);
  return r;
}

inline Report verify_adjoint_identities() {
  Report r;
  r.title = "adjoint identities";
  const RationalMatrix w = detail::to_rational(constants::kW);
  const RationalMatrix x = detail::to_rational(constants::kX);
  const RationalMatrix x2 = x * x;
  const RationalMatrix wx2w = w * x2 * inverse(w);
  detail::expect_matrix(r, "x^2", constants::kXSquared, x2);
  detail::expect_matrix(r, "w x^2 w^-1", constants::kWX2WInv, wx2w);
  detail::expect_matrix(r, "(w x^2 w^-1)^-1", constants::kWX2WInvInverse, inverse(wx2w));

  const RationalMatrix ad_x2 = adjoint_matrix(x2);
  const RationalMatrix ad_inv = inverse(adjoint_matrix(wx2w));
  detail::expect_matrix(r, "Ad(x^2)", constants::kAdXSquared, ad_x2);
  detail::expect_matrix(r, "Ad(w x^2 w^-1)^-1", constants::kAdWX2WInvInverse, ad_inv);

  const FormMatrix form = build_tits_form(right_angled_system());
  const auto& p = constants::kBaseChange;
  const FieldMatrix s1 = change_basis(reflection_matrix(form, 0), p).entries;
  const FieldMatrix s2 = change_basis(reflection_matrix(form, 1), p).entries;
  const FieldMatrix s3 = change_basis(reflection_matrix(form, 2), p).entries;
  const FieldMatrix s2s1 = s2 * s1;
  const FieldMatrix s2s3 = s2 * s3;
  detail::expect_matrix(r, "rho(s2 s1)", constants::kRhoS2S1, s2s1);
  detail::expect_matrix(r, "rho(s2 s3)", constants::kRhoS2S3, s2s3);
  detail::expect_matrix(r, "rho(s2 s1) = Ad(x^2)", constants::kAdXSquared, s2s1);
  detail::expect_matrix(r, "rho(s2 s3)^2 = Ad(w x^2 w^-1)^-1", constants::kAdWX2WInvInverse, s2s3 * s2s3);

  const FormMatrix changed = change_basis(form, p);
  const RationalMatrix k = killing_matrix();
  const auto preserves_k = [&](const RationalMatrix& g) { return g.transpose() * k * g == k; };
  const bool all_preserve = preserves_k(ad_x2) && preserves_k(ad_inv) && preserves_form(s2s1, changed) &&
                            preserves_form(s2s3, changed);
  r.add("Ad(x^2), Ad(w x^2 w^-1)^-1, rho(s2 s1), rho(s2 s3) preserve the form", "true",
        all_preserve ? "true" : "false", all_preserve);
  const bool integral = detail::is_integral(ad_x2) && detail::is_integral(ad_inv) && detail::is_integral(s2s1) &&
                        detail::is_integral(s2s3);
  r.add("the four matrices are integral", "true", integral ? "true" : "false", integral);
  r.notes.push_back(
      "Ad(x^2) = rho(s2 s1) and Ad(w x^2 w^-1)^-1 = rho(s2 s3)^2 place both generators of H in the image of "
      "H' = <s2 s1, s2 s3>");
  return r;
}

inline Report verify_psl2z_relations() {
  Report r;
  r.title = "PSL(2,Z) relations";
  const RationalMatrix w = detail::to_rational(constants::kW);
  const RationalMatrix x = detail::to_rational(constants::kX);
  const RationalMatrix minus_id = -RationalMatrix::identity(2);
  const RationalMatrix w2 = w * w;
  const RationalMatrix wx = w * x;
  const RationalMatrix wx3 = wx * wx * wx;
  r.add("w^2 = -I", detail::str(minus_id), detail::str(w2), w2 == minus_id);
  r.add("(wx)^3 = -I", detail::str(minus_id), detail::str(wx3), wx3 == minus_id);
  bool unbounded = true;
  RationalMatrix xk = x;
  for (long k = 1; k <= 10; ++k) {
    const RationalMatrix expected{{Rational(1), Rational(k)}, {Rational(0), Rational(1)}};
    unbounded = unbounded && xk == expected && !(xk == RationalMatrix::identity(2)) && !(xk == minus_id);
    xk = xk * x;
  }
  r.add("x^k = [[1,k],[0,1]] != +-I for 1 <= k <= 10", "true", unbounded ? "true" : "false", unbounded);
  return r;
}

/// Every check for the right-angled rank-3 example.
inline Report verify_worked_example() {
  Report r;
  r.title = "right-angled rank-3 example";
  r.append(verify_base_change());
  r.append(verify_killing_form());
  r.append(verify_adjoint_identities());
  r.append(verify_psl2z_relations());

  const CoxeterSystem system = right_angled_system();
  const Classification c = classify(system);
  r.expect_equal("classification", Classification::HyperbolicType, c, c == Classification::HyperbolicType);

  const FormMatrix form = build_tits_form(system);
  bool integral = true;
  for (std::size_t i = 0; i < 3; ++i) {
    integral = integral && detail::is_integral(change_basis(reflection_matrix(form, i), constants::kBaseChange).entries);
  }
  r.add("rho(s_i) integral in basis {e1+e2, e2, e2+e3}", "true", integral ? "true" : "false", integral);

  const Report disjoint = tits_disjointness_check(system, constants::kDisjointnessLength);
  for (const auto& check : disjoint.checks) {
    r.add(check.name + " up to length " + std::to_string(constants::kDisjointnessLength), check.expected,
          check.computed, check.pass);
  }
  r.notes.push_back("finite index of H in PSL(2,Z): asserted, not machine-checked");
  r.notes.push_back("finite index of H' in W: asserted, not machine-checked");
  r.notes.push_back("W a lattice in O(2,1), finite index in O(2,1)(Z): asserted, not machine-checked");
  return r;
}

/// The triangle eigenvalues plus the complete worked example.
inline Report verify_all() {
  Report r = verify_triangle_eigenvalues();
  r.title = "worked computations";
  r.append(verify_worked_example());
  return r;
}

}  // namespace coxeter::verify
