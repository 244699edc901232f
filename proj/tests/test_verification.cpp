#include <gtest/gtest.h>

#include <array>
#include <random>

#include "coxeter/verification.hpp"

using namespace coxeter;
using namespace coxeter::verify;

namespace {

// 2x2 integer helpers kept apart from the library's rational ones.
using M2 = std::array<long long, 4>;  // a b / c d

M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}
M2 inv_sl2(const M2& x) { return {x[3], -x[1], -x[2], x[0]}; }

// Coordinates of a traceless [[a, b], [c, -a]] in the basis [[0,-2],[0,0]], diag(1,-1), [[0,0],[1,0]].
std::array<Rational, 3> coords(const M2& y) {
  return {ratio(static_cast<long>(-y[1]), 2), Rational(static_cast<long>(y[0])), Rational(static_cast<long>(y[2]))};
}

RationalMatrix ad_by_columns(const M2& g) {
  const M2 basis[] = {{0, -2, 0, 0}, {1, 0, 0, -1}, {0, 0, 1, 0}};
  RationalMatrix out(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    const auto c = coords(mul(mul(g, basis[j]), inv_sl2(g)));
    for (std::size_t i = 0; i < 3; ++i) out(i, j) = c[i];
  }
  return out;
}

RationalMatrix rm(std::initializer_list<std::initializer_list<Rational>> rows) { return RationalMatrix(rows); }

}  // namespace

TEST(Verification, EveryReportPasses) {
  for (const Report& r : {verify_triangle_eigenvalues(), verify_base_change(), verify_killing_form(),
                          verify_adjoint_identities(), verify_psl2z_relations(), verify_worked_example()}) {
    EXPECT_TRUE(r.overall()) << r.title;
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.title << ": " << c.name << " expected " << c.expected
                                                       << " computed " << c.computed;
  }
}

TEST(Verification, AllHasEnoughChecks) {
  const Report r = verify_all();
  EXPECT_TRUE(r.overall());
  EXPECT_GE(r.checks.size(), 12U);
  EXPECT_EQ(r.passed(), r.checks.size());
}

TEST(Verification, AdjointAgainstIndependentConjugation) {
  const M2 x2{1, 2, 0, 1};
  const M2 w{0, -1, 1, 0};
  const M2 wx2winv = mul(mul(w, x2), inv_sl2(w));
  EXPECT_EQ(wx2winv, (M2{1, 0, -2, 1}));
  EXPECT_EQ(ad_by_columns(x2), rm({{1, 2, 2}, {0, 1, 2}, {0, 0, 1}}));
  EXPECT_EQ(ad_by_columns(inv_sl2(wx2winv)), rm({{1, 0, 0}, {4, 1, 0}, {8, 4, 1}}));
  EXPECT_EQ(adjoint_matrix(verify::detail::to_rational(IntMatrix{{1, 2}, {0, 1}})), ad_by_columns(x2));
}

TEST(Verification, AdjointIsAHomomorphismPreservingKilling) {
  std::mt19937_64 rng(31);
  const RationalMatrix k = killing_matrix();
  EXPECT_EQ(k, rm({{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}}));
  for (int trial = 0; trial < 50; ++trial) {
    // Random SL(2,Z) elements as words in x and w.
    M2 g{1, 0, 0, 1};
    M2 h{1, 0, 0, 1};
    for (int s = 0; s < 6; ++s) {
      g = mul(g, rng() % 2 ? M2{1, 1, 0, 1} : M2{0, -1, 1, 0});
      h = mul(h, rng() % 2 ? M2{1, 1, 0, 1} : M2{0, -1, 1, 0});
    }
    const RationalMatrix ag = ad_by_columns(g);
    EXPECT_EQ(ag * ad_by_columns(h), ad_by_columns(mul(g, h)));
    EXPECT_EQ(ag.transpose() * k * ag, k);
  }
}

TEST(Verification, RightAngledProductsSquare) {
  // rho(s2 s3)^2 by repeated integer multiplication in the new basis.
  const RationalMatrix s23 = rm({{1, 0, 0}, {2, 1, 0}, {2, 2, 1}});
  EXPECT_EQ(s23 * s23, rm({{1, 0, 0}, {4, 1, 0}, {8, 4, 1}}));
}
