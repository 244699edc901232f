#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <unordered_set>

#include "coxeter/geom_rep.hpp"
#include "coxeter/linalg.hpp"
#include "coxeter/system.hpp"
#include "coxeter/tits_form.hpp"

using namespace coxeter;

namespace {

CoxeterSystem sys(const char* text) { return parse_coxeter_spec(text); }
CoxeterSystem right_angled() { return sys("rank 3\nm 1 2 inf\nm 2 3 inf\nm 1 3 2"); }
CoxeterSystem dihedral(const std::string& m) { return parse_coxeter_spec("rank 2\nm 1 2 " + m); }

FieldMatrix fm(std::initializer_list<std::initializer_list<FieldElement>> rows) { return FieldMatrix(rows); }

// Integer reflection matrices straight from sigma_i(e_j) = e_j - 2 B(e_j, e_i) e_i
// for a form whose entries 2B are integers.
std::vector<IntMatrix> integer_reflections(const IntMatrix& twice_b) {
  const std::size_t n = twice_b.rows();
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= twice_b(j, i);
    out.push_back(s);
  }
  return out;
}

std::size_t brute_force_count(const std::vector<IntMatrix>& gens, std::size_t max_len) {
  const std::size_t n = gens.front().rows();
  std::set<std::vector<long long>> seen;
  std::vector<IntMatrix> layer{IntMatrix::identity(n)};
  seen.insert(layer[0].data());
  for (std::size_t len = 0; len < max_len; ++len) {
    std::vector<IntMatrix> next;
    for (const auto& m : layer) {
      for (const auto& g : gens) {
        next.push_back(m * g);
        seen.insert(next.back().data());
      }
    }
    layer = std::move(next);
  }
  return seen.size();
}

const std::vector<std::pair<std::string, CoxeterSystem>>& catalog() {
  static const std::vector<std::pair<std::string, CoxeterSystem>> c = [] {
    std::vector<std::pair<std::string, CoxeterSystem>> v;
    for (const char* m : {"2", "3", "4", "5", "6", "inf"}) v.emplace_back(std::string("I2(") + m + ")", dihedral(m));
    v.emplace_back("A3", sys("rank 3\nm 1 2 3\nm 2 3 3"));
    v.emplace_back("B3", sys("rank 3\nm 1 2 4\nm 2 3 3"));
    v.emplace_back("H3", sys("rank 3\nm 1 2 5\nm 2 3 3"));
    v.emplace_back("right-angled", right_angled());
    v.emplace_back("triangle", sys("rank 3\nm 1 2 inf\nm 2 3 inf\nm 1 3 inf"));
    return v;
  }();
  return c;
}

}  // namespace

TEST(Reflection, Examples) {
  EXPECT_EQ(reflection_matrix(right_angled(), 0).entries, fm({{-1, 2, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(reflection_matrix(right_angled(), 1).entries, fm({{1, 0, 0}, {2, -1, 2}, {0, 0, 1}}));
  EXPECT_EQ(reflection_matrix(right_angled(), 2).entries, fm({{1, 0, 0}, {0, 1, 0}, {0, 2, -1}}));
  EXPECT_EQ(reflection_matrix(sys("rank 1"), 0).entries, fm({{-1}}));
  EXPECT_EQ(reflection_matrix(dihedral("3"), 0).entries, fm({{-1, 1}, {0, 1}}));
  EXPECT_THROW(reflection_matrix(right_angled(), 3), std::out_of_range);
}

TEST(Reflection, MatchesIntegerFormula) {
  const auto expected = integer_reflections(IntMatrix{{2, -2, 0}, {-2, 2, -2}, {0, -2, 2}});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(reflection_matrix(right_angled(), i).entries, to_field(expected[i]));
}

TEST(ChangeBasis, Examples) {
  const IntMatrix p{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}};
  const auto b = build_tits_form(right_angled());
  EXPECT_EQ(change_basis(b, p).entries, fm({{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}}));
  const auto gens = generator_matrices(b);
  EXPECT_EQ(change_basis(gens[0], IntMatrix::identity(3)).entries, gens[0].entries);
  const RepMatrix s21{gens[1].entries * gens[0].entries, std::nullopt};
  EXPECT_EQ(change_basis(s21, p).entries, fm({{1, 2, 2}, {0, 1, 2}, {0, 0, 1}}));
  EXPECT_THROW(change_basis(b, IntMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}), SingularMatrix);
}

TEST(PreservesForm, Examples) {
  const auto b = build_tits_form(right_angled());
  EXPECT_TRUE(preserves_form(reflection_matrix(b, 0), b));
  EXPECT_TRUE(preserves_form(FieldMatrix::identity(3), b));
  EXPECT_FALSE(preserves_form(fm({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), b));
}

TEST(Order, Examples) {
  const auto g = generator_matrices(build_tits_form(dihedral("3")));
  const FieldMatrix p = g[0].entries * g[1].entries;
  const FieldMatrix id = FieldMatrix::identity(2);
  EXPECT_NE(p, id);
  EXPECT_NE(p * p, id);
  EXPECT_EQ(p * p * p, id);

  const auto h = generator_matrices(build_tits_form(right_angled()));
  const FieldMatrix q = h[0].entries * h[2].entries;
  EXPECT_EQ(q * q, FieldMatrix::identity(3));
  EXPECT_EQ(reflection_matrix(sys("rank 1"), 0).entries * reflection_matrix(sys("rank 1"), 0).entries,
            FieldMatrix::identity(1));

  EXPECT_EQ(order_of_product(right_angled(), 0, 2, 100), OrderResult::finite(2));
  EXPECT_EQ(order_of_product(right_angled(), 0, 1, 100), OrderResult::infinite());
  EXPECT_EQ(order_of_product(dihedral("3"), 0, 1, 100), OrderResult::finite(3));
  EXPECT_EQ(order_of_product(dihedral("3"), 0, 1, 2), OrderResult::unknown());
}

TEST(Order, UnipotentBlockForInfinitePairs) {
  for (const auto& [name, s] : catalog()) {
    const auto g = generator_matrices(build_tits_form(s));
    for (std::size_t i = 0; i < s.rank(); ++i) {
      for (std::size_t j = i + 1; j < s.rank(); ++j) {
        if (!s.order(i, j).is_infinite()) continue;
        const FieldMatrix block = pair_block(g[i].entries * g[j].entries, i, j);
        EXPECT_EQ(trace(block), FieldElement(2)) << name;
        EXPECT_FALSE(block.is_identity()) << name;
        EXPECT_TRUE(unipotent_certificate(block)) << name;
      }
    }
  }
}

TEST(Relations, Catalog) {
  for (const auto& [name, s] : catalog()) {
    const Report r = verify_relations(s, 64);
    EXPECT_TRUE(r.overall()) << name;
  }
}

TEST(Enumerate, DihedralCounts) {
  for (int m = 2; m <= 6; ++m) {
    const auto t = enumerate_elements(dihedral(std::to_string(m)), 50, kDefaultElementCap);
    EXPECT_EQ(t.records.size(), static_cast<std::size_t>(2 * m)) << m;
    EXPECT_EQ(t.stop, StopReason::Closed);
  }
  const auto d3 = enumerate_elements(dihedral("3"), 10, kDefaultElementCap);
  EXPECT_EQ(d3.counts_by_length(), (std::vector<std::size_t>{1, 2, 2, 1}));
  const auto dinf = enumerate_elements(dihedral("inf"), 6, kDefaultElementCap);
  EXPECT_EQ(dinf.counts_by_length(), (std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(dinf.stop, StopReason::MaxLength);
}

TEST(Enumerate, FiniteTypeCounts) {
  EXPECT_EQ(enumerate_elements(sys("rank 3\nm 1 2 3\nm 2 3 3"), 100, kDefaultElementCap).records.size(), 24U);
  EXPECT_EQ(enumerate_elements(sys("rank 3\nm 1 2 4\nm 2 3 3"), 100, kDefaultElementCap).records.size(), 48U);
  const auto h3 = enumerate_elements(sys("rank 3\nm 1 2 5\nm 2 3 3"), 100, kDefaultElementCap);
  EXPECT_EQ(h3.records.size(), 120U);
  EXPECT_EQ(h3.stop, StopReason::Closed);
  EXPECT_EQ(h3.records.back().length(), 15U);
}

TEST(Enumerate, RightAngledMatchesWordOracle) {
  const auto gens = integer_reflections(IntMatrix{{2, -2, 0}, {-2, 2, -2}, {0, -2, 2}});
  EXPECT_EQ(enumerate_elements(right_angled(), 2, kDefaultElementCap).records.size(), 9U);
  for (std::size_t len = 0; len <= 6; ++len) {
    EXPECT_EQ(enumerate_elements(right_angled(), len, kDefaultElementCap).records.size(), brute_force_count(gens, len))
        << "length " << len;
  }
}

TEST(Enumerate, TableShape) {
  const auto t = enumerate_elements(right_angled(), 5, kDefaultElementCap);
  ASSERT_FALSE(t.records.empty());
  EXPECT_TRUE(t.records[0].word.empty());
  EXPECT_TRUE(t.records[0].matrix.is_identity());
  const auto gens = generator_matrices(build_tits_form(right_angled()));
  std::unordered_set<std::string> seen;
  for (std::size_t k = 0; k < t.records.size(); ++k) {
    const auto& r = t.records[k];
    if (k > 0) {
      const auto& prev = t.records[k - 1];
      EXPECT_TRUE(prev.length() < r.length() || (prev.length() == r.length() && prev.word < r.word));
    }
    FieldMatrix product = FieldMatrix::identity(3);
    for (auto g : r.word) product = product * gens[g].entries;
    EXPECT_EQ(product, r.matrix);
    std::ostringstream os;
    os << r.matrix;
    EXPECT_TRUE(seen.insert(os.str()).second);
  }
  const auto only_id = enumerate_elements(right_angled(), 0, kDefaultElementCap);
  EXPECT_EQ(only_id.records.size(), 1U);
  const auto capped = enumerate_elements(right_angled(), 10, 7);
  EXPECT_EQ(capped.records.size(), 7U);
  EXPECT_TRUE(capped.cap_exceeded());
}

TEST(Enumerate, PreservesFormAndDeterminant) {
  for (const auto& [name, s] : catalog()) {
    const auto b = build_tits_form(s);
    for (const auto& g : generator_matrices(b)) EXPECT_EQ(determinant(g.entries), FieldElement(-1)) << name;
    const auto t = enumerate_elements(s, 6, kDefaultElementCap);
    for (const auto& r : t.records) {
      EXPECT_TRUE(preserves_form(r.matrix, b)) << name;
      const FieldElement d = determinant(r.matrix);
      EXPECT_EQ(d, FieldElement(r.length() % 2 ? -1 : 1)) << name;
    }
  }
}

TEST(Enumerate, CountsMonotoneAndWorkerIndependent) {
  const auto s = right_angled();
  const auto short_counts = enumerate_elements(s, 5, kDefaultElementCap).counts_by_length();
  const auto long_counts = enumerate_elements(s, 7, kDefaultElementCap).counts_by_length();
  ASSERT_LE(short_counts.size(), long_counts.size());
  for (std::size_t k = 0; k < short_counts.size(); ++k) EXPECT_EQ(short_counts[k], long_counts[k]);

  for (const auto& [name, sys] : catalog()) {
    const auto one = enumerate_elements(sys, 7, kDefaultElementCap, 1);
    const auto four = enumerate_elements(sys, 7, kDefaultElementCap, 4);
    ASSERT_EQ(one.records.size(), four.records.size()) << name;
    for (std::size_t k = 0; k < one.records.size(); ++k) {
      EXPECT_EQ(one.records[k].word, four.records[k].word);
      EXPECT_EQ(one.records[k].matrix, four.records[k].matrix);
    }
  }
}

TEST(Disjointness, RightAngledAndFiniteCatalog) {
  EXPECT_TRUE(tits_disjointness_check(right_angled(), 8).overall());
  EXPECT_TRUE(tits_disjointness_check(dihedral("3"), 10).overall());
  for (const auto& [name, s] : catalog()) {
    if (classify(s) != Classification::PositiveDefinite) continue;
    EXPECT_TRUE(tits_disjointness_check(s, 100).overall()) << name;
  }
}

TEST(Disjointness, DetectsAMembershipByHand) {
  // The identity's image of v0 is v0 itself.
  const auto b = build_tits_form(right_angled());
  const Vector v0 = canonical_chamber_point(b);
  EXPECT_TRUE(chamber_contains(b, FieldMatrix::identity(3) * v0));
  EXPECT_FALSE(chamber_contains(b, reflection_matrix(b, 0).entries * v0));
}
