#pragma once

// The geometric representation s_i -> sigma_i, sigma_i(x) = x - 2B(e_i,x)e_i,
// and bounded breadth-first enumeration of its image.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxeter/field.hpp"
#include "coxeter/linalg.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/report.hpp"
#include "coxeter/system.hpp"
#include "coxeter/tits_form.hpp"

namespace coxeter {

/// Sequence of 0-based generator indices.
using Word = std::vector<std::size_t>;

struct RepMatrix {
  FieldMatrix entries;
  std::optional<Word> word;

  friend bool operator==(const RepMatrix& a, const RepMatrix& b) { return a.entries == b.entries; }
};

inline std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (auto g : w) s += "s" + std::to_string(g + 1);
  return s;
}

/// Matrix of sigma_i in the basis e_1..e_n: column j is e_j - 2B(e_j,e_i)e_i.
inline RepMatrix reflection_matrix(const FormMatrix& form, std::size_t i) {
  const std::size_t n = form.size();
  if (i >= n) throw std::out_of_range("generator index out of range");
  FieldMatrix m = FieldMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j) - FieldElement(2) * form(j, i);
  return {std::move(m), Word{i}};
}

inline RepMatrix reflection_matrix(const CoxeterSystem& system, std::size_t i) {
  return reflection_matrix(build_tits_form(system), i);
}

inline std::vector<RepMatrix> generator_matrices(const FormMatrix& form) {
  std::vector<RepMatrix> gens;
  for (std::size_t i = 0; i < form.size(); ++i) gens.push_back(reflection_matrix(form, i));
  return gens;
}

inline FieldMatrix to_field(const IntMatrix& p) {
  return p.map([](long long x) { return FieldElement(static_cast<long>(x)); });
}

/// Conjugates into the basis given by the columns of `p`: P^-1 M P.
inline RepMatrix change_basis(const RepMatrix& m, const IntMatrix& p) {
  const FieldMatrix pf = to_field(p);
  return {inverse(pf) * m.entries * pf, m.word};
}

/// Gram matrix in the basis given by the columns of `p`: P^T B P.
inline FormMatrix change_basis(const FormMatrix& form, const IntMatrix& p) {
  const FieldMatrix pf = to_field(p);
  if (determinant(pf).is_zero()) throw SingularMatrix();
  return {form.field, pf.transpose() * form.entries * pf};
}

inline bool preserves_form(const FieldMatrix& g, const FormMatrix& form) {
  return g.transpose() * form.entries * g == form.entries;
}

inline bool preserves_form(const RepMatrix& g, const FormMatrix& form) { return preserves_form(g.entries, form); }

struct OrderResult {
  enum class Kind { Finite, InfiniteCertified, Unknown };
  Kind kind = Kind::Unknown;
  std::uint32_t order = 0;  // meaningful for Finite

  static OrderResult finite(std::uint32_t k) { return {Kind::Finite, k}; }
  static OrderResult infinite() { return {Kind::InfiniteCertified, 0}; }
  static OrderResult unknown() { return {Kind::Unknown, 0}; }

  friend bool operator==(const OrderResult&, const OrderResult&) = default;
  friend std::ostream& operator<<(std::ostream& os, const OrderResult& r) {
    switch (r.kind) {
      case Kind::Finite: return os << "Finite(" << r.order << ")";
      case Kind::InfiniteCertified: return os << "InfiniteCertified";
      case Kind::Unknown: return os << "Unknown";
    }
    return os;
  }
};

/// Restriction of a matrix preserving span(e_i, e_j) to that span.
inline FieldMatrix pair_block(const FieldMatrix& m, std::size_t i, std::size_t j) {
  return FieldMatrix{{m(i, i), m(i, j)}, {m(j, i), m(j, j)}};
}

/// True when the block is unipotent (char poly (x-1)^2) and not the identity,
/// which certifies infinite order.
inline bool unipotent_certificate(const FieldMatrix& block) {
  return trace(block) == FieldElement(2) && determinant(block) == FieldElement(1) && !block.is_identity();
}

/// Order of sigma_i sigma_j. Finite orders are found by powering up to `cap`;
/// pairs with Tits entry -1 are certified infinite by unipotency on span(e_i, e_j).
inline OrderResult order_of_product(const FormMatrix& form, std::size_t i, std::size_t j, std::uint32_t cap) {
  if (i == j) throw std::invalid_argument("order_of_product requires distinct generators");
  const FieldMatrix prod = reflection_matrix(form, i).entries * reflection_matrix(form, j).entries;
  if (form(i, j) == FieldElement(-1) && unipotent_certificate(pair_block(prod, i, j))) return OrderResult::infinite();
  FieldMatrix acc = prod;
  for (std::uint32_t k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return OrderResult::finite(k);
    acc = acc * prod;
  }
  return OrderResult::unknown();
}

inline OrderResult order_of_product(const CoxeterSystem& system, std::size_t i, std::size_t j, std::uint32_t cap) {
  return order_of_product(build_tits_form(system), i, j, cap);
}

/// Checks sigma_i^2 = 1, the order of every sigma_i sigma_j, and form preservation.
inline Report verify_relations(const CoxeterSystem& system, std::uint32_t inf_probe_cap) {
  const FormMatrix form = build_tits_form(system);
  const auto gens = generator_matrices(form);
  const std::size_t n = system.rank();
  Report report;
  report.title = "relations of the geometric representation";
  for (std::size_t i = 0; i < n; ++i) {
    const std::string s = "s" + std::to_string(i + 1);
    const bool involution = (gens[i].entries * gens[i].entries).is_identity();
    report.add(s + "^2 = 1", "true", involution ? "true" : "false", involution);
    const bool preserves = preserves_form(gens[i], form);
    report.add(s + " preserves B", "true", preserves ? "true" : "false", preserves);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Order& m = system.order(i, j);
      const std::uint32_t cap = m.is_finite() ? std::max(m.value(), inf_probe_cap) : inf_probe_cap;
      const OrderResult r = order_of_product(form, i, j, cap);
      const OrderResult expected = m.is_finite() ? OrderResult::finite(m.value()) : OrderResult::infinite();
      report.expect_equal("order of s" + std::to_string(i + 1) + "s" + std::to_string(j + 1), expected, r,
                          r == expected);
    }
  }
  return report;
}

struct ElementRecord {
  Word word;
  FieldMatrix matrix;
  std::size_t length() const { return word.size(); }
};

enum class StopReason { Closed, MaxLength, Cap };

inline const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::Closed: return "closed";
    case StopReason::MaxLength: return "max-length";
    case StopReason::Cap: return "cap";
  }
  return "?";
}

/// Distinct group elements in (length, lexicographic word) order, each with
/// its lexicographically least shortest word.
struct ElementTable {
  std::vector<ElementRecord> records;
  StopReason stop = StopReason::MaxLength;

  bool cap_exceeded() const { return stop == StopReason::Cap; }

  std::vector<std::size_t> counts_by_length() const {
    std::vector<std::size_t> counts;
    for (const auto& r : records) {
      if (counts.size() <= r.length()) counts.resize(r.length() + 1, 0);
      ++counts[r.length()];
    }
    return counts;
  }
};

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// Breadth-first search over right multiplication by the generators,
/// deduplicating by exact matrix equality.
///
/// Each frontier level is expanded by up to `workers` threads; candidates
/// are merged in (parent, generator) order so the table is independent of
/// the worker count.
inline ElementTable enumerate_elements(const CoxeterSystem& system, std::size_t max_length, std::size_t cap,
                                       unsigned workers = 1) {
  const FormMatrix form = build_tits_form(system);
  const auto gens = generator_matrices(form);
  const std::size_t n = system.rank();
  workers = std::max(1U, workers);

  ElementTable table;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  const MatrixHash<FieldElement> hasher;

  auto insert = [&](Word word, FieldMatrix m, std::size_t h) {
    auto& bucket = buckets[h];
    for (auto idx : bucket) {
      if (table.records[idx].matrix == m) return false;
    }
    bucket.push_back(table.records.size());
    table.records.push_back({std::move(word), std::move(m)});
    return true;
  };

  if (cap == 0) {
    table.stop = StopReason::Cap;
    return table;
  }
  {
    FieldMatrix id = FieldMatrix::identity(n);
    const std::size_t h = hasher(id);
    insert({}, std::move(id), h);
  }

  struct Candidate {
    FieldMatrix matrix;
    std::size_t hash = 0;
  };

  std::size_t level_begin = 0;
  for (std::size_t len = 0;; ++len) {
    const std::size_t level_end = table.records.size();
    if (level_begin == level_end) {
      table.stop = StopReason::Closed;
      return table;
    }
    if (len == max_length) {
      table.stop = StopReason::MaxLength;
      return table;
    }
    const std::size_t frontier = level_end - level_begin;
    std::vector<Candidate> candidates(frontier * n);
    auto expand = [&](std::size_t from, std::size_t to) {
      for (std::size_t k = from; k < to; ++k) {
        const FieldMatrix& parent = table.records[level_begin + k].matrix;
        for (std::size_t g = 0; g < n; ++g) {
          FieldMatrix prod = parent * gens[g].entries;
          const std::size_t h = hasher(prod);
          candidates[k * n + g] = {std::move(prod), h};
        }
      }
    };
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, frontier));
    if (used <= 1) {
      expand(0, frontier);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier + used - 1) / used;
      for (unsigned w = 0; w < used; ++w) {
        const std::size_t from = w * chunk;
        const std::size_t to = std::min(frontier, from + chunk);
        if (from < to) pool.emplace_back(expand, from, to);
      }
      for (auto& t : pool) t.join();
    }
    for (std::size_t k = 0; k < frontier; ++k) {
      for (std::size_t g = 0; g < n; ++g) {
        Candidate& c = candidates[k * n + g];
        Word w = table.records[level_begin + k].word;
        w.push_back(g);
        if (insert(std::move(w), std::move(c.matrix), c.hash) && table.records.size() >= cap) {
          // Cap reached; whether more elements exist at this level is unknown.
          table.stop = StopReason::Cap;
          return table;
        }
      }
    }
    level_begin = level_end;
  }
}

/// For v0 the canonical chamber point, w v0 lies in C only for w = 1.
/// Elements with equal chambers coincide, so one point decides wC = C.
inline Report tits_disjointness_check(const CoxeterSystem& system, std::size_t max_length,
                                      std::size_t cap = kDefaultElementCap, unsigned workers = 1) {
  const FormMatrix form = build_tits_form(system);
  const Vector v0 = canonical_chamber_point(form);
  const ElementTable table = enumerate_elements(system, max_length, cap, workers);
  Report report;
  report.title = "chamber disjointness";
  std::size_t violations = 0;
  std::string first_violation;
  for (const auto& rec : table.records) {
    const bool inside = chamber_contains(form, rec.matrix * v0);
    if (rec.word.empty()) {
      report.add("identity fixes the chamber", "true", inside ? "true" : "false", inside);
    } else if (inside) {
      if (violations++ == 0) first_violation = render_word(rec.word);
    }
  }
  const std::size_t non_identity = table.records.empty() ? 0 : table.records.size() - 1;
  report.add("w C meets C only for w = 1 (" + std::to_string(non_identity) + " elements, stop: " +
                 to_string(table.stop) + ")",
             "0 violations",
             violations == 0 ? "0 violations" : std::to_string(violations) + " violations, first " + first_violation,
             violations == 0);
  report.notes.push_back("bounded-length check; discreteness of the image is not decided");
  return report;
}

}  // namespace coxeter
