#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxeter/field.hpp"
#include "coxeter/order.hpp"
#include "coxeter/rational.hpp"

namespace coxeter {

using OrderTable = std::vector<std::vector<Order>>;

struct Violation {
  std::size_t row;
  std::size_t col;
  std::string reason;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Lists every violated Coxeter-matrix rule. Indices are 0-based.
inline ValidationReport validate(const OrderTable& orders) {
  ValidationReport report;
  const std::size_t n = orders.size();
  for (const auto& row : orders) {
    if (row.size() != n) throw std::invalid_argument("order matrix must be square");
  }
  auto below_two = [](const Order& m) { return m.is_finite() && m.value() < 2; };
  for (std::size_t i = 0; i < n; ++i) {
    if (orders[i][i] != Order(1)) report.violations.push_back({i, i, "diagonal entry must be 1"});
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool symmetric = orders[i][j] == orders[j][i];
      if (!symmetric) report.violations.push_back({i, j, "matrix is not symmetric"});
      if (below_two(orders[i][j])) report.violations.push_back({i, j, "off-diagonal order must be at least 2"});
      if (!symmetric && below_two(orders[j][i])) {
        report.violations.push_back({j, i, "off-diagonal order must be at least 2"});
      }
    }
  }
  return report;
}

class InvalidSystem : public Error {
 public:
  explicit InvalidSystem(ValidationReport report)
      : Error(describe(report)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  static std::string describe(const ValidationReport& r) {
    std::string s = "invalid Coxeter matrix";
    for (const auto& v : r.violations) {
      s += "; (" + std::to_string(v.row + 1) + "," + std::to_string(v.col + 1) + "): " + v.reason;
    }
    return s;
  }
  ValidationReport report_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A finitely generated Coxeter system given by its symmetric order matrix.
/// Generators are 0-indexed here; user-facing text is 1-indexed.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(OrderTable orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("rank must be positive");
    if (auto report = validate(orders_); !report.ok()) throw InvalidSystem(std::move(report));
  }

  /// Rank-n system with every pair commuting except those listed.
  static CoxeterSystem with_orders(std::size_t rank, const std::map<std::pair<std::size_t, std::size_t>, Order>& pairs) {
    OrderTable t(rank, std::vector<Order>(rank, Order(2)));
    for (std::size_t i = 0; i < rank; ++i) t[i][i] = Order(1);
    for (const auto& [ij, m] : pairs) {
      t[ij.first][ij.second] = m;
      t[ij.second][ij.first] = m;
    }
    return CoxeterSystem(std::move(t));
  }

  std::size_t rank() const { return orders_.size(); }
  const Order& order(std::size_t i, std::size_t j) const { return orders_.at(i).at(j); }
  const OrderTable& orders() const { return orders_; }

  /// Level of the real cyclotomic field holding every Tits-form entry.
  unsigned field_level() const {
    std::vector<Order> all;
    for (const auto& row : orders_) all.insert(all.end(), row.begin(), row.end());
    return RealCyclotomicField::level_for(all);
  }

  bool is_finite_pair(std::size_t i, std::size_t j) const { return orders_[i][j].is_finite(); }

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  OrderTable orders_;
};

/// True iff the Coxeter graph (edges where m_ij >= 3 or infinite) is connected.
inline bool is_irreducible(const CoxeterSystem& system) {
  const std::size_t n = system.rank();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      const Order& m = system.order(i, j);
      const bool edge = i != j && (m.is_infinite() || m.value() >= 3);
      if (edge && !seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == n;
}

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

inline std::uint32_t parse_count(const Token& t, std::size_t line, const char* what) {
  std::uint32_t value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, t.column, std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses the line-oriented system format:
///
///     # comment
///     rank 3
///     m 1 2 inf
///     m 2 3 inf
///
/// Pairs not mentioned default to order 2.
inline CoxeterSystem parse_coxeter_spec(std::string_view text) {
  std::optional<std::size_t> rank;
  std::map<std::pair<std::size_t, std::size_t>, Order> pairs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = eol + 1;
    ++line_no;
    const auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    const detail::Token& keyword = tokens[0];
    if (keyword.text == "rank") {
      if (rank) throw ParseError(line_no, keyword.column, "duplicate rank header");
      if (!pairs.empty()) throw ParseError(line_no, keyword.column, "rank header must come first");
      if (tokens.size() != 2) throw ParseError(line_no, keyword.column, "expected 'rank <n>'");
      const std::uint32_t n = detail::parse_count(tokens[1], line_no, "a positive rank");
      if (n == 0) throw ParseError(line_no, tokens[1].column, "rank must be positive");
      rank = n;
    } else if (keyword.text == "m") {
      if (!rank) throw ParseError(line_no, keyword.column, "missing 'rank <n>' header");
      if (tokens.size() != 4) throw ParseError(line_no, keyword.column, "expected 'm <i> <j> <order>'");
      const std::uint32_t i = detail::parse_count(tokens[1], line_no, "a generator index");
      const std::uint32_t j = detail::parse_count(tokens[2], line_no, "a generator index");
      for (const auto& [idx, tok] : {std::pair{i, tokens[1]}, std::pair{j, tokens[2]}}) {
        if (idx < 1 || idx > *rank) {
          throw ParseError(line_no, tok.column,
                           "generator index " + std::to_string(idx) + " outside 1.." + std::to_string(*rank));
        }
      }
      if (i == j) throw ParseError(line_no, tokens[2].column, "diagonal orders are fixed at 1");
      Order m;
      if (tokens[3].text != "inf") {
        const std::uint32_t value = detail::parse_count(tokens[3], line_no, "an order or 'inf'");
        if (value < 2) throw ParseError(line_no, tokens[3].column, "order must be at least 2");
        m = Order(value);
      }
      const std::pair<std::size_t, std::size_t> key{std::min(i, j) - 1, std::max(i, j) - 1};
      if (auto it = pairs.find(key); it != pairs.end() && it->second != m) {
        throw ParseError(line_no, keyword.column,
                         "conflicting orders for pair (" + std::to_string(key.first + 1) + "," +
                             std::to_string(key.second + 1) + ")");
      }
      pairs[key] = m;
    } else {
      throw ParseError(line_no, keyword.column, "unknown directive '" + std::string(keyword.text) + "'");
    }
  }
  if (!rank) throw ParseError(line_no, 1, "missing 'rank <n>' header");
  return CoxeterSystem::with_orders(*rank, pairs);
}

/// Inverse of parse_coxeter_spec; pairs of order 2 are omitted.
inline std::string serialize(const CoxeterSystem& system) {
  std::ostringstream os;
  os << "rank " << system.rank() << "\n";
  for (std::size_t i = 0; i < system.rank(); ++i) {
    for (std::size_t j = i + 1; j < system.rank(); ++j) {
      if (system.order(i, j) != Order(2)) os << "m " << i + 1 << " " << j + 1 << " " << system.order(i, j).to_string() << "\n";
    }
  }
  return os.str();
}

}  // namespace coxeter
