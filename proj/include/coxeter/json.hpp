#pragma once

// JSON renderings. Field elements are {"level": L, "coeffs": ["p/q", ...]}
// with coefficients in ascending powers of 2cos(pi/L); infinite orders are
// the string "inf".

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxeter/field.hpp"
#include "coxeter/geom_rep.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/report.hpp"
#include "coxeter/system.hpp"
#include "coxeter/tits_form.hpp"

namespace coxeter::json {

using Json = nlohmann::ordered_json;

/// Exact rendering, plus a decimal string when `precision` is given.
inline Json element(const FieldElement& x, unsigned level, std::optional<int> precision = std::nullopt) {
  Json coeffs = Json::array();
  const FieldPtr field = field_for_level(level);
  for (std::size_t k = 0; k < field->degree(); ++k) {
    coeffs.push_back(to_string(k < x.coefficients().size() ? x.coefficients()[k] : Rational(0)));
  }
  Json j{{"level", level}, {"coeffs", std::move(coeffs)}};
  if (precision) j["decimal"] = x.to_decimal(*precision);
  return j;
}

inline FieldElement parse_element(const Json& j) {
  const unsigned level = j.at("level").get<unsigned>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  const FieldPtr field = field_for_level(level);
  if (coeffs.size() != field->degree()) throw Error("coefficient count does not match field degree");
  return FieldElement(field, std::move(coeffs));
}

inline Json matrix(const FieldMatrix& m, unsigned level, std::optional<int> precision = std::nullopt) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element(m(i, j), level, precision));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json vector(const Vector& v, unsigned level, std::optional<int> precision = std::nullopt) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(element(x, level, precision));
  return out;
}

inline Json polynomial(const Polynomial<FieldElement>& p, unsigned level, std::optional<int> precision = std::nullopt) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(element(c, level, precision));
  return out;
}

inline Json order(const Order& m) { return m.is_infinite() ? Json("inf") : Json(m.value()); }

inline Json system(const CoxeterSystem& s) {
  Json orders = Json::array();
  for (const auto& row : s.orders()) {
    Json r = Json::array();
    for (const auto& m : row) r.push_back(order(m));
    orders.push_back(std::move(r));
  }
  return Json{{"rank", s.rank()}, {"orders", std::move(orders)}};
}

inline CoxeterSystem parse_system(const Json& j) {
  OrderTable table;
  for (const auto& row : j.at("orders")) {
    std::vector<Order> r;
    for (const auto& m : row) {
      if (m.is_string()) {
        if (m.get<std::string>() != "inf") throw Error("order must be an integer or \"inf\"");
        r.push_back(Order::infinity());
      } else {
        r.push_back(Order(m.get<std::uint32_t>()));
      }
    }
    table.push_back(std::move(r));
  }
  return CoxeterSystem(std::move(table));
}

inline Json signature(const Signature& s) { return Json{{"p", s.p}, {"q", s.q}, {"z", s.z}}; }

inline Json word(const Word& w) {
  Json out = Json::array();
  for (auto g : w) out.push_back(g + 1);
  return out;
}

/// One JSON-lines record of an element table.
inline Json element_record(const ElementRecord& r, unsigned level, std::optional<int> precision = std::nullopt) {
  return Json{{"len", r.length()}, {"word", word(r.word)}, {"matrix", matrix(r.matrix, level, precision)}};
}

inline Json report(const Report& r, unsigned level, std::optional<int> precision = std::nullopt) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  }
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(Json{{"label", w.label}, {"value", element(w.value, level, precision)}});
  }
  Json out{{"title", r.title}, {"overall", r.overall()}, {"checks", std::move(checks)}};
  if (!r.witnesses.empty()) out["witnesses"] = std::move(witnesses);
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

}  // namespace coxeter::json
