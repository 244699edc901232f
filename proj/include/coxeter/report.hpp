#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "coxeter/field.hpp"

namespace coxeter {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Named exact quantity recorded as evidence for a check.
struct Witness {
  std::string label;
  FieldElement value;
};

/// Outcome of a verification procedure. A report passes iff every check does.
struct Report {
  std::string title;
  std::vector<Check> checks;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;

  bool overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  Check& add(std::string name, std::string expected, std::string computed, bool pass) {
    checks.push_back({std::move(name), std::move(expected), std::move(computed), pass});
    return checks.back();
  }

  /// Adds a check that passes when the two renderings agree.
  template <typename A, typename B>
  Check& expect_equal(std::string name, const A& expected, const B& computed, bool pass) {
    return add(std::move(name), stringify(expected), stringify(computed), pass);
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
  }

 private:
  template <typename V>
  static std::string stringify(const V& v) {
    if constexpr (std::is_convertible_v<V, std::string>) {
      return std::string(v);
    } else {
      std::ostringstream os;
      os << v;
      return os.str();
    }
  }
};

using VerificationReport = Report;

}  // namespace coxeter
