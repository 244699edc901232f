#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace coxeter {

/// Order of a product s_i s_j: a positive integer or infinity.
class Order {
 public:
  constexpr Order() = default;  // infinity
  constexpr explicit Order(std::uint32_t m) : value_(m) {}

  static constexpr Order infinity() { return Order{}; }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  constexpr std::uint32_t value() const { return *value_; }

  friend constexpr bool operator==(const Order&, const Order&) = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

 private:
  std::optional<std::uint32_t> value_;
};

}  // namespace coxeter
