#pragma once

// Exact signed integer: a checked 64-bit fast path that escalates to
// boost::multiprecision::cpp_int when an operation would overflow.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace pipedream {

class Integer {
 public:
  using Big = boost::multiprecision::cpp_int;

  Integer() = default;
  Integer(std::int64_t value) : rep_(value) {}  // NOLINT(google-explicit-constructor)
  Integer(int value) : rep_(static_cast<std::int64_t>(value)) {}  // NOLINT
  explicit Integer(const Big& value);

  /// Parses an optionally signed decimal string.
  static Integer from_string(const std::string& text);

  bool is_small() const { return std::holds_alternative<std::int64_t>(rep_); }
  std::optional<std::int64_t> to_int64() const;
  Big to_big() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);
  Integer operator-() const;

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  std::string to_string() const;

  static Integer pow(const Integer& base, unsigned exponent);

 private:
  void normalize();

  std::variant<std::int64_t, Big> rep_{std::int64_t{0}};
};

std::ostream& operator<<(std::ostream& os, const Integer& value);

}  // namespace pipedream
