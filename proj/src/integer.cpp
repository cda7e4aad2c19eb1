#include "pipedream/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace pipedream {

Integer::Integer(const Big& value) : rep_(value) { normalize(); }

Integer Integer::from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal: " + text);
  }
  return Integer(Big(text[0] == '+' ? text.substr(1) : text));
}

std::optional<std::int64_t> Integer::to_int64() const {
  if (const auto* s = std::get_if<std::int64_t>(&rep_)) return *s;
  return std::nullopt;
}

Integer::Big Integer::to_big() const {
  if (const auto* s = std::get_if<std::int64_t>(&rep_)) return Big(*s);
  return std::get<Big>(rep_);
}

int Integer::sign() const {
  if (const auto* s = std::get_if<std::int64_t>(&rep_)) return (*s > 0) - (*s < 0);
  return std::get<Big>(rep_).sign();
}

void Integer::normalize() {
  if (auto* b = std::get_if<Big>(&rep_)) {
    if (*b >= std::numeric_limits<std::int64_t>::min() && *b <= std::numeric_limits<std::int64_t>::max()) {
      rep_ = static_cast<std::int64_t>(*b);
    }
  }
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (is_small() && rhs.is_small()) {
    std::int64_t out;
    if (!__builtin_add_overflow(std::get<std::int64_t>(rep_), std::get<std::int64_t>(rhs.rep_), &out)) {
      rep_ = out;
      return *this;
    }
  }
  rep_ = to_big() + rhs.to_big();
  normalize();
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (is_small() && rhs.is_small()) {
    std::int64_t out;
    if (!__builtin_sub_overflow(std::get<std::int64_t>(rep_), std::get<std::int64_t>(rhs.rep_), &out)) {
      rep_ = out;
      return *this;
    }
  }
  rep_ = to_big() - rhs.to_big();
  normalize();
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (is_small() && rhs.is_small()) {
    std::int64_t out;
    if (!__builtin_mul_overflow(std::get<std::int64_t>(rep_), std::get<std::int64_t>(rhs.rep_), &out)) {
      rep_ = out;
      return *this;
    }
  }
  rep_ = to_big() * rhs.to_big();
  normalize();
  return *this;
}

Integer Integer::operator-() const { return Integer(0) - *this; }

bool operator==(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return std::get<std::int64_t>(a.rep_) == std::get<std::int64_t>(b.rep_);
  // normalized representations never mix a small value with a Big
  if (a.is_small() != b.is_small()) return false;
  return std::get<Integer::Big>(a.rep_) == std::get<Integer::Big>(b.rep_);
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return std::get<std::int64_t>(a.rep_) <=> std::get<std::int64_t>(b.rep_);
  const auto lhs = a.to_big();
  const auto rhs = b.to_big();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Integer::to_string() const {
  if (const auto* s = std::get_if<std::int64_t>(&rep_)) return std::to_string(*s);
  return std::get<Big>(rep_).str();
}

Integer Integer::pow(const Integer& base, unsigned exponent) {
  Integer result(1);
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Integer& value) { return os << value.to_string(); }

}  // namespace pipedream
