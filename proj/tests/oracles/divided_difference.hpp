#pragma once

// Grothendieck polynomials from the top one x_1^(n-1) x_2^(n-2) ... by the
// operators f -> d_i((1 + b x_{i+1}) f), with d_i the divided difference.
// Terms are keyed by (x exponents, power of b).

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Term = std::pair<std::vector<int>, int>;
using Poly = std::map<Term, std::int64_t>;

inline void add(Poly& p, const Term& t, std::int64_t c) {
  if (c == 0) return;
  auto& slot = p[t];
  slot += c;
  if (slot == 0) p.erase(t);
}

// d_i on one monomial (0-based i acts on variables i, i+1)
inline void divided_difference_term(Poly& out, const Term& t, std::int64_t c, int i) {
  const int a = t.first[static_cast<std::size_t>(i)];
  const int b = t.first[static_cast<std::size_t>(i + 1)];
  if (a == b) return;
  const int hi = a > b ? a : b;
  const int lo = a > b ? b : a;
  const std::int64_t sign = a > b ? 1 : -1;
  for (int k = 0; k < hi - lo; ++k) {
    Term u = t;
    u.first[static_cast<std::size_t>(i)] = hi - 1 - k;
    u.first[static_cast<std::size_t>(i + 1)] = lo + k;
    add(out, u, sign * c);
  }
}

inline Poly pi(const Poly& f, int i) {
  Poly g = f;
  for (const auto& [t, c] : f) {
    Term u = t;
    ++u.first[static_cast<std::size_t>(i + 1)];
    ++u.second;
    add(g, u, c);
  }
  Poly out;
  for (const auto& [t, c] : g) divided_difference_term(out, t, c, i);
  return out;
}

class Grothendieck {
 public:
  explicit Grothendieck(int n) : n_(n) {}

  // w as a 1-based word of length n
  const Poly& of(const std::vector<int>& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    Poly result;
    int ascent = -1;
    for (int i = 0; i + 1 < n_; ++i) {
      if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i + 1)]) {
        ascent = i;
        break;
      }
    }
    if (ascent < 0) {
      Term top{std::vector<int>(static_cast<std::size_t>(n_), 0), 0};
      for (int i = 0; i < n_; ++i) top.first[static_cast<std::size_t>(i)] = n_ - 1 - i;
      result[top] = 1;
    } else {
      auto longer = w;
      std::swap(longer[static_cast<std::size_t>(ascent)], longer[static_cast<std::size_t>(ascent + 1)]);
      result = pi(of(longer), ascent);
    }
    return memo_.emplace(w, std::move(result)).first->second;
  }

  // coefficients of the polynomial in b obtained at x_i = 1
  std::vector<std::int64_t> at_ones(const std::vector<int>& w) {
    std::vector<std::int64_t> out;
    for (const auto& [t, c] : of(w)) {
      if (out.size() <= static_cast<std::size_t>(t.second)) out.resize(static_cast<std::size_t>(t.second) + 1, 0);
      out[static_cast<std::size_t>(t.second)] += c;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }

 private:
  int n_;
  std::map<std::vector<int>, Poly> memo_;
};

}  // namespace oracle
