#pragma once

// Pattern occurrence counts by recursive choice of positions, comparing each
// new letter against every earlier chosen letter.

#include <cstdint>
#include <vector>

namespace oracle {

inline std::uint64_t count_occurrences(const std::vector<int>& u, const std::vector<int>& w, std::size_t next_u = 0,
                                       std::size_t from = 0, std::vector<int> chosen = {}) {
  if (next_u == u.size()) return 1;
  std::uint64_t total = 0;
  for (std::size_t pos = from; pos < w.size(); ++pos) {
    bool ok = true;
    for (std::size_t k = 0; k < chosen.size() && ok; ++k) {
      ok = (chosen[k] < w[pos]) == (u[k] < u[next_u]);
    }
    if (!ok) continue;
    chosen.push_back(w[pos]);
    total += count_occurrences(u, w, next_u + 1, pos + 1, chosen);
    chosen.pop_back();
  }
  return total;
}

inline int inversions(const std::vector<int>& w) {
  int k = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) k += w[i] > w[j];
  }
  return k;
}

}  // namespace oracle
