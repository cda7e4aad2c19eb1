#pragma once

// Counts n x n matrices over {-1, 0, 1} whose rows and columns have
// alternating signs and sum to 1, by trying all 3^(n*n) fillings.

#include <cstdint>
#include <vector>

namespace oracle {

inline bool alternating(const std::vector<int>& m, int n, int line, bool row) {
  int partial = 0;
  for (int k = 0; k < n; ++k) {
    partial += row ? m[static_cast<std::size_t>(line * n + k)] : m[static_cast<std::size_t>(k * n + line)];
    if (partial < 0 || partial > 1) return false;
  }
  return partial == 1;
}

inline std::uint64_t brute_force_asm_count(int n) {
  const int cells = n * n;
  std::vector<int> m(static_cast<std::size_t>(cells), -1);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) ok = alternating(m, n, k, true) && alternating(m, n, k, false);
    count += ok;
    int pos = 0;
    while (pos < cells && m[static_cast<std::size_t>(pos)] == 1) m[static_cast<std::size_t>(pos++)] = -1;
    if (pos == cells) break;
    ++m[static_cast<std::size_t>(pos)];
  }
  return count;
}

}  // namespace oracle
