#include "pipedream/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

namespace pipedream {

Permutation Permutation::parse(std::span<const int> word) {
  const auto n = static_cast<int>(word.size());
  std::vector<bool> seen(word.size() + 1, false);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw NotAPermutation("entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) throw NotAPermutation("repeated entry " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::vector<int>(word.begin(), word.end()));
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty() || text == "e" || text == "∅") return {};
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = std::min(text.find(',', start), text.size());
      const auto token = text.substr(start, end - start);
      if (token.empty()) throw NotAPermutation("empty entry in '" + std::string(text) + "'");
      int value = 0;
      for (char ch : token) {
        if (ch < '0' || ch > '9') throw NotAPermutation("non-digit in '" + std::string(text) + "'");
        value = value * 10 + (ch - '0');
        if (value > 1000000) throw NotAPermutation("entry too large in '" + std::string(text) + "'");
      }
      word.push_back(value);
      start = end + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw NotAPermutation("non-digit in '" + std::string(text) + "'");
      word.push_back(ch - '0');
    }
  }
  return parse(word);
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t Permutation::rank() const {
  const int n = size();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += word_[static_cast<std::size_t>(j)] < word_[static_cast<std::size_t>(i)];
    r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return r;
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> word;
  word.reserve(pool.size());
  for (int i = 0; i < n; ++i) {
    const auto f = factorial(n - 1 - i);
    const auto digit = static_cast<std::size_t>(rank / f);
    rank %= f;
    word.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(word));
}

std::string Permutation::to_string() const {
  if (word_.empty()) return "e";
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

SubwordSelection::SubwordSelection(Permutation host, std::vector<int> indices)
    : host_(std::move(host)), indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > host_.size() || (i > 0 && indices_[i] <= indices_[i - 1])) {
      throw std::invalid_argument("subword indices must be strictly increasing within 1.." +
                                  std::to_string(host_.size()));
    }
  }
}

SubwordSelection SubwordSelection::full(const Permutation& host) {
  std::vector<int> idx(static_cast<std::size_t>(host.size()));
  std::iota(idx.begin(), idx.end(), 1);
  return {host, std::move(idx)};
}

SubwordSelection SubwordSelection::without_values(const Permutation& host, std::span<const int> excluded_values) {
  std::vector<int> idx;
  for (int i = 1; i <= host.size(); ++i) {
    if (std::find(excluded_values.begin(), excluded_values.end(), host(i)) == excluded_values.end()) idx.push_back(i);
  }
  return {host, std::move(idx)};
}

std::vector<int> SubwordSelection::values() const {
  std::vector<int> v;
  v.reserve(indices_.size());
  for (int i : indices_) v.push_back(host_(i));
  return v;
}

std::vector<int> SubwordSelection::sorted_values() const {
  auto v = values();
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> SubwordSelection::complement_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= host_.size(); ++i) {
    if (!std::binary_search(indices_.begin(), indices_.end(), i)) out.push_back(i);
  }
  return out;
}

std::string SubwordSelection::to_string() const {
  if (indices_.empty()) return "e";
  std::string out;
  const bool digits = host_.size() <= 9;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(host_(indices_[i]));
  }
  return out;
}

int coxeter_length(const Permutation& w) {
  const auto word = w.word();
  int inversions = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) inversions += word[i] > word[j];
  }
  return inversions;
}

Permutation flatten(std::span<const int> values) {
  std::vector<int> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    int smaller = 0;
    for (int v : values) smaller += v < values[i];
    out[i] = smaller + 1;
  }
  return Permutation::parse(out);
}

Permutation flatten(const SubwordSelection& v) { return flatten(v.values()); }

SubwordRange::iterator::iterator(const Permutation* host, int m, bool done) : host_(host), done_(done) {
  if (done_) return;
  if (m < 0 || m > host_->size()) {
    done_ = true;
    return;
  }
  idx_.resize(static_cast<std::size_t>(m));
  std::iota(idx_.begin(), idx_.end(), 1);
  current_ = SubwordSelection(*host_, idx_);
}

SubwordRange::iterator& SubwordRange::iterator::operator++() {
  const int n = host_->size();
  const int m = static_cast<int>(idx_.size());
  int i = m - 1;
  while (i >= 0 && idx_[static_cast<std::size_t>(i)] == n - m + i + 1) --i;
  if (i < 0) {
    done_ = true;
    return *this;
  }
  ++idx_[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < m; ++j) idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
  current_ = SubwordSelection(*host_, idx_);
  return *this;
}

SubwordRange::SubwordRange(Permutation host, int m) : host_(std::move(host)), m_(m) {
  if (m < 0 || m > host_.size()) throw std::invalid_argument("subword size out of range");
}

SubwordRange subwords(const Permutation& w, int m) { return {w, m}; }

namespace {

// Counts occurrences by brute force over all C(n, m) position sets.
std::uint64_t count_occurrences(std::span<const int> u, std::span<const int> w, bool stop_at_first) {
  const int m = static_cast<int>(u.size());
  const int n = static_cast<int>(w.size());
  if (m > n) return 0;
  if (m == 0) return 1;
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool match = true;
    for (int a = 0; a < m && match; ++a) {
      for (int b = a + 1; b < m; ++b) {
        const bool w_less = w[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] <
                            w[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
        if (w_less != (u[static_cast<std::size_t>(a)] < u[static_cast<std::size_t>(b)])) {
          match = false;
          break;
        }
      }
    }
    if (match) {
      ++count;
      if (stop_at_first) return count;
    }
    int i = m - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

}  // namespace

std::uint64_t pattern_count(const Permutation& u, const Permutation& w) {
  return count_occurrences(u.word(), w.word(), false);
}

bool contains_pattern(const Permutation& w, const Permutation& u) {
  return count_occurrences(u.word(), w.word(), true) > 0;
}

bool is_vexillary(const Permutation& w) {
  static const Permutation p2143 = Permutation::parse("2143");
  return avoids(w, p2143);
}

Permutation skew_sum(const Permutation& u, const Permutation& v) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(u.size() + v.size()));
  for (int x : u.word()) word.push_back(x + v.size());
  for (int x : v.word()) word.push_back(x);
  return Permutation::parse(word);
}

std::vector<Permutation> layered(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::set<Permutation> out;
  if (n == 0) return {Permutation()};
  // bit i of `cuts` set means a block boundary after position i+1
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    std::vector<int> word;
    int block_start = 1;
    for (int pos = 1; pos <= n; ++pos) {
      const bool boundary = pos == n || ((cuts >> (pos - 1)) & 1U);
      if (boundary) {
        for (int v = pos; v >= block_start; --v) word.push_back(v);
        block_start = pos + 1;
      }
    }
    out.insert(Permutation::parse(word));
  }
  return {out.begin(), out.end()};
}

bool is_layered(const Permutation& w) {
  const auto word = w.word();
  std::size_t i = 0;
  int covered = 0;
  while (i < word.size()) {
    // a block starts at its maximum and descends by one down to covered+1
    const int top = word[i];
    const int len = top - covered;
    if (len <= 0 || i + static_cast<std::size_t>(len) > word.size()) return false;
    for (int k = 0; k < len; ++k) {
      if (word[i + static_cast<std::size_t>(k)] != top - k) return false;
    }
    covered = top;
    i += static_cast<std::size_t>(len);
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    out.push_back(Permutation::parse(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace pipedream
