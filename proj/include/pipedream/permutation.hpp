#pragma once

// Permutations in one-line notation, subwords and classical pattern counting.

#include <compare>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pipedream {

class NotAPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bijection of [n] written as the word w(1)...w(n). The empty word is the
/// unique permutation of size 0. Ordering is lexicographic on the word.
class Permutation {
 public:
  Permutation() = default;

  /// Throws NotAPermutation unless `word` is a rearrangement of 1..size.
  static Permutation parse(std::span<const int> word);
  /// Accepts "2164753" (single digits) or "10,1,2,..." (comma separated).
  /// "" and "e" denote the empty permutation.
  static Permutation parse(std::string_view text);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> word() const { return word_; }

  Permutation inverse() const;

  /// Lexicographic rank of the word within S_n (0-based).
  std::uint64_t rank() const;
  static Permutation unrank(int n, std::uint64_t rank);

  /// Digits when n <= 9, comma separated otherwise; "e" for the empty word.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}
  std::vector<int> word_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& w);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

/// Indices 1 <= s_1 < ... < s_m <= n into a host permutation.
class SubwordSelection {
 public:
  SubwordSelection() = default;
  SubwordSelection(Permutation host, std::vector<int> indices);

  static SubwordSelection full(const Permutation& host);
  /// Selection of every position whose value is not in `excluded_values`.
  static SubwordSelection without_values(const Permutation& host, std::span<const int> excluded_values);

  const Permutation& host() const { return host_; }
  std::span<const int> indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  /// The subword values v(i) = host(s_i).
  std::vector<int> values() const;
  /// Sorted values t_1 < ... < t_m.
  std::vector<int> sorted_values() const;
  /// Positions of the host not selected, ascending.
  std::vector<int> complement_indices() const;

  std::string to_string() const;

  friend bool operator==(const SubwordSelection&, const SubwordSelection&) = default;

 private:
  Permutation host_;
  std::vector<int> indices_;
};

/// Number of inversions.
int coxeter_length(const Permutation& w);

/// The permutation order-isomorphic to a sequence of distinct integers.
Permutation flatten(std::span<const int> values);
Permutation flatten(const SubwordSelection& v);

/// Iterates all C(n, m) index sets of size m in lexicographic order.
class SubwordRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SubwordSelection;
    using difference_type = std::ptrdiff_t;
    using pointer = const SubwordSelection*;
    using reference = const SubwordSelection&;

    iterator() = default;
    iterator(const Permutation* host, int m, bool done);
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    const Permutation* host_ = nullptr;
    std::vector<int> idx_;
    SubwordSelection current_;
    bool done_ = true;
  };

  SubwordRange(Permutation host, int m);
  iterator begin() const { return iterator(&host_, m_, false); }
  iterator end() const { return iterator(&host_, m_, true); }

 private:
  Permutation host_;
  int m_;
};

SubwordRange subwords(const Permutation& w, int m);

/// p_u(w): number of subwords of w order-isomorphic to u.
std::uint64_t pattern_count(const Permutation& u, const Permutation& w);
bool contains_pattern(const Permutation& w, const Permutation& u);
inline bool avoids(const Permutation& w, const Permutation& u) { return !contains_pattern(w, u); }
/// 2143-avoiding.
bool is_vexillary(const Permutation& w);

/// u ⊖ v = (u(1)+n)...(u(m)+n) v(1)...v(n).
Permutation skew_sum(const Permutation& u, const Permutation& v);

/// All layered permutations of size n, sorted.
std::vector<Permutation> layered(int n);
bool is_layered(const Permutation& w);

/// All of S_n in lexicographic (= rank) order.
std::vector<Permutation> all_permutations(int n);

}  // namespace pipedream
