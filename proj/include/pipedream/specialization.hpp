#pragma once

// Grothendieck polynomials from diagrams, their principal specializations
// nu_w, and the pattern coefficients c_w defined by
//   c_() = 1,  c_w = nu_w - sum_{|u| < |w|} c_u p_u(w).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pipedream/integer.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/polynomial.hpp"

namespace pipedream {

enum class CoefficientMode { Recursive, InclusionExclusion };

class Overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Lexicographic rank in S_m of the pattern formed by values[0..m).
std::uint64_t pattern_rank(const int* values, int m);

/// Given nu values for sizes 0..n (tables indexed by rank), returns c values
/// for sizes 0..n using c_w = nu_w - sum over proper subwords v of c_perm(v).
/// T needs copy, += and -=.
template <class T>
std::vector<std::vector<T>> coefficients_from_nu(const std::vector<std::vector<T>>& nu) {
  std::vector<std::vector<T>> c(nu.size());
  for (std::size_t n = 0; n < nu.size(); ++n) {
    const int size = static_cast<int>(n);
    c[n].reserve(nu[n].size());
    auto perms = all_permutations(size);
    int vals[32];
    for (std::size_t r = 0; r < perms.size(); ++r) {
      const auto word = perms[r].word();
      T acc = nu[n][r];
      const std::uint32_t full = (std::uint32_t{1} << size) - 1U;
      for (std::uint32_t mask = 0; mask < full; ++mask) {
        int m = 0;
        for (int k = 0; k < size; ++k) {
          if (mask & (1U << k)) vals[m++] = word[static_cast<std::size_t>(k)];
        }
        acc -= c[static_cast<std::size_t>(m)][pattern_rank(vals, m)];
      }
      c[n].push_back(std::move(acc));
    }
  }
  return c;
}

struct SkewReport {
  Permutation sum;
  BetaPolynomial nu_sum;
  BetaPolynomial nu_product;
  BetaPolynomial c_sum;
  BetaPolynomial c_product;
  bool holds() const { return nu_sum == nu_product && c_sum == c_product; }
};

/// Memoizing evaluator. All public methods are thread-safe.
class Specializer {
 public:
  explicit Specializer(int guard = 9, unsigned jobs = 1) : guard_(guard), jobs_(jobs) {}

  int guard() const { return guard_; }
  void set_guard(int guard);
  void set_jobs(unsigned jobs);

  /// nu^(beta)_w for every w in S_n by rank, accumulated over one sweep of
  /// all diagrams of size n, grouped by type.
  const std::vector<BetaPolynomial>& nu_table(int n);
  /// c^(beta)_w for every w in S_n by rank.
  const std::vector<BetaPolynomial>& coefficient_table(int n);

  /// Tables evaluated at an integer beta, without building polynomials.
  const std::vector<Integer>& nu_values(int n, std::int64_t beta);
  const std::vector<Integer>& coefficient_values(int n, std::int64_t beta);

  BetaPolynomial nu(const Permutation& w);
  BetaPolynomial coefficient(const Permutation& w, CoefficientMode mode = CoefficientMode::Recursive);

  /// Sum of beta-weights over the diagrams of type w, straight from the
  /// diagram sets rather than the sweep.
  BetaPolynomial nu_by_weights(const Permutation& w);

  /// G^(beta)_w in x_1..x_{n-1}.
  MultivariatePolynomial grothendieck(const Permutation& w);

  SkewReport skew_identities(const Permutation& u, const Permutation& v);

  /// Pre-loads nu values (e.g. from the on-disk cache).
  void seed_nu(const Permutation& w, const BetaPolynomial& value);
  /// Every nu value computed or seeded so far, keyed by permutation.
  std::map<Permutation, BetaPolynomial> known_nu() const;

 private:
  void check_guard(int n) const;
  const std::vector<BetaPolynomial>& nu_table_locked(int n);
  const std::vector<Integer>& nu_values_locked(int n, std::int64_t beta);
  BetaPolynomial nu_locked(const Permutation& w);
  BetaPolynomial recursive_locked(const Permutation& w);

  int guard_;
  unsigned jobs_;
  mutable std::recursive_mutex mu_;
  std::map<int, std::vector<BetaPolynomial>> nu_tables_;
  std::map<int, std::vector<BetaPolynomial>> c_tables_;
  std::map<std::pair<int, std::int64_t>, std::vector<Integer>> nu_value_tables_;
  std::map<std::pair<int, std::int64_t>, std::vector<Integer>> c_value_tables_;
  std::map<Permutation, BetaPolynomial> nu_memo_;
  std::map<Permutation, BetaPolynomial> c_memo_;
};

/// Process-wide instance used by the free functions below.
Specializer& default_specializer();

MultivariatePolynomial grothendieck(const Permutation& w);
BetaPolynomial nu(const Permutation& w);
BetaPolynomial coefficient(const Permutation& w, CoefficientMode mode = CoefficientMode::Recursive);
SkewReport skew_identities(const Permutation& u, const Permutation& v);

}  // namespace pipedream
