#pragma once

// Named exhaustive checks over all permutations / diagrams up to a size, and
// the table of maxima of nu and c at a fixed beta.

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pipedream/integer.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/specialization.hpp"

namespace pipedream {

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxRecordedFailures = 10;

struct CheckReport {
  std::string check_id;
  int n = 0;
  std::uint64_t instances_checked = 0;
  /// Counterexample descriptors (permutation words, ascii grids); at most
  /// kMaxRecordedFailures, after which the check stops.
  std::vector<std::string> failures;
  /// Observations worth printing that are not failures.
  std::vector<std::string> notes;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failures.empty(); }
  std::string to_json() const;
  std::string to_text() const;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  /// Extra random (u, v) pairs for the skew check.
  int random_pairs = 50;
  int random_max_size = 7;
  unsigned jobs = 1;
};

/// Ids accepted by run_check, in a fixed order.
const std::vector<std::string>& check_ids();

/// Runs a check over every size 0..n. Throws UnknownCheck for an unknown id
/// and GuardExceeded when n is above what the check's data source allows.
CheckReport run_check(std::string_view check_id, int n, const CheckOptions& options = {});
CheckReport run_check(std::string_view check_id, int n, Specializer& evaluator, const CheckOptions& options = {});

struct MaximaRow {
  int n = 0;
  std::int64_t beta_value = 1;
  Integer max_nu;
  Integer max_c;
  std::vector<Permutation> argmax_nu;
  std::vector<Permutation> argmax_c;
  /// Every argmax permutation is layered.
  bool argmax_layered = true;
  /// argmax_nu == argmax_c.
  bool argmax_agree = true;
};

MaximaRow maxima_table(int n, std::int64_t beta_value, Specializer& evaluator);
MaximaRow maxima_table(int n, std::int64_t beta_value);

}  // namespace pipedream
