#pragma once

// Resolution of repeated crossings into bumps, the resulting type permutation,
// the beta-weight of a diagram, and the pattern witness for nonreduced diagrams.

#include <optional>
#include <stdexcept>
#include <utility>

#include "pipedream/bpd_grid.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/polynomial.hpp"

namespace pipedream {

/// ColumnMajor: columns left to right, each column bottom to top.
/// RowMajor: rows bottom to top, each row left to right.
enum class ScanOrder { ColumnMajor, RowMajor };

struct Resolution {
  ResolvedGrid grid;
  Permutation type;
};

/// Visits the Cross tiles in `order`. A Cross becomes a Bump when the two
/// strands passing through it (in the grid modified so far) already share an
/// earlier Cross. Strands are re-traced after every conversion.
Resolution resolve(const BpdGrid& grid, ScanOrder order = ScanOrder::ColumnMajor);

/// Replaces every Bump by a Cross.
BpdGrid unresolve(const ResolvedGrid& grid);

/// beta^(blanks - reference_length) * (1 + beta)^(jelbows).
/// Throws NegativeExponent when blanks < reference_length.
BetaPolynomial beta_weight(const TileGrid& grid, int reference_length);
BetaPolynomial beta_weight(int blanks, int jelbows, int reference_length);

class WitnessNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NonreducedWitness {
  enum class Parity { Even, Odd };
  Parity parity;
  /// 1243 for even crossing count, 2143 for odd.
  Permutation pattern;
  SubwordSelection occurrence;
  /// The strand pair (a < b) crossing at least twice.
  std::pair<int, int> pipes;
  /// True when a and b occupy the first two letters of the occurrence.
  bool anchored = false;
};

/// None for reduced grids. For a nonreduced grid, picks the first strand pair
/// (lexicographically) crossing twice or more and finds an occurrence of the
/// matching pattern in the permutation, preferring one whose first two letters
/// are that pair. Throws WitnessNotFound if there is no occurrence, or if the
/// type of the grid avoids 2143.
std::optional<NonreducedWitness> nonreduced_witness(const BpdGrid& grid);

}  // namespace pipedream
