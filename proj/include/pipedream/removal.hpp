#pragma once

// Removing all removable pipes from a diagram, and the inverse insertion.

#include <stdexcept>

#include "pipedream/bpd_grid.hpp"
#include "pipedream/enumeration.hpp"
#include "pipedream/permutation.hpp"

namespace pipedream {

class NotMinimal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SubwordMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Removal {
  BpdGrid image;
  SubwordSelection v;
};

/// Deletes rows x_k and columns y_k of every removable pipe y_k -> x_k from the
/// ASM of the grid and converts back.
Removal remove_pipes(const BpdGrid& grid);

/// Same map computed on tiles: erase each removable hook, then contract its
/// row and column.
Removal remove_pipes_by_contraction(const BpdGrid& grid);

/// Inverse of remove_pipes. Spreads the image over rows s_1 < ... < s_m and
/// columns t_1 < ... < t_m (the positions and sorted values of v), fills the gap
/// cells so strands stay connected, then adds a hook y -> x for every value y
/// of w outside v. Throws NotMinimal if the image has a removable pipe and
/// SubwordMismatch if v is not a selection of w flattening to the image's
/// permutation.
BpdGrid insert_pipes(const BpdGrid& image, const Permutation& w, const SubwordSelection& v);

}  // namespace pipedream
