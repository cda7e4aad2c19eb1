#pragma once

// Bumpless pipe dream tile grids, pipe tracing, and the correspondence with
// alternating sign matrices. Coordinates are matrix coordinates: row 1 is the
// top row, column 1 the leftmost; all public indices are 1-based.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pipedream/permutation.hpp"

namespace pipedream {

enum class Tile : std::uint8_t { Blank, Horizontal, Vertical, Cross, RElbow, JElbow, Bump };

/// Side bits of a tile.
enum Side : std::uint8_t { North = 1, South = 2, West = 4, East = 8 };

/// Open sides: RElbow joins South-East, JElbow joins North-West.
std::uint8_t sides(Tile t);
/// Tile with the given open sides; throws for side sets no tile realizes.
/// (The full side set maps to Cross.)
Tile tile_from_sides(std::uint8_t mask);

/// '.', '-', '|', '+', 'r', 'j', 'b'
char tile_char(Tile t);
Tile tile_from_char(char c);

class GridFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square matrix of tiles.
class TileGrid {
 public:
  TileGrid() = default;
  explicit TileGrid(int n, Tile fill = Tile::Blank);

  /// Rows of tile characters separated by newlines; blank lines ignored.
  static TileGrid from_ascii(std::string_view text);

  int size() const { return n_; }
  Tile at(int row, int col) const { return tiles_[index(row, col)]; }
  void set(int row, int col, Tile t) { tiles_[index(row, col)] = t; }
  int count(Tile t) const;

  std::string to_ascii() const;
  std::vector<std::string> rows() const;

  friend bool operator==(const TileGrid&, const TileGrid&) = default;
  friend auto operator<=>(const TileGrid& a, const TileGrid& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.tiles_ <=> b.tiles_;
  }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>((row - 1) * n_ + (col - 1));
  }
  int n_ = 0;
  std::vector<Tile> tiles_;
};

/// A bumpless pipe dream as drawn: no Bump tiles.
class BpdGrid : public TileGrid {
 public:
  using TileGrid::TileGrid;
  explicit BpdGrid(TileGrid g) : TileGrid(std::move(g)) {}
  static BpdGrid from_ascii(std::string_view text) { return BpdGrid(TileGrid::from_ascii(text)); }
};

/// A diagram in which repeated crossings have been turned into bumps.
class ResolvedGrid : public TileGrid {
 public:
  using TileGrid::TileGrid;
  explicit ResolvedGrid(TileGrid g) : TileGrid(std::move(g)) {}
  static ResolvedGrid from_ascii(std::string_view text) { return ResolvedGrid(TileGrid::from_ascii(text)); }
};

struct GridError {
  enum class Kind { BrokenStrand, BoundaryLeak, NotBijective, ForbiddenTile };
  Kind kind;
  int row = 0;
  int col = 0;
  std::string message;
};

std::string to_string(GridError::Kind kind);

/// Checks strand continuity, closed north/west boundary, open south/east
/// boundary and absence of Bump tiles. Reports the first offending cell in
/// row-major order.
std::optional<GridError> validate(const BpdGrid& grid);

/// Same local checks but Bump tiles are allowed.
std::optional<GridError> validate(const ResolvedGrid& grid);

/// Strand labels at every cell, found by walking each strand from the south
/// edge. Cross passes straight through; Bump joins South-East and West-North.
struct StrandWalk {
  int n = 0;
  /// label (entry column) of the strand entering each cell from the south /
  /// from the west, 0 when none; row-major, 0-based storage.
  std::vector<int> from_south;
  std::vector<int> from_west;
  /// exit_row[y-1] = row through whose east edge strand y leaves.
  std::vector<int> exit_row;

  int south(int row, int col) const { return from_south[static_cast<std::size_t>((row - 1) * n + col - 1)]; }
  int west(int row, int col) const { return from_west[static_cast<std::size_t>((row - 1) * n + col - 1)]; }
  /// w(x) = y iff strand y exits row x.
  Permutation permutation() const;
};

/// Throws GridFormatError if a strand cannot be followed to the east edge.
StrandWalk walk_strands(const TileGrid& grid);

struct PipeTrace {
  Permutation perm;
  /// (a, b) with a < b: number of Cross tiles shared by strands a and b.
  std::map<std::pair<int, int>, int> crossings;
  int jelbow_count = 0;
  int blank_count = 0;

  int crossings_between(int a, int b) const;
  bool reduced() const;
};

/// Requires validate(grid) to succeed.
PipeTrace trace(const BpdGrid& grid);
/// Tracing through bumps; crossings count Cross tiles only.
PipeTrace trace(const ResolvedGrid& grid);

class InconsistentAsm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n x n matrix over {-1, 0, +1}.
class Asm {
 public:
  Asm() = default;
  explicit Asm(int n) : n_(n), entries_(static_cast<std::size_t>(n * n), 0) {}
  Asm(int n, std::vector<std::int8_t> row_major);

  /// Whitespace separated rows of "0", "+1", "1", "-1"; or compact rows of
  /// '0', '+', '-'.
  static Asm parse(std::string_view text);
  static Asm identity(int n);

  int size() const { return n_; }
  int at(int row, int col) const { return entries_[static_cast<std::size_t>((row - 1) * n_ + col - 1)]; }
  void set(int row, int col, int v) {
    entries_[static_cast<std::size_t>((row - 1) * n_ + col - 1)] = static_cast<std::int8_t>(v);
  }
  std::span<const std::int8_t> entries() const { return entries_; }
  int count(int value) const;

  /// Deletes the given rows and columns (1-based, any order).
  Asm minor(std::span<const int> rows, std::span<const int> cols) const;

  /// Compact rows of '0', '+', '-'.
  std::string to_string() const;

  friend bool operator==(const Asm&, const Asm&) = default;
  friend auto operator<=>(const Asm&, const Asm&) = default;

 private:
  int n_ = 0;
  std::vector<std::int8_t> entries_;
};

/// Describes the first violated alternating-sign condition, if any.
std::optional<std::string> asm_violation(const Asm& a);

/// RElbow -> +1, JElbow -> -1, anything else 0.
Asm to_asm(const BpdGrid& grid);
/// Inverse of to_asm; throws InconsistentAsm for a non-ASM.
BpdGrid from_asm(const Asm& a);

enum class RenderFormat { Ascii, Json, Svg };
RenderFormat parse_render_format(std::string_view name);

/// ascii: one row per line. json: {"n":..,"tiles":[..],"perm":[..]}.
/// svg: strands drawn as polylines with quarter-circle elbows.
std::string render(const BpdGrid& grid, RenderFormat format);
std::string render(const ResolvedGrid& grid, RenderFormat format);

/// Reads the json form written by render().
BpdGrid grid_from_json(std::string_view json_text);

}  // namespace pipedream
