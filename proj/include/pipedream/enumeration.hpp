#pragma once

// Exhaustive generation of alternating sign matrices / bumpless pipe dreams
// and the derived sets filtered by permutation, type, reducedness and
// removable pipes.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "pipedream/bpd_grid.hpp"
#include "pipedream/permutation.hpp"

namespace pipedream {

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest size the fast sweep supports (strand pairs must fit a 64-bit mask).
inline constexpr int kMaxSweepSize = 11;
/// Largest size kept in the in-process catalog.
inline constexpr int kCatalogMaxSize = 7;
/// Queries at or below this size are answered from the catalog; larger ones stream.
inline constexpr int kQueryCatalogSize = 6;

/// Visits every ASM of size n once, rows filled top to bottom, each row left
/// to right, entries tried in the order 0, +1, -1. With `first_row_column`
/// set, only matrices whose first-row +1 sits in that column are visited.
void for_each_asm(int n, const std::function<void(const Asm&)>& fn, std::optional<int> first_row_column = {});
std::vector<Asm> enumerate_asm(int n);

/// One diagram as seen by the bottom-up sweep.
struct DiagramSummary {
  int n = 0;
  /// perm[x-1] = w(x); type[x-1] = ∂(B)(x).
  std::array<std::uint8_t, kMaxSweepSize> perm{};
  std::array<std::uint8_t, kMaxSweepSize> type{};
  int blanks = 0;
  int jelbows = 0;
  bool reduced = true;
  /// Resolved tiles (Bump where a repeated crossing was resolved), row-major.
  const Tile* tiles = nullptr;

  Permutation permutation() const;
  Permutation type_permutation() const;
  ResolvedGrid resolved_grid() const;
  BpdGrid grid() const;
};

/// Single pass over all diagrams of size n that builds rows bottom to top,
/// carrying raw and resolved strand labels, so permutation, type, blank and
/// j-elbow counts come out without re-tracing. Work is split into n shards by
/// the column of the bottom-row r-elbow and the shards are handed to
/// sweep_workers(n, jobs) threads; `fn(worker, summary)` is never called
/// concurrently with the same worker index.
void sweep_diagrams(int n, unsigned jobs, const std::function<void(int, const DiagramSummary&)>& fn);
/// Number of distinct worker indices sweep_diagrams uses.
int sweep_workers(int n, unsigned jobs);

struct RemovablePipe {
  int column;  // y: entry column on the south edge
  int row;     // x: exit row on the east edge
  friend bool operator==(const RemovablePipe&, const RemovablePipe&) = default;
};

struct RemovablePipeReport {
  /// Sorted by column.
  std::vector<RemovablePipe> pipes;
  /// The permutation with the values y_k deleted.
  SubwordSelection subword;
  bool minimal() const { return pipes.empty(); }
};

/// A pipe y -> x is removable when (x, y) is an r-elbow and it is the only
/// elbow in row x and in column y.
RemovablePipeReport removable_pipes(const BpdGrid& grid);

enum class SetKind { BPD, bpd, BPD_K, mBPD, mbpd, BPD_v, bpd_v };
std::string to_string(SetKind kind);
SetKind parse_set_kind(std::string_view name);

struct SetQuery {
  SetKind kind = SetKind::BPD;
  Permutation w;
  /// Required for BPD_v / bpd_v, must be a selection of w.
  std::optional<SubwordSelection> v;
};

/// Filters all diagrams of size |w| by the query. Order follows for_each_asm.
/// Throws GuardExceeded when |w| > guard and std::invalid_argument for a
/// malformed query.
std::vector<BpdGrid> query(const SetQuery& q, int guard = 9);

struct CatalogEntry {
  BpdGrid grid;
  Permutation perm;
  Permutation type;
  ResolvedGrid resolved;
  bool reduced = true;
  int blanks = 0;
  int jelbows = 0;
  RemovablePipeReport removable;
};

struct Catalog {
  int n = 0;
  std::vector<CatalogEntry> entries;
  std::map<Permutation, std::vector<std::size_t>> by_perm;
  std::map<Permutation, std::vector<std::size_t>> by_type;

  /// Indices of diagrams with the given permutation / type (empty if none).
  const std::vector<std::size_t>& with_perm(const Permutation& w) const;
  const std::vector<std::size_t>& with_type(const Permutation& w) const;
};

/// Every diagram of size n with its derived data, built once per process.
/// Throws GuardExceeded above kCatalogMaxSize. Thread-safe.
const Catalog& catalog(int n);

/// One render-json object per line.
void write_json_lines(std::ostream& out, const std::vector<BpdGrid>& grids);

}  // namespace pipedream
