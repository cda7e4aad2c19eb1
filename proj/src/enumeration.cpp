#include "pipedream/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "pipedream/ktheory.hpp"

namespace pipedream {

namespace {

class AsmWalker {
 public:
  AsmWalker(int n, const std::function<void(const Asm&)>& fn, std::optional<int> shard)
      : n_(n), fn_(fn), shard_(shard), a_(n), col_(static_cast<std::size_t>(n) + 1, 0) {}

  void run() {
    if (n_ == 0) {
      fn_(a_);
      return;
    }
    cell(1, 1, 0);
  }

 private:
  void cell(int i, int j, int row_sum) {
    if (j > n_) {
      if (row_sum != 1) return;
      if (i == n_) {
        fn_(a_);
      } else {
        cell(i + 1, 1, 0);
      }
      return;
    }
    auto& c = col_[static_cast<std::size_t>(j)];
    if (row_sum == 0) {
      bool room = false;
      for (int k = j; k <= n_ && !room; ++k) room = col_[static_cast<std::size_t>(k)] == 0;
      if (!room) return;
    }
    const bool last_row = i == n_;
    for (int v : {0, 1, -1}) {
      if (c + v < 0 || c + v > 1 || row_sum + v < 0 || row_sum + v > 1) continue;
      if (last_row && c + v != 1) continue;
      if (i == 1 && shard_ && (v == 1) != (j == *shard_)) continue;
      a_.set(i, j, v);
      c += v;
      cell(i, j + 1, row_sum + v);
      c -= v;
    }
    a_.set(i, j, 0);
  }

  int n_;
  const std::function<void(const Asm&)>& fn_;
  std::optional<int> shard_;
  Asm a_;
  std::vector<int> col_;
};

// Bottom-up sweep state; small enough to copy at every cell.
struct SweepState {
  std::uint16_t open = 0;  // bit j-1: the south side of the current cell in column j is occupied
  std::array<std::uint8_t, kMaxSweepSize> label{};
  std::array<std::uint8_t, kMaxSweepSize> rlabel{};
  std::uint8_t h = 0;
  std::uint8_t rh = 0;
  bool west = false;
  std::uint64_t raw = 0;
  std::uint64_t res = 0;
  std::uint8_t blanks = 0;
  std::uint8_t jelbows = 0;
  bool nonreduced = false;
  std::array<std::uint8_t, kMaxSweepSize> perm{};
  std::array<std::uint8_t, kMaxSweepSize> type{};
};

class Sweeper {
 public:
  Sweeper(int n, int bottom_column, const std::function<void(const DiagramSummary&)>& fn)
      : n_(n), bottom_(bottom_column), fn_(fn), tiles_(static_cast<std::size_t>(n * n), Tile::Blank) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) pair_bit_[a][b] = 0;
    }
    int bit = 0;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        pair_bit_[a - 1][b - 1] = pair_bit_[b - 1][a - 1] = std::uint64_t{1} << bit;
        ++bit;
      }
    }
  }

  void run() {
    SweepState s;
    s.open = static_cast<std::uint16_t>((1U << n_) - 1U);
    for (int j = 0; j < n_; ++j) s.label[static_cast<std::size_t>(j)] = s.rlabel[static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>(j + 1);
    cell(n_, 1, s);
  }

 private:
  void put(int i, int j, Tile t) { tiles_[static_cast<std::size_t>((i - 1) * n_ + j - 1)] = t; }

  void cell(int i, int j, SweepState s) {
    if (j > n_) {
      if (!s.west) return;
      s.perm[static_cast<std::size_t>(i - 1)] = s.h;
      s.type[static_cast<std::size_t>(i - 1)] = s.rh;
      if (i == 1) {
        leaf(s);
        return;
      }
      s.west = false;
      cell(i - 1, 1, s);
      return;
    }
    const auto bit = static_cast<std::uint16_t>(1U << (j - 1));
    const bool south = (s.open & bit) != 0;
    const bool top = i == 1;
    const bool bottom = i == n_;
    const auto jj = static_cast<std::size_t>(j - 1);
    // columns strictly to the right that still carry a strand
    const bool open_right = (s.open >> j) != 0;

    if (!south && !s.west) {
      if (!open_right) return;
      put(i, j, Tile::Blank);
      ++s.blanks;
      cell(i, j + 1, s);
      return;
    }
    if (south && !s.west) {
      const bool allow_vertical = !top && open_right && !(bottom && j >= bottom_);
      const bool allow_elbow = !(bottom && j != bottom_);
      if (allow_vertical) {
        put(i, j, Tile::Vertical);
        cell(i, j + 1, s);
      }
      if (allow_elbow) {
        SweepState t = s;
        t.open = static_cast<std::uint16_t>(t.open & ~bit);
        t.h = t.label[jj];
        t.rh = t.rlabel[jj];
        t.west = true;
        put(i, j, Tile::RElbow);
        cell(i, j + 1, t);
      }
      return;
    }
    if (!south && s.west) {
      put(i, j, Tile::Horizontal);
      cell(i, j + 1, s);
      if (!top && open_right) {
        s.open = static_cast<std::uint16_t>(s.open | bit);
        s.label[jj] = s.h;
        s.rlabel[jj] = s.rh;
        s.west = false;
        ++s.jelbows;
        put(i, j, Tile::JElbow);
        cell(i, j + 1, s);
      }
      return;
    }
    if (top) return;
    const auto raw_bit = pair_bit_[s.label[jj] - 1][s.h - 1];
    if (s.raw & raw_bit) s.nonreduced = true;
    s.raw |= raw_bit;
    const auto res_bit = pair_bit_[s.rlabel[jj] - 1][s.rh - 1];
    if (s.res & res_bit) {
      std::swap(s.rlabel[jj], s.rh);
      put(i, j, Tile::Bump);
    } else {
      s.res |= res_bit;
      put(i, j, Tile::Cross);
    }
    cell(i, j + 1, s);
  }

  void leaf(const SweepState& s) {
    DiagramSummary d;
    d.n = n_;
    d.perm = s.perm;
    d.type = s.type;
    d.blanks = s.blanks;
    d.jelbows = s.jelbows;
    d.reduced = !s.nonreduced;
    d.tiles = tiles_.data();
    fn_(d);
  }

  int n_;
  int bottom_;
  const std::function<void(const DiagramSummary&)>& fn_;
  std::vector<Tile> tiles_;
  std::uint64_t pair_bit_[kMaxSweepSize][kMaxSweepSize];
};

Permutation from_bytes(const std::array<std::uint8_t, kMaxSweepSize>& a, int n) {
  std::vector<int> word(a.begin(), a.begin() + n);
  return Permutation::parse(word);
}

}  // namespace

void for_each_asm(int n, const std::function<void(const Asm&)>& fn, std::optional<int> first_row_column) {
  if (n < 0) throw std::invalid_argument("negative size");
  AsmWalker(n, fn, first_row_column).run();
}

std::vector<Asm> enumerate_asm(int n) {
  std::vector<Asm> out;
  for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

Permutation DiagramSummary::permutation() const { return from_bytes(perm, n); }
Permutation DiagramSummary::type_permutation() const { return from_bytes(type, n); }

ResolvedGrid DiagramSummary::resolved_grid() const {
  ResolvedGrid g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) g.set(i, j, tiles[(i - 1) * n + j - 1]);
  }
  return g;
}

BpdGrid DiagramSummary::grid() const { return unresolve(resolved_grid()); }

int sweep_workers(int n, unsigned jobs) {
  return static_cast<int>(std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max(n, 1))));
}

void sweep_diagrams(int n, unsigned jobs, const std::function<void(int, const DiagramSummary&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (n > kMaxSweepSize) throw GuardExceeded("sweep supports sizes up to " + std::to_string(kMaxSweepSize));
  if (n == 0) {
    DiagramSummary d;
    fn(0, d);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&](int id) {
    const std::function<void(const DiagramSummary&)> sink = [&](const DiagramSummary& d) { fn(id, d); };
    try {
      for (int shard = next++; shard < n; shard = next++) Sweeper(n, shard + 1, sink).run();
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = n;
    }
  };
  const int threads = sweep_workers(n, jobs);
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

RemovablePipeReport removable_pipes(const BpdGrid& grid) {
  const int n = grid.size();
  const auto a = to_asm(grid);
  RemovablePipeReport out;
  std::vector<int> removed_values;
  for (int y = 1; y <= n; ++y) {
    for (int x = 1; x <= n; ++x) {
      if (a.at(x, y) != 1) continue;
      bool alone = true;
      for (int k = 1; k <= n && alone; ++k) {
        if (k != y && a.at(x, k) != 0) alone = false;
        if (k != x && a.at(k, y) != 0) alone = false;
      }
      if (alone) {
        out.pipes.push_back({y, x});
        removed_values.push_back(y);
      }
    }
  }
  out.subword = SubwordSelection::without_values(trace(grid).perm, removed_values);
  return out;
}

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::BPD: return "BPD";
    case SetKind::bpd: return "bpd";
    case SetKind::BPD_K: return "BPD_K";
    case SetKind::mBPD: return "mBPD";
    case SetKind::mbpd: return "mbpd";
    case SetKind::BPD_v: return "BPD_v";
    case SetKind::bpd_v: return "bpd_v";
  }
  return "?";
}

SetKind parse_set_kind(std::string_view name) {
  for (auto k : {SetKind::BPD, SetKind::bpd, SetKind::BPD_K, SetKind::mBPD, SetKind::mbpd, SetKind::BPD_v,
                 SetKind::bpd_v}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown set kind '" + std::string(name) + "'");
}

namespace {

bool needs_subword(SetKind k) { return k == SetKind::BPD_v || k == SetKind::bpd_v; }

bool keep(const SetQuery& q, const Permutation& perm, const Permutation& type, bool reduced,
          const std::function<RemovablePipeReport()>& removable) {
  switch (q.kind) {
    case SetKind::BPD: return perm == q.w;
    case SetKind::bpd: return perm == q.w && reduced;
    case SetKind::BPD_K: return type == q.w;
    case SetKind::mBPD: return perm == q.w && removable().minimal();
    case SetKind::mbpd: return perm == q.w && reduced && removable().minimal();
    case SetKind::BPD_v: return perm == q.w && removable().subword == *q.v;
    case SetKind::bpd_v: return perm == q.w && reduced && removable().subword == *q.v;
  }
  return false;
}

}  // namespace

std::vector<BpdGrid> query(const SetQuery& q, int guard) {
  const int n = q.w.size();
  if (n > guard) {
    throw GuardExceeded("size " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
  }
  if (needs_subword(q.kind) != q.v.has_value()) {
    throw std::invalid_argument("a subword is required exactly for BPD_v and bpd_v");
  }
  if (q.v && q.v->host() != q.w) throw std::invalid_argument("subword is not a selection of the queried permutation");

  std::vector<BpdGrid> out;
  if (n <= kQueryCatalogSize) {
    const auto& cat = catalog(n);
    const auto& idx = q.kind == SetKind::BPD_K ? cat.with_type(q.w) : cat.with_perm(q.w);
    for (auto k : idx) {
      const auto& e = cat.entries[k];
      if (keep(q, e.perm, e.type, e.reduced, [&] { return e.removable; })) out.push_back(e.grid);
    }
    return out;
  }
  for_each_asm(n, [&](const Asm& a) {
    const auto g = from_asm(a);
    const auto tr = trace(g);
    if (q.kind != SetKind::BPD_K && tr.perm != q.w) return;
    const Permutation type = q.kind == SetKind::BPD_K ? resolve(g).type : tr.perm;
    if (keep(q, tr.perm, type, tr.reduced(), [&] { return removable_pipes(g); })) out.push_back(g);
  });
  return out;
}

const std::vector<std::size_t>& Catalog::with_perm(const Permutation& w) const {
  static const std::vector<std::size_t> none;
  auto it = by_perm.find(w);
  return it == by_perm.end() ? none : it->second;
}

const std::vector<std::size_t>& Catalog::with_type(const Permutation& w) const {
  static const std::vector<std::size_t> none;
  auto it = by_type.find(w);
  return it == by_type.end() ? none : it->second;
}

const Catalog& catalog(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (n > kCatalogMaxSize) {
    throw GuardExceeded("catalog holds sizes up to " + std::to_string(kCatalogMaxSize));
  }
  static std::mutex mu;
  static std::array<std::unique_ptr<Catalog>, kCatalogMaxSize + 1> store;
  std::lock_guard lock(mu);
  auto& slot = store[static_cast<std::size_t>(n)];
  if (!slot) {
    auto cat = std::make_unique<Catalog>();
    cat->n = n;
    for_each_asm(n, [&](const Asm& a) {
      CatalogEntry e;
      e.grid = from_asm(a);
      const auto tr = trace(e.grid);
      auto res = resolve(e.grid);
      e.perm = tr.perm;
      e.type = res.type;
      e.resolved = std::move(res.grid);
      e.reduced = tr.reduced();
      e.blanks = tr.blank_count;
      e.jelbows = tr.jelbow_count;
      e.removable = removable_pipes(e.grid);
      cat->by_perm[e.perm].push_back(cat->entries.size());
      cat->by_type[e.type].push_back(cat->entries.size());
      cat->entries.push_back(std::move(e));
    });
    slot = std::move(cat);
  }
  return *slot;
}

void write_json_lines(std::ostream& out, const std::vector<BpdGrid>& grids) {
  for (const auto& g : grids) out << render(g, RenderFormat::Json) << '\n';
}

}  // namespace pipedream
