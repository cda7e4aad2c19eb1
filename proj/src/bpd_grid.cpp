#include "pipedream/bpd_grid.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

namespace pipedream {

std::uint8_t sides(Tile t) {
  switch (t) {
    case Tile::Blank: return 0;
    case Tile::Horizontal: return West | East;
    case Tile::Vertical: return North | South;
    case Tile::Cross:
    case Tile::Bump: return North | South | West | East;
    case Tile::RElbow: return South | East;
    case Tile::JElbow: return North | West;
  }
  return 0;
}

Tile tile_from_sides(std::uint8_t mask) {
  switch (mask) {
    case 0: return Tile::Blank;
    case West | East: return Tile::Horizontal;
    case North | South: return Tile::Vertical;
    case North | South | West | East: return Tile::Cross;
    case South | East: return Tile::RElbow;
    case North | West: return Tile::JElbow;
    default: throw GridFormatError("no tile joins side set " + std::to_string(mask));
  }
}

char tile_char(Tile t) {
  static constexpr std::array<char, 7> chars = {'.', '-', '|', '+', 'r', 'j', 'b'};
  return chars[static_cast<std::size_t>(t)];
}

Tile tile_from_char(char c) {
  switch (c) {
    case '.': return Tile::Blank;
    case '-': return Tile::Horizontal;
    case '|': return Tile::Vertical;
    case '+': return Tile::Cross;
    case 'r': return Tile::RElbow;
    case 'j': return Tile::JElbow;
    case 'b': return Tile::Bump;
    default: throw GridFormatError(std::string("unknown tile character '") + c + "'");
  }
}

TileGrid::TileGrid(int n, Tile fill) : n_(n), tiles_(static_cast<std::size_t>(n * n), fill) {
  if (n < 0) throw GridFormatError("negative grid size");
}

TileGrid TileGrid::from_ascii(std::string_view text) {
  std::vector<std::string> rows;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) rows.push_back(line);
  }
  const int n = static_cast<int>(rows.size());
  TileGrid g(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n) {
      throw GridFormatError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                            " tiles, expected " + std::to_string(n));
    }
    for (int j = 1; j <= n; ++j) g.set(i, j, tile_from_char(row[static_cast<std::size_t>(j - 1)]));
  }
  return g;
}

int TileGrid::count(Tile t) const { return static_cast<int>(std::count(tiles_.begin(), tiles_.end(), t)); }

std::vector<std::string> TileGrid::rows() const {
  std::vector<std::string> out;
  for (int i = 1; i <= n_; ++i) {
    std::string row;
    for (int j = 1; j <= n_; ++j) row += tile_char(at(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

std::string TileGrid::to_ascii() const {
  std::string out;
  for (const auto& row : rows()) {
    if (!out.empty()) out += '\n';
    out += row;
  }
  return out;
}

std::string to_string(GridError::Kind kind) {
  switch (kind) {
    case GridError::Kind::BrokenStrand: return "BrokenStrand";
    case GridError::Kind::BoundaryLeak: return "BoundaryLeak";
    case GridError::Kind::NotBijective: return "NotBijective";
    case GridError::Kind::ForbiddenTile: return "ForbiddenTile";
  }
  return "?";
}

namespace {

std::optional<GridError> check_local(const TileGrid& g, bool allow_bump) {
  const int n = g.size();
  auto err = [](GridError::Kind k, int i, int j, std::string msg) {
    return GridError{k, i, j, "(" + std::to_string(i) + "," + std::to_string(j) + "): " + std::move(msg)};
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Tile t = g.at(i, j);
      if (t == Tile::Bump && !allow_bump) return err(GridError::Kind::ForbiddenTile, i, j, "bump tile in a raw diagram");
      const auto s = sides(t);
      if (i == 1 && (s & North)) return err(GridError::Kind::BoundaryLeak, i, j, "strand leaves through the north edge");
      if (j == 1 && (s & West)) return err(GridError::Kind::BoundaryLeak, i, j, "strand enters through the west edge");
      if (i == n && !(s & South)) return err(GridError::Kind::BrokenStrand, i, j, "no strand enters from the south edge");
      if (j == n && !(s & East)) return err(GridError::Kind::BrokenStrand, i, j, "no strand exits through the east edge");
      if (i < n && static_cast<bool>(s & South) != static_cast<bool>(sides(g.at(i + 1, j)) & North)) {
        return err(GridError::Kind::BrokenStrand, i, j, "south side does not match the tile below");
      }
      if (j < n && static_cast<bool>(s & East) != static_cast<bool>(sides(g.at(i, j + 1)) & West)) {
        return err(GridError::Kind::BrokenStrand, i, j, "east side does not match the tile to the right");
      }
    }
  }
  try {
    const auto walk = walk_strands(g);
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (int r : walk.exit_row) {
      if (hit[static_cast<std::size_t>(r)]) return err(GridError::Kind::NotBijective, r, n, "two strands exit this row");
      hit[static_cast<std::size_t>(r)] = true;
    }
  } catch (const GridFormatError& e) {
    return GridError{GridError::Kind::BrokenStrand, 0, 0, e.what()};
  }
  return std::nullopt;
}

}  // namespace

std::optional<GridError> validate(const BpdGrid& grid) { return check_local(grid, false); }
std::optional<GridError> validate(const ResolvedGrid& grid) { return check_local(grid, true); }

Permutation StrandWalk::permutation() const {
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int y = 1; y <= n; ++y) word[static_cast<std::size_t>(exit_row[static_cast<std::size_t>(y - 1)] - 1)] = y;
  return Permutation::parse(word);
}

StrandWalk walk_strands(const TileGrid& grid) {
  const int n = grid.size();
  StrandWalk walk;
  walk.n = n;
  walk.from_south.assign(static_cast<std::size_t>(n * n), 0);
  walk.from_west.assign(static_cast<std::size_t>(n * n), 0);
  walk.exit_row.assign(static_cast<std::size_t>(n), 0);
  for (int y = 1; y <= n; ++y) {
    int i = n;
    int j = y;
    bool from_south = true;
    for (int steps = 0;; ++steps) {
      if (steps > 2 * n + 2) throw GridFormatError("strand " + std::to_string(y) + " does not terminate");
      const auto cell = static_cast<std::size_t>((i - 1) * n + j - 1);
      auto& slot = from_south ? walk.from_south[cell] : walk.from_west[cell];
      if (slot != 0) throw GridFormatError("two strands share a side at cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
      slot = y;
      const Tile t = grid.at(i, j);
      bool go_north;
      if (from_south) {
        if (t == Tile::Vertical || t == Tile::Cross) {
          go_north = true;
        } else if (t == Tile::RElbow || t == Tile::Bump) {
          go_north = false;
        } else {
          throw GridFormatError("strand " + std::to_string(y) + " blocked entering (" + std::to_string(i) + "," +
                                std::to_string(j) + ") from the south");
        }
      } else {
        if (t == Tile::Horizontal || t == Tile::Cross) {
          go_north = false;
        } else if (t == Tile::JElbow || t == Tile::Bump) {
          go_north = true;
        } else {
          throw GridFormatError("strand " + std::to_string(y) + " blocked entering (" + std::to_string(i) + "," +
                                std::to_string(j) + ") from the west");
        }
      }
      if (go_north) {
        if (i == 1) throw GridFormatError("strand " + std::to_string(y) + " leaves through the north edge");
        --i;
        from_south = true;
      } else {
        if (j == n) {
          walk.exit_row[static_cast<std::size_t>(y - 1)] = i;
          break;
        }
        ++j;
        from_south = false;
      }
    }
  }
  return walk;
}

int PipeTrace::crossings_between(int a, int b) const {
  auto it = crossings.find({std::min(a, b), std::max(a, b)});
  return it == crossings.end() ? 0 : it->second;
}

bool PipeTrace::reduced() const {
  return std::all_of(crossings.begin(), crossings.end(), [](const auto& kv) { return kv.second <= 1; });
}

namespace {

PipeTrace trace_any(const TileGrid& grid) {
  const auto walk = walk_strands(grid);
  PipeTrace out;
  out.perm = walk.permutation();
  const int n = grid.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Tile t = grid.at(i, j);
      if (t == Tile::Blank) ++out.blank_count;
      if (t == Tile::JElbow) ++out.jelbow_count;
      if (t == Tile::Cross) {
        const int a = walk.south(i, j);
        const int b = walk.west(i, j);
        ++out.crossings[{std::min(a, b), std::max(a, b)}];
      }
    }
  }
  return out;
}

}  // namespace

PipeTrace trace(const BpdGrid& grid) { return trace_any(grid); }
PipeTrace trace(const ResolvedGrid& grid) { return trace_any(grid); }

Asm::Asm(int n, std::vector<std::int8_t> row_major) : n_(n), entries_(std::move(row_major)) {
  if (entries_.size() != static_cast<std::size_t>(n * n)) throw InconsistentAsm("entry count does not match size");
}

Asm Asm::parse(std::string_view text) {
  std::vector<std::vector<std::int8_t>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::int8_t> row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const bool tokenized = line.find_first_of(" \t") != std::string::npos &&
                           line.find_first_not_of(" \t\r") != line.find_last_not_of(" \t\r");
    if (tokenized) {
      std::istringstream tok(line);
      std::string t;
      while (tok >> t) {
        if (t == "0") row.push_back(0);
        else if (t == "1" || t == "+1" || t == "+") row.push_back(1);
        else if (t == "-1" || t == "-") row.push_back(-1);
        else throw InconsistentAsm("bad ASM entry '" + t + "'");
      }
    } else {
      for (char c : line) {
        if (c == ' ' || c == '\r' || c == '\t') continue;
        if (c == '0') row.push_back(0);
        else if (c == '+' || c == '1') row.push_back(1);
        else if (c == '-') row.push_back(-1);
        else throw InconsistentAsm(std::string("bad ASM entry '") + c + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  std::vector<std::int8_t> flat;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw InconsistentAsm("ASM rows must have length " + std::to_string(n));
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return {n, std::move(flat)};
}

Asm Asm::identity(int n) {
  Asm a(n);
  for (int i = 1; i <= n; ++i) a.set(i, i, 1);
  return a;
}

int Asm::count(int value) const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), static_cast<std::int8_t>(value)));
}

Asm Asm::minor(std::span<const int> rows, std::span<const int> cols) const {
  std::vector<int> keep_r;
  std::vector<int> keep_c;
  for (int i = 1; i <= n_; ++i) {
    if (std::find(rows.begin(), rows.end(), i) == rows.end()) keep_r.push_back(i);
    if (std::find(cols.begin(), cols.end(), i) == cols.end()) keep_c.push_back(i);
  }
  if (keep_r.size() != keep_c.size()) throw InconsistentAsm("minor must delete as many rows as columns");
  Asm out(static_cast<int>(keep_r.size()));
  for (std::size_t a = 0; a < keep_r.size(); ++a) {
    for (std::size_t b = 0; b < keep_c.size(); ++b) {
      out.set(static_cast<int>(a + 1), static_cast<int>(b + 1), at(keep_r[a], keep_c[b]));
    }
  }
  return out;
}

std::string Asm::to_string() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += '\n';
    for (int j = 1; j <= n_; ++j) {
      const int v = at(i, j);
      out += v > 0 ? '+' : (v < 0 ? '-' : '0');
    }
  }
  return out;
}

std::optional<std::string> asm_violation(const Asm& a) {
  const int n = a.size();
  auto check_line = [&](bool is_row, int k) -> std::optional<std::string> {
    int partial = 0;
    for (int t = 1; t <= n; ++t) {
      const int v = is_row ? a.at(k, t) : a.at(t, k);
      if (v < -1 || v > 1) return std::string("entry out of range");
      partial += v;
      if (partial < 0 || partial > 1) {
        return std::string(is_row ? "row " : "column ") + std::to_string(k) + " does not alternate in sign";
      }
    }
    if (partial != 1) return std::string(is_row ? "row " : "column ") + std::to_string(k) + " does not sum to 1";
    return std::nullopt;
  };
  for (int k = 1; k <= n; ++k) {
    if (auto e = check_line(true, k)) return e;
    if (auto e = check_line(false, k)) return e;
  }
  return std::nullopt;
}

Asm to_asm(const BpdGrid& grid) {
  const int n = grid.size();
  Asm a(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Tile t = grid.at(i, j);
      a.set(i, j, t == Tile::RElbow ? 1 : (t == Tile::JElbow ? -1 : 0));
    }
  }
  return a;
}

BpdGrid from_asm(const Asm& a) {
  if (auto e = asm_violation(a)) throw InconsistentAsm(*e);
  const int n = a.size();
  BpdGrid g(n);
  // column sums from the top: the south side of (i, j) is occupied iff the
  // entries of column j in rows 1..i sum to 1; likewise east sides by rows.
  std::vector<int> col_sum(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int row_sum = 0;
    for (int j = 1; j <= n; ++j) {
      const int v = a.at(i, j);
      const bool north = col_sum[static_cast<std::size_t>(j)] == 1;
      const bool west = row_sum == 1;
      col_sum[static_cast<std::size_t>(j)] += v;
      row_sum += v;
      const bool south = col_sum[static_cast<std::size_t>(j)] == 1;
      const bool east = row_sum == 1;
      std::uint8_t mask = 0;
      if (north) mask |= North;
      if (south) mask |= South;
      if (west) mask |= West;
      if (east) mask |= East;
      g.set(i, j, tile_from_sides(mask));
    }
  }
  return g;
}

RenderFormat parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "json") return RenderFormat::Json;
  if (name == "svg") return RenderFormat::Svg;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (ascii|json|svg)");
}

namespace {

std::string render_json(const TileGrid& g, const Permutation& perm) {
  nlohmann::json j;
  j["n"] = g.size();
  j["tiles"] = g.rows();
  j["perm"] = std::vector<int>(perm.word().begin(), perm.word().end());
  return j.dump();
}

std::string render_svg(const TileGrid& g) {
  constexpr int cell = 40;
  constexpr int half = cell / 2;
  const int n = g.size();
  const auto walk = walk_strands(g);
  static constexpr std::array<const char*, 8> palette = {"#d95f02", "#1b9e77", "#7570b3", "#e7298a",
                                                         "#66a61e", "#e6ab02", "#a6761d", "#1f78b4"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n * cell << "\" height=\"" << n * cell
      << "\" viewBox=\"0 0 " << n * cell << ' ' << n * cell << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int k = 0; k <= n; ++k) {
    out << "<line x1=\"0\" y1=\"" << k * cell << "\" x2=\"" << n * cell << "\" y2=\"" << k * cell
        << "\" stroke=\"#ccc\"/>\n";
    out << "<line x1=\"" << k * cell << "\" y1=\"0\" x2=\"" << k * cell << "\" y2=\"" << n * cell
        << "\" stroke=\"#ccc\"/>\n";
  }
  for (int y = 1; y <= n; ++y) {
    // follow strand y and emit one path
    std::ostringstream d;
    int i = n;
    int j = y;
    bool from_south = true;
    d << "M " << (j - 1) * cell + half << ' ' << n * cell;
    while (true) {
      const int x0 = (j - 1) * cell;
      const int y0 = (i - 1) * cell;
      const Tile t = g.at(i, j);
      bool go_north;
      if (from_south) {
        go_north = t == Tile::Vertical || t == Tile::Cross;
      } else {
        go_north = t == Tile::JElbow || t == Tile::Bump;
      }
      if (from_south && go_north) {
        d << " L " << x0 + half << ' ' << y0;
      } else if (!from_south && !go_north) {
        d << " L " << x0 + cell << ' ' << y0 + half;
      } else if (from_south) {
        d << " A " << half << ' ' << half << " 0 0 1 " << x0 + cell << ' ' << y0 + half;
      } else {
        d << " A " << half << ' ' << half << " 0 0 0 " << x0 + half << ' ' << y0;
      }
      if (go_north) {
        --i;
        from_south = true;
      } else {
        if (j == n) break;
        ++j;
        from_south = false;
      }
    }
    out << "<path d=\"" << d.str() << "\" fill=\"none\" stroke=\"" << palette[static_cast<std::size_t>(y - 1) % palette.size()]
        << "\" stroke-width=\"4\"/>\n";
  }
  (void)walk;
  out << "</svg>\n";
  return out.str();
}

std::string render_any(const TileGrid& g, RenderFormat format) {
  switch (format) {
    case RenderFormat::Ascii: return g.to_ascii();
    case RenderFormat::Json: return render_json(g, walk_strands(g).permutation());
    case RenderFormat::Svg: return render_svg(g);
  }
  return {};
}

}  // namespace

std::string render(const BpdGrid& grid, RenderFormat format) { return render_any(grid, format); }
std::string render(const ResolvedGrid& grid, RenderFormat format) { return render_any(grid, format); }

BpdGrid grid_from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw GridFormatError(std::string("bad grid json: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("tiles")) throw GridFormatError("grid json needs 'n' and 'tiles'");
  const int n = j.at("n").get<int>();
  const auto rows = j.at("tiles").get<std::vector<std::string>>();
  if (static_cast<int>(rows.size()) != n) throw GridFormatError("grid json: tile rows do not match n");
  std::string ascii;
  for (const auto& r : rows) ascii += r + "\n";
  auto g = BpdGrid::from_ascii(ascii);
  if (g.size() != n) throw GridFormatError("grid json: tile rows do not match n");
  return g;
}

}  // namespace pipedream
