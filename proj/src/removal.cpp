#include "pipedream/removal.hpp"

#include <algorithm>

namespace pipedream {

Removal remove_pipes(const BpdGrid& grid) {
  const auto report = removable_pipes(grid);
  std::vector<int> rows;
  std::vector<int> cols;
  for (const auto& p : report.pipes) {
    rows.push_back(p.row);
    cols.push_back(p.column);
  }
  return {from_asm(to_asm(grid).minor(rows, cols)), report.subword};
}

Removal remove_pipes_by_contraction(const BpdGrid& grid) {
  const auto report = removable_pipes(grid);
  const int n = grid.size();
  TileGrid work = grid;
  auto drop = [&](int i, int j, std::uint8_t mask) {
    work.set(i, j, tile_from_sides(static_cast<std::uint8_t>(sides(work.at(i, j)) & ~mask)));
  };
  for (const auto& p : report.pipes) {
    drop(p.row, p.column, South | East);
    for (int i = p.row + 1; i <= n; ++i) drop(i, p.column, North | South);
    for (int j = p.column + 1; j <= n; ++j) drop(p.row, j, West | East);
  }
  std::vector<int> keep_rows;
  std::vector<int> keep_cols;
  for (int k = 1; k <= n; ++k) {
    if (std::none_of(report.pipes.begin(), report.pipes.end(), [&](const auto& p) { return p.row == k; })) {
      keep_rows.push_back(k);
    }
    if (std::none_of(report.pipes.begin(), report.pipes.end(), [&](const auto& p) { return p.column == k; })) {
      keep_cols.push_back(k);
    }
  }
  const int m = static_cast<int>(keep_rows.size());
  BpdGrid image(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      image.set(a + 1, b + 1, work.at(keep_rows[static_cast<std::size_t>(a)], keep_cols[static_cast<std::size_t>(b)]));
    }
  }
  return {image, report.subword};
}

BpdGrid insert_pipes(const BpdGrid& image, const Permutation& w, const SubwordSelection& v) {
  const int n = w.size();
  const int m = image.size();
  if (v.host() != w) throw SubwordMismatch("subword is not a selection of " + w.to_string());
  if (v.size() != m) throw SubwordMismatch("subword length differs from the image size");
  if (validate(image)) throw SubwordMismatch("image is not a valid diagram");
  if (trace(image).perm != flatten(v)) {
    throw SubwordMismatch("image permutation differs from the flattened subword " + v.to_string());
  }
  if (!removable_pipes(image).minimal()) throw NotMinimal("image has a removable pipe");

  const auto s = std::vector<int>(v.indices().begin(), v.indices().end());
  const auto t = v.sorted_values();
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);  // image row placed at host row, or 0
  std::vector<int> col_of(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < m; ++k) {
    row_of[static_cast<std::size_t>(s[static_cast<std::size_t>(k)])] = k + 1;
    col_of[static_cast<std::size_t>(t[static_cast<std::size_t>(k)])] = k + 1;
  }
  // image row / column index just before a host position
  auto image_index_before = [&](const std::vector<int>& placed, int pos) {
    int last = 0;
    for (int k = 1; k < pos; ++k) {
      if (placed[static_cast<std::size_t>(k)]) last = placed[static_cast<std::size_t>(k)];
    }
    return last;
  };

  TileGrid out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int a = row_of[static_cast<std::size_t>(i)];
      const int b = col_of[static_cast<std::size_t>(j)];
      if (a && b) {
        out.set(i, j, image.at(a, b));
      } else if (a) {
        // gap column: horizontal iff the image has a strand on the boundary east of image column `left`
        const int left = image_index_before(col_of, j);
        const bool open = left == m || (left > 0 && (sides(image.at(a, left)) & East));
        out.set(i, j, open ? Tile::Horizontal : Tile::Blank);
      } else if (b) {
        // gap row: vertical iff the image has a strand on the boundary south of image row `above`
        const int above = image_index_before(row_of, i);
        const bool open = above == m || (above > 0 && (sides(image.at(above, b)) & South));
        out.set(i, j, open ? Tile::Vertical : Tile::Blank);
      }
    }
  }
  const auto kept = v.values();
  const auto inv = w.inverse();
  auto add = [&](int i, int j, std::uint8_t mask) {
    out.set(i, j, tile_from_sides(static_cast<std::uint8_t>(sides(out.at(i, j)) | mask)));
  };
  for (int y = 1; y <= n; ++y) {
    if (std::find(kept.begin(), kept.end(), y) != kept.end()) continue;
    const int x = inv(y);
    if (out.at(x, y) != Tile::Blank) throw SubwordMismatch("hook corner is occupied");
    add(x, y, South | East);
    for (int i = x + 1; i <= n; ++i) add(i, y, North | South);
    for (int j = y + 1; j <= n; ++j) add(x, j, West | East);
  }
  BpdGrid result(out);
  if (auto e = validate(result)) throw SubwordMismatch("insertion produced a broken diagram: " + e->message);
  if (trace(result).perm != w || removable_pipes(result).subword != v) {
    throw SubwordMismatch("insertion does not land in the requested subword class");
  }
  return result;
}

}  // namespace pipedream
