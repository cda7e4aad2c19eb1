#include "pipedream/ktheory.hpp"

#include <algorithm>
#include <vector>

namespace pipedream {

Resolution resolve(const BpdGrid& grid, ScanOrder order) {
  const int n = grid.size();
  std::vector<std::pair<int, int>> crosses;
  if (order == ScanOrder::ColumnMajor) {
    for (int j = 1; j <= n; ++j) {
      for (int i = n; i >= 1; --i) {
        if (grid.at(i, j) == Tile::Cross) crosses.emplace_back(i, j);
      }
    }
  } else {
    for (int i = n; i >= 1; --i) {
      for (int j = 1; j <= n; ++j) {
        if (grid.at(i, j) == Tile::Cross) crosses.emplace_back(i, j);
      }
    }
  }

  TileGrid work = grid;
  std::vector<std::pair<int, int>> retained;
  for (const auto& [i, j] : crosses) {
    const auto walk = walk_strands(work);
    const int a = walk.south(i, j);
    const int b = walk.west(i, j);
    const bool seen = std::any_of(retained.begin(), retained.end(), [&](const auto& p) {
      const int c = walk.south(p.first, p.second);
      const int d = walk.west(p.first, p.second);
      return (c == a && d == b) || (c == b && d == a);
    });
    if (seen) {
      work.set(i, j, Tile::Bump);
    } else {
      retained.emplace_back(i, j);
    }
  }
  Resolution out{ResolvedGrid(work), {}};
  out.type = walk_strands(out.grid).permutation();
  return out;
}

BpdGrid unresolve(const ResolvedGrid& grid) {
  BpdGrid out(grid.size());
  for (int i = 1; i <= grid.size(); ++i) {
    for (int j = 1; j <= grid.size(); ++j) {
      const Tile t = grid.at(i, j);
      out.set(i, j, t == Tile::Bump ? Tile::Cross : t);
    }
  }
  return out;
}

BetaPolynomial beta_weight(int blanks, int jelbows, int reference_length) {
  if (blanks < reference_length) {
    throw NegativeExponent("blank count " + std::to_string(blanks) + " is below reference length " +
                           std::to_string(reference_length));
  }
  return BetaPolynomial::beta_power(static_cast<unsigned>(blanks - reference_length)) *
         BetaPolynomial::one_plus_beta_power(static_cast<unsigned>(jelbows));
}

BetaPolynomial beta_weight(const TileGrid& grid, int reference_length) {
  return beta_weight(grid.count(Tile::Blank), grid.count(Tile::JElbow), reference_length);
}

std::optional<NonreducedWitness> nonreduced_witness(const BpdGrid& grid) {
  const auto tr = trace(grid);
  if (tr.reduced()) return std::nullopt;
  std::pair<int, int> pipes{0, 0};
  int times = 0;
  for (const auto& [pair, count] : tr.crossings) {
    if (count >= 2) {
      pipes = pair;
      times = count;
      break;
    }
  }
  NonreducedWitness out{};
  out.parity = times % 2 == 0 ? NonreducedWitness::Parity::Even : NonreducedWitness::Parity::Odd;
  out.pattern = Permutation::parse(out.parity == NonreducedWitness::Parity::Even ? "1243" : "2143");
  out.pipes = pipes;

  const auto& w = tr.perm;
  const auto inv = w.inverse();
  const int pa = inv(pipes.first);
  const int pb = inv(pipes.second);
  std::optional<SubwordSelection> any;
  for (const auto& sel : subwords(w, 4)) {
    if (flatten(sel) != out.pattern) continue;
    const auto idx = sel.indices();
    const bool anchored = (idx[0] == std::min(pa, pb) && idx[1] == std::max(pa, pb));
    if (anchored) {
      out.occurrence = sel;
      out.anchored = true;
      any.reset();
      break;
    }
    if (!any) any = sel;
  }
  if (!out.anchored) {
    if (!any) {
      throw WitnessNotFound("permutation " + w.to_string() + " avoids " + out.pattern.to_string());
    }
    out.occurrence = *any;
  }
  const auto type = resolve(grid).type;
  if (!contains_pattern(type, Permutation::parse("2143"))) {
    throw WitnessNotFound("type " + type.to_string() + " avoids 2143");
  }
  return out;
}

}  // namespace pipedream
