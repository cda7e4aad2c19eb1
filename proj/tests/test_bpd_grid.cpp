#include <doctest.h>

#include <json.hpp>
#include <map>
#include <set>

#include "pipedream/bpd_grid.hpp"
#include "pipedream/enumeration.hpp"
#include "pipedream/ktheory.hpp"
#include "support.hpp"

using namespace pipedream;

namespace {

// Walks one strand by hand: heading north or east, turning only at elbows.
struct Walked {
  int exit_row = 0;
  std::set<std::pair<int, int>> crosses;
};

Walked walk(const TileGrid& g, int column) {
  const int n = g.size();
  int row = n;
  int col = column;
  bool north = true;
  Walked out;
  while (col <= n) {
    REQUIRE(row >= 1);
    const Tile t = g.at(row, col);
    if (t == Tile::Cross) out.crosses.emplace(row, col);
    if (north) {
      REQUIRE((t == Tile::Vertical || t == Tile::Cross || t == Tile::RElbow));
      if (t == Tile::RElbow) north = false;
    } else {
      REQUIRE((t == Tile::Horizontal || t == Tile::Cross || t == Tile::JElbow));
      if (t == Tile::JElbow) north = true;
    }
    if (north) {
      --row;
    } else {
      out.exit_row = row;
      ++col;
    }
  }
  return out;
}

struct HandTrace {
  std::vector<int> word;
  std::map<std::pair<int, int>, int> crossings;
};

HandTrace hand_trace(const TileGrid& g) {
  const int n = g.size();
  HandTrace t;
  t.word.assign(static_cast<std::size_t>(n), 0);
  std::vector<Walked> strands;
  for (int y = 1; y <= n; ++y) {
    strands.push_back(walk(g, y));
    t.word[static_cast<std::size_t>(strands.back().exit_row - 1)] = y;
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      int shared = 0;
      for (const auto& c : strands[static_cast<std::size_t>(a - 1)].crosses) shared += strands[static_cast<std::size_t>(b - 1)].crosses.count(c);
      if (shared) t.crossings[{a, b}] = shared;
    }
  }
  return t;
}

}  // namespace

TEST_CASE("tile sides and characters") {
  CHECK(sides(Tile::RElbow) == (South | East));
  CHECK(sides(Tile::JElbow) == (North | West));
  CHECK(sides(Tile::Blank) == 0);
  CHECK(tile_from_sides(North | South | West | East) == Tile::Cross);
  CHECK_THROWS(tile_from_sides(North | East));
  for (char c : std::string(".-|+rjb")) CHECK(tile_char(tile_from_char(c)) == c);
  CHECK_THROWS_AS(tile_from_char('x'), GridFormatError);
  CHECK_THROWS_AS(TileGrid::from_ascii("r.\nr"), GridFormatError);
}

TEST_CASE("validate") {
  CHECK_FALSE(validate(fixture_grid("bpd_first.txt")));
  CHECK_FALSE(validate(fixture_grid("bpd_second.txt")));
  CHECK_FALSE(validate(BpdGrid::from_ascii("r")));
  const auto blank = validate(BpdGrid::from_ascii("."));
  REQUIRE(blank);
  CHECK(blank->kind == GridError::Kind::BrokenStrand);
  const auto leak = validate(BpdGrid::from_ascii("|r\nr+"));
  REQUIRE(leak);
  CHECK(leak->kind == GridError::Kind::BoundaryLeak);
  CHECK(leak->row == 1);
  CHECK(leak->col == 1);
  const auto bump = validate(BpdGrid::from_ascii(".r\nrb"));
  REQUIRE(bump);
  CHECK(bump->kind == GridError::Kind::ForbiddenTile);
  CHECK_FALSE(validate(ResolvedGrid::from_ascii(read_fixture("bpd_first_resolved.txt"))));
  const auto gap = validate(BpdGrid::from_ascii(".r\nr-"));
  REQUIRE(gap);
  CHECK(gap->kind == GridError::Kind::BrokenStrand);
}

TEST_CASE("trace of the fixture grids") {
  const auto first = trace(fixture_grid("bpd_first.txt"));
  CHECK(first.perm == perm("2164753"));
  CHECK_FALSE(first.reduced());
  const auto second = trace(fixture_grid("bpd_second.txt"));
  CHECK(second.perm == perm("2346175"));
  CHECK(second.reduced());
  const auto one = trace(BpdGrid::from_ascii("r"));
  CHECK(one.perm == perm("1"));
  CHECK(one.reduced());
  CHECK(one.blank_count == 0);
  const auto red4 = trace(fixture_grid("red_4.txt"));
  CHECK(red4.perm == perm("1243"));
  CHECK_FALSE(red4.reduced());
}

TEST_CASE("trace agrees with a hand walk on every diagram up to size 5") {
  for (int n = 1; n <= 5; ++n) {
    for_each_asm(n, [&](const Asm& a) {
      const auto g = from_asm(a);
      const auto t = trace(g);
      const auto h = hand_trace(g);
      CHECK(std::vector<int>(t.perm.word().begin(), t.perm.word().end()) == h.word);
      CHECK(t.crossings == h.crossings);
      CHECK(t.blank_count == g.count(Tile::Blank));
      CHECK(t.jelbow_count == g.count(Tile::JElbow));
    });
  }
}

TEST_CASE("asm of the first fixture grid") {
  const auto g = fixture_grid("bpd_first.txt");
  const auto expected = Asm::parse(read_fixture("asm_first.txt"));
  CHECK(to_asm(g) == expected);
  CHECK(from_asm(expected) == g);
  CHECK(expected.count(-1) == trace(g).jelbow_count);
  CHECK(to_asm(BpdGrid::from_ascii("r")) == Asm::identity(1));
  CHECK(from_asm(Asm::identity(1)) == BpdGrid::from_ascii("r"));
  CHECK(from_asm(Asm::identity(3)) == BpdGrid::from_ascii("r--\n|r-\n||r"));
  CHECK(trace(from_asm(Asm::identity(4))).perm == Permutation::identity(4));
  CHECK_THROWS_AS(from_asm(Asm::parse("0+\n00")), InconsistentAsm);
  CHECK(asm_violation(Asm::parse("-+\n++")));
  CHECK_FALSE(asm_violation(Asm::parse("0+0\n+-+\n0+0")));
}

TEST_CASE("asm round trip and alternation") {
  for (int n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for_each_asm(n, [&](const Asm& a) {
      ++count;
      CHECK_FALSE(asm_violation(a));
      const auto g = from_asm(a);
      CHECK_FALSE(validate(g));
      CHECK(to_asm(g) == a);
      CHECK(from_asm(to_asm(g)) == g);
      // elbows alternate r, j, r, ... along every row and column
      for (int line = 1; line <= n; ++line) {
        for (bool by_row : {true, false}) {
          Tile expect = Tile::RElbow;
          for (int k = 1; k <= n; ++k) {
            const Tile t = by_row ? g.at(line, k) : g.at(k, line);
            if (t != Tile::RElbow && t != Tile::JElbow) continue;
            CHECK(t == expect);
            expect = expect == Tile::RElbow ? Tile::JElbow : Tile::RElbow;
          }
          CHECK(expect == Tile::JElbow);
        }
      }
    });
    CHECK(count == enumerate_asm(n).size());
  }
}

TEST_CASE("blank count bounds the length of the type") {
  for (int n = 1; n <= 5; ++n) {
    for_each_asm(n, [&](const Asm& a) {
      const auto g = from_asm(a);
      const auto t = trace(g);
      const int len = coxeter_length(resolve(g).type);
      CHECK(t.blank_count >= len);
      CHECK((t.blank_count == len) == t.reduced());
    });
  }
}

TEST_CASE("render") {
  const auto one = BpdGrid::from_ascii("r");
  CHECK(render(one, RenderFormat::Ascii) == "r");
  const auto two = from_asm(Asm::parse("0+\n+0"));
  CHECK(render(two, RenderFormat::Ascii) == ".r\nr+");
  const auto j = nlohmann::json::parse(render(fixture_grid("bpd_first.txt"), RenderFormat::Json));
  CHECK(j["n"] == 7);
  CHECK(j["perm"] == nlohmann::json::array({2, 1, 6, 4, 7, 5, 3}));
  CHECK(j["tiles"][0] == "....r--");
  const auto svg = render(fixture_grid("bpd_second.txt"), RenderFormat::Svg);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(parse_render_format("json") == RenderFormat::Json);
  CHECK_THROWS(parse_render_format("png"));
  for (int n = 1; n <= 4; ++n) {
    for_each_asm(n, [&](const Asm& a) {
      const auto g = from_asm(a);
      CHECK(grid_from_json(render(g, RenderFormat::Json)) == g);
      CHECK(BpdGrid::from_ascii(render(g, RenderFormat::Ascii)) == g);
    });
  }
}
