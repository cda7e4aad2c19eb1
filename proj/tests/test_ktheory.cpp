#include <doctest.h>

#include "pipedream/enumeration.hpp"
#include "pipedream/ktheory.hpp"
#include "support.hpp"

using namespace pipedream;

TEST_CASE("resolution of the fixture grids") {
  const auto first = fixture_grid("bpd_first.txt");
  const auto r = resolve(first);
  CHECK(r.type == perm("4261753"));
  CHECK(r.grid == ResolvedGrid::from_ascii(read_fixture("bpd_first_resolved.txt")));
  CHECK(unresolve(r.grid) == first);
  CHECK(trace(r.grid).perm == perm("4261753"));

  const auto second = fixture_grid("bpd_second.txt");
  const auto s = resolve(second);
  CHECK(s.type == perm("2346175"));
  CHECK(static_cast<const TileGrid&>(s.grid) == static_cast<const TileGrid&>(second));
}

TEST_CASE("resolution properties on every diagram up to size 5") {
  int nonreduced = 0;
  int type_equals_perm_nonreduced = 0;
  for (int n = 1; n <= 5; ++n) {
    for_each_asm(n, [&](const Asm& a) {
      const auto g = from_asm(a);
      const auto t = trace(g);
      const auto col = resolve(g, ScanOrder::ColumnMajor);
      const auto row = resolve(g, ScanOrder::RowMajor);
      CHECK(col.grid == row.grid);
      CHECK(col.type == row.type);
      CHECK(unresolve(col.grid) == g);
      const auto again = trace(col.grid);
      CHECK(again.reduced());
      CHECK(again.perm == col.type);
      CHECK(resolve(unresolve(col.grid)).grid == col.grid);
      if (t.reduced()) {
        CHECK(col.type == t.perm);
        CHECK(static_cast<const TileGrid&>(col.grid) == static_cast<const TileGrid&>(g));
      } else {
        ++nonreduced;
        type_equals_perm_nonreduced += col.type == t.perm;
      }
    });
  }
  CHECK(nonreduced > 0);
  // reduced implies type = permutation, but not conversely
  CHECK(type_equals_perm_nonreduced > 0);
}

TEST_CASE("a nonreduced diagram whose type equals its permutation") {
  const auto g = fixture_grid("removal_image.txt");
  const auto t = trace(g);
  CHECK(t.perm == perm("21543"));
  CHECK_FALSE(t.reduced());
  CHECK(t.crossings_between(1, 2) == 3);
  CHECK(resolve(g).type == perm("21543"));
}

TEST_CASE("beta weight") {
  CHECK(beta_weight(0, 0, 0) == BetaPolynomial(1));
  CHECK(beta_weight(3, 2, 1) == BetaPolynomial({0, 0, 1, 2, 1}));
  CHECK_THROWS_AS(beta_weight(1, 0, 2), NegativeExponent);
  const auto second = fixture_grid("bpd_second.txt");
  CHECK(beta_weight(second, coxeter_length(trace(second).perm)) ==
        BetaPolynomial::one_plus_beta_power(static_cast<unsigned>(second.count(Tile::JElbow))));
  CHECK(beta_weight(BpdGrid::from_ascii("r"), 0) == BetaPolynomial(1));
}

TEST_CASE("weights of the diagrams with permutation 1243") {
  std::vector<BetaPolynomial> reduced_weights;
  for (const char* name : {"red_1.txt", "red_2.txt", "red_3.txt", "red_4.txt"}) {
    const auto g = fixture_grid(name);
    const auto t = trace(g);
    CHECK(t.perm == perm("1243"));
    if (t.reduced()) reduced_weights.push_back(beta_weight(g, 1));
  }
  REQUIRE(reduced_weights.size() == 3);
  std::sort(reduced_weights.begin(), reduced_weights.end(),
            [](const BetaPolynomial& a, const BetaPolynomial& b) { return a.degree() < b.degree(); });
  CHECK(reduced_weights[0] == BetaPolynomial(1));
  CHECK(reduced_weights[1] == BetaPolynomial({1, 1}));
  CHECK(reduced_weights[2] == BetaPolynomial({1, 2, 1}));
  CHECK(reduced_weights[0] + reduced_weights[1] + reduced_weights[2] == BetaPolynomial({3, 3, 1}));
  CHECK_FALSE(trace(fixture_grid("red_4.txt")).reduced());
  CHECK(resolve(fixture_grid("red_4.txt")).type == perm("2143"));
}

TEST_CASE("weight specializations on every diagram up to size 5") {
  for (int n = 1; n <= 5; ++n) {
    for_each_asm(n, [&](const Asm& a) {
      const auto g = from_asm(a);
      const auto t = trace(g);
      const auto type = resolve(g).type;
      const auto w = beta_weight(g, coxeter_length(type));
      CHECK(w.evaluate(1) == Integer::pow(2, static_cast<unsigned>(t.jelbow_count)));
      CHECK(w.nonnegative());
      const int own = coxeter_length(t.perm);
      if (t.blank_count >= own) {
        CHECK((beta_weight(g, own).evaluate(0) == Integer(1)) == t.reduced());
      } else {
        CHECK_FALSE(t.reduced());
      }
    });
  }
}

TEST_CASE("nonreduced witness") {
  CHECK_FALSE(nonreduced_witness(fixture_grid("bpd_second.txt")));
  const auto w4 = nonreduced_witness(fixture_grid("red_4.txt"));
  REQUIRE(w4);
  CHECK(w4->parity == NonreducedWitness::Parity::Even);
  CHECK(w4->pattern == perm("1243"));
  CHECK(flatten(w4->occurrence) == perm("1243"));

  for (int n = 1; n <= 5; ++n) {
    for_each_asm(n, [&](const Asm& a) {
      const auto g = from_asm(a);
      const auto t = trace(g);
      const auto witness = nonreduced_witness(g);
      CHECK(witness.has_value() != t.reduced());
      if (!witness) return;
      const int crossings = t.crossings_between(witness->pipes.first, witness->pipes.second);
      CHECK(crossings >= 2);
      CHECK((witness->parity == NonreducedWitness::Parity::Even) == (crossings % 2 == 0));
      CHECK(witness->pattern == perm(crossings % 2 == 0 ? "1243" : "2143"));
      CHECK(flatten(witness->occurrence) == witness->pattern);
      CHECK(witness->occurrence.host() == t.perm);
      CHECK((contains_pattern(t.perm, perm("1243")) || contains_pattern(t.perm, perm("2143"))));
      CHECK(contains_pattern(resolve(g).type, perm("2143")));
    });
  }
}
