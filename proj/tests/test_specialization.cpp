#include <doctest.h>

#include <map>

#include "oracles/divided_difference.hpp"
#include "oracles/patterns.hpp"
#include "pipedream/enumeration.hpp"
#include "pipedream/specialization.hpp"
#include "support.hpp"

using namespace pipedream;

namespace {

std::vector<int> word_of(const Permutation& w) { return {w.word().begin(), w.word().end()}; }

oracle::Poly as_oracle(const MultivariatePolynomial& p, int n) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) {
    auto padded = e;
    padded.resize(static_cast<std::size_t>(n), 0);
    const auto coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (!coeffs[k].is_zero()) oracle::add(out, {padded, static_cast<int>(k)}, *coeffs[k].to_int64());
    }
  }
  return out;
}

BetaPolynomial from_coeffs(const std::vector<std::int64_t>& c) {
  std::vector<Integer> v(c.begin(), c.end());
  return BetaPolynomial(v);
}

// c_w straight from its defining recursion, with nu from divided differences
std::map<std::vector<int>, BetaPolynomial> oracle_coefficients(int max_n) {
  std::map<std::vector<int>, BetaPolynomial> c;
  for (int n = 0; n <= max_n; ++n) {
    oracle::Grothendieck g(n);
    for (const auto& w : all_permutations(n)) {
      auto value = n == 0 ? BetaPolynomial(1) : from_coeffs(g.at_ones(word_of(w)));
      for (const auto& [u, cu] : c) {
        if (static_cast<int>(u.size()) < n) value -= cu * Integer(static_cast<std::int64_t>(oracle::count_occurrences(u, word_of(w))));
      }
      c.emplace(word_of(w), value);
    }
  }
  return c;
}

}  // namespace

TEST_CASE("grothendieck polynomials of small permutations") {
  Specializer evaluator;
  CHECK(evaluator.grothendieck(Permutation::identity(3)).to_string() == "1");
  CHECK(evaluator.grothendieck(Permutation()).to_string() == "1");
  CHECK(evaluator.grothendieck(perm("21")).to_string() == "x1");
  CHECK(evaluator.grothendieck(perm("132")).to_string() == "x1+x2+b*x1*x2");
  CHECK(evaluator.grothendieck(perm("132")).at_beta_zero().to_string() == "x1+x2");
}

TEST_CASE("grothendieck polynomials agree with divided differences") {
  Specializer evaluator;
  for (int n = 1; n <= 5; ++n) {
    oracle::Grothendieck g(n);
    for (const auto& w : all_permutations(n)) {
      const auto ours = evaluator.grothendieck(w);
      CHECK(as_oracle(ours, n) == g.of(word_of(w)));
      for (const auto& [e, c] : ours.terms()) CHECK(c.nonnegative());
      CHECK(ours.at_all_ones() == from_coeffs(g.at_ones(word_of(w))));
    }
  }
}

TEST_CASE("principal specializations") {
  Specializer evaluator;
  CHECK(evaluator.nu(perm("1243")) == BetaPolynomial({3, 3, 1}));
  CHECK(evaluator.nu(Permutation()) == BetaPolynomial(1));
  CHECK(evaluator.nu(Permutation::identity(6)) == BetaPolynomial(1));
  CHECK(evaluator.nu(perm("1432")).constant_term() == Integer(5));
  CHECK(evaluator.nu(perm("132")) == BetaPolynomial({2, 1}));
  for (int n = 0; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto v = evaluator.nu(w);
      CHECK(v.nonnegative());
      CHECK(evaluator.nu_by_weights(w) == v);
      CHECK(evaluator.grothendieck(w).at_all_ones() == v);
      CHECK(v.constant_term() == Integer(static_cast<std::int64_t>(query({SetKind::bpd, w, {}}).size())));
    }
  }
  for (const auto& v : evaluator.nu_table(6)) CHECK(v.nonnegative());
}

TEST_CASE("pattern coefficients") {
  Specializer evaluator;
  CHECK(evaluator.coefficient(perm("1243")) == BetaPolynomial({0, 1, 1}));
  CHECK(evaluator.coefficient(perm("1243")).constant_term() == Integer(0));
  CHECK(evaluator.coefficient(perm("132")) == BetaPolynomial({1, 1}));
  for (int n = 0; n <= 4; ++n) {
    for (const auto& w : all_permutations(n)) {
      const bool special = w.empty() || w == perm("132") || w == perm("1432");
      CHECK(evaluator.coefficient(w).constant_term() == Integer(special ? 1 : 0));
    }
  }
}

TEST_CASE("coefficients agree with the defining recursion computed independently") {
  Specializer evaluator;
  for (const auto& [w, c] : oracle_coefficients(5)) {
    CHECK(evaluator.coefficient(Permutation::parse(w)) == c);
  }
}

TEST_CASE("recursive and inclusion-exclusion coefficients agree") {
  Specializer evaluator;
  for (int n = 0; n <= 6; ++n) {
    const auto& table = evaluator.coefficient_table(n);
    for (const auto& w : all_permutations(n)) {
      const auto rec = evaluator.coefficient(w, CoefficientMode::Recursive);
      CHECK(rec == evaluator.coefficient(w, CoefficientMode::InclusionExclusion));
      CHECK(rec == table[w.rank()]);
    }
  }
}

TEST_CASE("nu is the sum of coefficients over subwords") {
  Specializer evaluator;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      BetaPolynomial sum;
      for (int m = 0; m <= n; ++m) {
        for (const auto& v : subwords(w, m)) sum += evaluator.coefficient(flatten(v));
      }
      CHECK(sum == evaluator.nu(w));
    }
  }
}

TEST_CASE("coefficients are nonnegative up to size 6") {
  Specializer evaluator;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& c : evaluator.coefficient_table(n)) CHECK(c.nonnegative());
  }
}

TEST_CASE("lower bounds on nu") {
  Specializer evaluator;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto value = evaluator.nu(w).constant_term();
      const auto p132 = pattern_count(perm("132"), w);
      const auto p1432 = pattern_count(perm("1432"), w);
      CHECK(value >= Integer(static_cast<std::int64_t>(1 + p132 + p1432)));
      CHECK((value == Integer(2)) == (p132 == 1));
    }
  }
}

TEST_CASE("skew sums factor") {
  Specializer evaluator;
  const auto one = skew_identities(perm("1"), perm("1"));
  CHECK(one.sum == perm("21"));
  CHECK(one.nu_sum == BetaPolynomial(1));
  CHECK(one.holds());
  const auto r = evaluator.skew_identities(perm("132"), perm("1"));
  CHECK(r.sum == perm("2431"));
  CHECK(r.holds());
  const auto d = evaluator.skew_identities(perm("21"), perm("21"));
  CHECK(d.sum == perm("4321"));
  CHECK(d.c_sum.is_zero());
  CHECK(d.holds());
  for (int total = 0; total <= 6; ++total) {
    for (int m = 0; m <= total; ++m) {
      for (const auto& u : all_permutations(m)) {
        for (const auto& v : all_permutations(total - m)) CHECK(evaluator.skew_identities(u, v).holds());
      }
    }
  }
}

TEST_CASE("evaluated tables match the polynomial tables") {
  Specializer evaluator;
  for (int n = 0; n <= 6; ++n) {
    for (std::int64_t beta : {0, 1, 2, -1}) {
      const auto& nu = evaluator.nu_values(n, beta);
      const auto& c = evaluator.coefficient_values(n, beta);
      for (std::size_t r = 0; r < nu.size(); ++r) {
        CHECK(nu[r] == evaluator.nu_table(n)[r].evaluate(beta));
        CHECK(c[r] == evaluator.coefficient_table(n)[r].evaluate(beta));
      }
    }
  }
}

TEST_CASE("pattern rank matches the lexicographic rank") {
  for (int m = 0; m <= 6; ++m) {
    for (const auto& u : all_permutations(m)) CHECK(pattern_rank(u.word().data(), m) == u.rank());
  }
  const int values[] = {40, 7, 19, 3};
  CHECK(pattern_rank(values, 4) == perm("4231").rank());
}

TEST_CASE("guard and seeding") {
  Specializer evaluator(4);
  CHECK_THROWS_AS(evaluator.nu(perm("12345")), GuardExceeded);
  CHECK_THROWS_AS(evaluator.grothendieck(perm("12345")), GuardExceeded);
  evaluator.seed_nu(perm("1243"), BetaPolynomial({3, 3, 1}));
  CHECK(evaluator.known_nu().at(perm("1243")) == BetaPolynomial({3, 3, 1}));
  CHECK(evaluator.nu(perm("1243")) == BetaPolynomial({3, 3, 1}));
  evaluator.set_guard(5);
  CHECK(evaluator.nu(perm("12345")) == BetaPolynomial(1));
}
