#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "pipedream/integer.hpp"
#include "pipedream/polynomial.hpp"

using namespace pipedream;

TEST_CASE("integer escalates instead of overflowing") {
  const Integer big = std::numeric_limits<std::int64_t>::max();
  const Integer sum = big + Integer(1);
  CHECK_FALSE(sum.is_small());
  CHECK(sum.to_string() == "9223372036854775808");
  CHECK_FALSE(sum.to_int64().has_value());
  CHECK((sum - Integer(1)).is_small());
  CHECK(sum - Integer(1) == big);
  const Integer low = std::numeric_limits<std::int64_t>::min();
  CHECK((-low).to_string() == "9223372036854775808");
  CHECK((low - Integer(1)).to_string() == "-9223372036854775809");
  CHECK(Integer::pow(Integer(2), 100).to_string() == "1267650600228229401496703205376");
  CHECK(Integer::pow(Integer(3), 0) == Integer(1));
  CHECK(Integer::from_string("-1267650600228229401496703205376") == -Integer::pow(Integer(2), 100));
  CHECK(Integer::from_string("+17") == Integer(17));
  CHECK_THROWS(Integer::from_string("1x"));
  CHECK_THROWS(Integer::from_string(""));
}

TEST_CASE("integer arithmetic matches the multiprecision type") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(std::numeric_limits<std::int64_t>::min() / 2,
                                                   std::numeric_limits<std::int64_t>::max() / 2);
  for (int k = 0; k < 2000; ++k) {
    const std::int64_t a = dist(rng);
    const std::int64_t b = dist(rng) >> (k % 40);
    const Integer::Big ba = a;
    const Integer::Big bb = b;
    CHECK((Integer(a) * Integer(b)).to_big() == ba * bb);
    CHECK((Integer(a) + Integer(b) + Integer(a)).to_big() == ba + bb + ba);
    CHECK((Integer(a) - Integer(b) * Integer(3)).to_big() == ba - bb * 3);
    CHECK(((Integer(a) < Integer(b)) == (a < b)));
  }
}

TEST_CASE("beta polynomial basics") {
  CHECK(BetaPolynomial().is_zero());
  CHECK(BetaPolynomial(0).is_zero());
  CHECK(BetaPolynomial({3, 3, 1}).to_string() == "b^2+3b+3");
  CHECK(BetaPolynomial({0, 1, 1}).to_string() == "b^2+b");
  CHECK(BetaPolynomial({1, -2}).to_string() == "-2b+1");
  CHECK(BetaPolynomial().to_string() == "0");
  CHECK(BetaPolynomial::one_plus_beta_power(3) == BetaPolynomial({1, 3, 3, 1}));
  CHECK(BetaPolynomial::beta_power(2) == BetaPolynomial({0, 0, 1}));
  CHECK(BetaPolynomial({3, 3, 1}).evaluate(1) == Integer(7));
  CHECK(BetaPolynomial({3, 3, 1}).evaluate(-1) == Integer(1));
  CHECK(BetaPolynomial({0, 0, 2, 1}).divided_by_beta_power(2) == BetaPolynomial({2, 1}));
  CHECK_THROWS_AS(BetaPolynomial({1, 1}).divided_by_beta_power(1), NegativeExponent);
  CHECK(BetaPolynomial({0, 1, 2}) - BetaPolynomial({0, 1, 2}) == BetaPolynomial());
  CHECK(BetaPolynomial({1, 1}).nonnegative());
  CHECK_FALSE(BetaPolynomial({1, -1}).nonnegative());
}

TEST_CASE("beta polynomial text round trip") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-50, 50);
  for (int k = 0; k < 300; ++k) {
    std::vector<Integer> c(static_cast<std::size_t>(k % 6));
    for (auto& x : c) x = coeff(rng);
    const BetaPolynomial p(c);
    CHECK(BetaPolynomial::parse(p.to_string()) == p);
  }
  CHECK_THROWS(BetaPolynomial::parse("b^+1"));
  CHECK_THROWS(BetaPolynomial::parse(""));
}

TEST_CASE("beta polynomial ring laws") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-9, 9);
  auto random_poly = [&] {
    std::vector<Integer> c(static_cast<std::size_t>(rng() % 5));
    for (auto& x : c) x = coeff(rng);
    return BetaPolynomial(c);
  };
  for (int k = 0; k < 200; ++k) {
    const auto a = random_poly();
    const auto b = random_poly();
    const auto c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).evaluate(2) == a.evaluate(2) * b.evaluate(2));
    CHECK(a.shifted(2).divided_by_beta_power(2) == a);
  }
}

TEST_CASE("multivariate polynomial") {
  MultivariatePolynomial p(2);
  p.add_term({1, 0}, 1);
  p.add_term({0, 1}, 1);
  p.add_term({1, 1}, BetaPolynomial({0, 1}));
  CHECK(p.to_string() == "x1+x2+b*x1*x2");
  CHECK(p.at_all_ones() == BetaPolynomial({2, 1}));
  CHECK(p.at_beta_zero().to_string() == "x1+x2");
  const auto sq = p * p;
  CHECK(sq.at_all_ones() == BetaPolynomial({2, 1}) * BetaPolynomial({2, 1}));
  CHECK((p - p).is_zero());
  CHECK(MultivariatePolynomial::constant(3, 1).to_string() == "1");
  CHECK_THROWS(p.add_term({1}, 1));
}
