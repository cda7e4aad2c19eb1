#include <doctest.h>

#include <json.hpp>

#include "pipedream/enumeration.hpp"
#include "pipedream/verify.hpp"
#include "support.hpp"

using namespace pipedream;

TEST_CASE("every check passes at small sizes") {
  Specializer evaluator;
  for (const auto& id : check_ids()) {
    const auto report = run_check(id, 5, evaluator);
    INFO(report.to_text());
    CHECK(report.passed());
    CHECK(report.instances_checked > 0);
    CHECK(report.check_id == id);
    CHECK(report.n == 5);
  }
}

TEST_CASE("upper bound is strict at 1243") {
  const auto report = run_check("upper-bound", 4);
  CHECK(report.passed());
  CHECK(std::find(report.notes.begin(), report.notes.end(), "1243: nu=3 < bound=4") != report.notes.end());
}

TEST_CASE("exhaustive theorem checks at size 6") {
  Specializer evaluator;
  for (const char* id : {"thm-1243", "reduced-restriction", "weight-preservation", "groth-1243-2143", "pattern-sum", "stanley", "gao-bound"}) {
    const auto report = run_check(id, 6, evaluator);
    INFO(report.to_text());
    CHECK(report.passed());
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(run_check("no-such-check", 3), UnknownCheck);
  CHECK_THROWS_AS(run_check("bijection-roundtrip", kCatalogMaxSize + 1), GuardExceeded);
  Specializer small(3);
  CHECK_THROWS_AS(run_check("conj-gao", 4, small), GuardExceeded);
}

TEST_CASE("reports serialize") {
  const auto report = run_check("conj-gao", 4);
  CHECK(report.passed());
  const auto j = nlohmann::json::parse(report.to_json());
  CHECK(j["check_id"] == "conj-gao");
  CHECK(j["n"] == 4);
  CHECK(j["passed"] == true);
  CHECK(j["failures"].empty());
  CHECK(j["instances_checked"].get<std::uint64_t>() == report.instances_checked);
  CHECK(report.to_text().rfind("conj-gao n<=4: pass", 0) == 0);
}

TEST_CASE("maxima at beta one up to size 6") {
  struct Row {
    int n;
    std::int64_t nu;
    std::int64_t c;
    std::vector<const char*> argmax;
  };
  const std::vector<Row> table = {
      {0, 1, 1, {""}},          {1, 1, 0, {"1"}},      {2, 1, 0, {"12", "21"}},
      {3, 3, 2, {"132"}},       {4, 11, 4, {"1432"}},  {5, 71, 44, {"12543", "21543"}},
      {6, 1101, 828, {"132654"}},
  };
  Specializer evaluator;
  for (const auto& row : table) {
    const auto got = maxima_table(row.n, 1, evaluator);
    std::vector<Permutation> expected;
    for (const char* w : row.argmax) expected.push_back(perm(w));
    CHECK(got.n == row.n);
    CHECK(got.max_nu == Integer(row.nu));
    CHECK(got.max_c == Integer(row.c));
    CHECK(got.argmax_nu == expected);
    CHECK(got.argmax_c == expected);
    CHECK(got.argmax_agree);
    CHECK(got.argmax_layered);
  }
}

TEST_CASE("maxima at other beta values are consistent with the tables") {
  Specializer evaluator;
  for (std::int64_t beta : {0, 2}) {
    for (int n = 0; n <= 5; ++n) {
      const auto row = maxima_table(n, beta, evaluator);
      const auto& nu = evaluator.nu_values(n, beta);
      const auto& c = evaluator.coefficient_values(n, beta);
      CHECK(row.max_nu == *std::max_element(nu.begin(), nu.end()));
      CHECK(row.max_c == *std::max_element(c.begin(), c.end()));
      for (const auto& w : row.argmax_nu) CHECK(nu[w.rank()] == row.max_nu);
      for (const auto& w : row.argmax_c) CHECK(c[w.rank()] == row.max_c);
      CHECK(std::is_sorted(row.argmax_nu.begin(), row.argmax_nu.end()));
      CHECK_FALSE(row.argmax_c.empty());
    }
  }
}
