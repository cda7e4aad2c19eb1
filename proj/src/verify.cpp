#include "pipedream/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pipedream/enumeration.hpp"
#include "pipedream/ktheory.hpp"
#include "pipedream/removal.hpp"

namespace pipedream {

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["check_id"] = check_id;
  j["n"] = n;
  j["instances_checked"] = instances_checked;
  j["passed"] = passed();
  j["failures"] = failures;
  j["notes"] = notes;
  j["elapsed_seconds"] = elapsed.count();
  return j.dump();
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << check_id << " n<=" << n << ": " << (passed() ? "pass" : "FAIL") << " (" << instances_checked
      << " instances, " << failures.size() << " failures)";
  for (const auto& note : notes) out << "\n  note: " << note;
  for (const auto& f : failures) out << "\n  failure: " << f;
  return out.str();
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "upper-bound",         "thm-1243",    "vexillary-K", "nonreduced-pattern", "bijection-roundtrip",
      "reduced-restriction", "weight-preservation",        "groth-1243-2143",    "conj-gao",
      "conj-groth",          "skew",        "pattern-sum", "stanley",            "bk-order",
      "gao-bound"};
  return ids;
}

namespace {

class Run {
 public:
  Run(CheckReport& report, Specializer& evaluator, const CheckOptions& options)
      : report_(report), evaluator_(evaluator), options_(options) {}

  bool full() const { return report_.failures.size() >= kMaxRecordedFailures; }
  void fail(std::string what) {
    if (!full()) report_.failures.push_back(std::move(what));
  }
  void note(std::string what) { report_.notes.push_back(std::move(what)); }
  void count(std::uint64_t k = 1) { report_.instances_checked += k; }

  Specializer& evaluator() { return evaluator_; }
  const CheckOptions& options() const { return options_; }

 private:
  CheckReport& report_;
  Specializer& evaluator_;
  const CheckOptions& options_;
};

const Permutation& p(const char* word) {
  static std::map<std::string, Permutation> memo;
  auto it = memo.find(word);
  if (it == memo.end()) it = memo.emplace(word, Permutation::parse(std::string_view(word))).first;
  return it->second;
}

/// Every pattern of w (all sizes, including the empty word and w itself) with
/// its occurrence count.
std::map<Permutation, std::uint64_t> pattern_counts(const Permutation& w) {
  std::map<Permutation, std::uint64_t> out;
  for (int m = 0; m <= w.size(); ++m) {
    for (const auto& sel : subwords(w, m)) ++out[flatten(sel)];
  }
  return out;
}

std::string grid_text(const TileGrid& g) { return "\n" + g.to_ascii(); }

struct Sets {
  const Catalog& cat;
  // indices with a given permutation that are reduced / minimal
  std::vector<std::size_t> bpd(const Permutation& w) const {
    std::vector<std::size_t> out;
    for (auto k : cat.with_perm(w)) {
      if (cat.entries[k].reduced) out.push_back(k);
    }
    return out;
  }
  std::vector<std::size_t> mbpd(const Permutation& w, bool reduced_only = true) const {
    std::vector<std::size_t> out;
    for (auto k : cat.with_perm(w)) {
      const auto& e = cat.entries[k];
      if ((e.reduced || !reduced_only) && e.removable.minimal()) out.push_back(k);
    }
    return out;
  }
  BetaPolynomial weight(const std::vector<std::size_t>& idx, int reference) const {
    BetaPolynomial sum;
    for (auto k : idx) sum += beta_weight(cat.entries[k].blanks, cat.entries[k].jelbows, reference);
    return sum;
  }
};

// mbpd counts and weights for every permutation of size <= n
struct MinimalData {
  std::map<Permutation, std::uint64_t> count;
  std::map<Permutation, BetaPolynomial> weight;
  explicit MinimalData(int n) {
    for (int m = 0; m <= n; ++m) {
      Sets s{catalog(m)};
      for (const auto& u : all_permutations(m)) {
        const auto idx = s.mbpd(u);
        count[u] = idx.size();
        weight[u] = s.weight(idx, coxeter_length(u));
      }
    }
  }
};

const Catalog& checked_catalog(int m, std::string_view id) {
  if (m > kCatalogMaxSize) {
    throw GuardExceeded(std::string(id) + " needs explicit diagrams; sizes above " + std::to_string(kCatalogMaxSize) +
                        " are not supported");
  }
  return catalog(m);
}

void check_upper_bound(Run& run, int n, bool only_1243_avoiding) {
  for (int m = 0; m <= n; ++m) checked_catalog(m, "upper-bound");
  MinimalData minimal(n);
  for (int m = 0; m <= n && !run.full(); ++m) {
    Sets s{catalog(m)};
    for (const auto& w : all_permutations(m)) {
      const bool avoids_1243 = avoids(w, p("1243"));
      if (only_1243_avoiding && !avoids_1243) continue;
      run.count();
      const auto nu = s.bpd(w).size();
      std::uint64_t bound = 0;
      for (const auto& [u, k] : pattern_counts(w)) bound += minimal.count.at(u) * k;
      if (nu > bound) run.fail(w.to_string() + ": nu=" + std::to_string(nu) + " exceeds bound " + std::to_string(bound));
      if (avoids_1243 && nu != bound) {
        run.fail(w.to_string() + ": 1243-avoiding but nu=" + std::to_string(nu) + " != bound " + std::to_string(bound));
      }
      if (!only_1243_avoiding && w == p("1243")) {
        run.note("1243: nu=" + std::to_string(nu) + " < bound=" + std::to_string(bound));
      }
      if (only_1243_avoiding) {
        const auto c = run.evaluator().coefficient_values(m, 0)[w.rank()];
        if (c != Integer(static_cast<std::int64_t>(minimal.count.at(w)))) {
          run.fail(w.to_string() + ": c=" + c.to_string() + " but |mbpd|=" + std::to_string(minimal.count.at(w)));
        }
      }
    }
  }
}

void check_vexillary_k(Run& run, int n) {
  for (int m = 0; m <= n && !run.full(); ++m) {
    const auto& cat = checked_catalog(m, "vexillary-K");
    Sets s{cat};
    for (const auto& w : all_permutations(m)) {
      if (!is_vexillary(w)) continue;
      run.count();
      auto k_set = cat.with_type(w);
      auto r_set = s.bpd(w);
      std::sort(k_set.begin(), k_set.end());
      std::sort(r_set.begin(), r_set.end());
      if (k_set != r_set) {
        run.fail(w.to_string() + ": |BPD_K|=" + std::to_string(k_set.size()) + " |bpd|=" + std::to_string(r_set.size()));
      }
    }
  }
}

void check_nonreduced_pattern(Run& run, int n) {
  std::uint64_t anchored = 0;
  std::uint64_t total = 0;
  for (int m = 0; m <= n && !run.full(); ++m) {
    for (const auto& e : checked_catalog(m, "nonreduced-pattern").entries) {
      if (e.reduced) continue;
      run.count();
      ++total;
      try {
        const auto wit = nonreduced_witness(e.grid);
        if (!wit) {
          run.fail("no witness for nonreduced grid" + grid_text(e.grid));
          continue;
        }
        if (flatten(wit->occurrence) != wit->pattern) run.fail("witness does not flatten to its pattern" + grid_text(e.grid));
        anchored += wit->anchored;
      } catch (const WitnessNotFound& ex) {
        run.fail(std::string(ex.what()) + grid_text(e.grid));
      }
    }
  }
  run.note(std::to_string(anchored) + " of " + std::to_string(total) +
           " witnesses start with the doubly crossing strand pair");
}

void check_bijection(Run& run, int n) {
  for (int m = 0; m <= n && !run.full(); ++m) {
    const auto& cat = checked_catalog(m, "bijection-roundtrip");
    std::map<std::pair<Permutation, std::vector<int>>, std::uint64_t> class_size;
    for (const auto& e : cat.entries) {
      run.count();
      const auto r = remove_pipes(e.grid);
      const auto rc = remove_pipes_by_contraction(e.grid);
      if (!(r.image == rc.image)) run.fail("tile contraction differs from the ASM minor" + grid_text(e.grid));
      if (!removable_pipes(r.image).minimal()) run.fail("removal image is not minimal" + grid_text(e.grid));
      if (trace(r.image).perm != flatten(r.v)) run.fail("removal image has the wrong permutation" + grid_text(e.grid));
      try {
        if (insert_pipes(r.image, e.perm, r.v) != e.grid) run.fail("insert(remove(B)) != B" + grid_text(e.grid));
      } catch (const std::exception& ex) {
        run.fail(std::string("insert failed: ") + ex.what() + grid_text(e.grid));
      }
      const auto idx = r.v.indices();
      ++class_size[{e.perm, std::vector<int>(idx.begin(), idx.end())}];
    }
    // |BPD(w;v)| = |mBPD(perm v)| for every subword v
    for (const auto& w : all_permutations(m)) {
      for (int k = 0; k <= m; ++k) {
        for (const auto& sel : subwords(w, k)) {
          const auto idx = sel.indices();
          auto it = class_size.find({w, std::vector<int>(idx.begin(), idx.end())});
          const std::uint64_t lhs = it == class_size.end() ? 0 : it->second;
          const auto u = flatten(sel);
          const auto& ucat = catalog(k);
          std::uint64_t rhs = 0;
          for (auto q : ucat.with_perm(u)) rhs += ucat.entries[q].removable.minimal();
          if (lhs != rhs) {
            run.fail(w.to_string() + " v=" + sel.to_string() + ": |BPD(w;v)|=" + std::to_string(lhs) +
                     " |mBPD|=" + std::to_string(rhs));
          }
        }
      }
    }
  }
}

// Groups the reduced diagrams of w by their subword class.
std::map<std::vector<int>, std::vector<std::size_t>> reduced_classes(const Catalog& cat, const Permutation& w) {
  std::map<std::vector<int>, std::vector<std::size_t>> out;
  for (auto k : cat.with_perm(w)) {
    const auto& e = cat.entries[k];
    if (!e.reduced) continue;
    const auto idx = e.removable.subword.indices();
    out[std::vector<int>(idx.begin(), idx.end())].push_back(k);
  }
  return out;
}

void check_reduced_restriction(Run& run, int n) {
  for (int m = 0; m <= n && !run.full(); ++m) {
    const auto& cat = checked_catalog(m, "reduced-restriction");
    for (const auto& w : all_permutations(m)) {
      const bool avoids_1243 = avoids(w, p("1243"));
      const auto classes = reduced_classes(cat, w);
      for (int k = 0; k <= m; ++k) {
        for (const auto& sel : subwords(w, k)) {
          run.count();
          const auto idx = sel.indices();
          auto it = classes.find(std::vector<int>(idx.begin(), idx.end()));
          std::set<BpdGrid> images;
          if (it != classes.end()) {
            for (auto q : it->second) {
              const auto img = remove_pipes(cat.entries[q].grid).image;
              if (!trace(img).reduced() || !removable_pipes(img).minimal()) {
                run.fail(w.to_string() + " v=" + sel.to_string() + ": image outside mbpd" + grid_text(cat.entries[q].grid));
              }
              images.insert(img);
            }
          }
          if (!avoids_1243) {
            if (w == p("1243") && sel.to_string() == "143") {
              run.note("1243 v=143: |bpd(w;v)|=" + std::to_string(images.size()) + ", |mbpd(132)|=" +
                       std::to_string(Sets{catalog(3)}.mbpd(p("132")).size()));
            }
            continue;
          }
          const auto u = flatten(sel);
          Sets target{catalog(k)};
          std::set<BpdGrid> expected;
          for (auto q : target.mbpd(u)) expected.insert(target.cat.entries[q].grid);
          if (images != expected) {
            run.fail(w.to_string() + " v=" + sel.to_string() + ": images " + std::to_string(images.size()) +
                     " vs mbpd " + std::to_string(expected.size()));
          }
        }
      }
    }
  }
}

void check_weight_preservation(Run& run, int n) {
  for (int m = 0; m <= n && !run.full(); ++m) {
    const auto& cat = checked_catalog(m, "weight-preservation");
    for (const auto& e : cat.entries) {
      if (!e.reduced) continue;
      run.count();
      const auto r = remove_pipes(e.grid);
      const auto lhs = beta_weight(e.grid, coxeter_length(e.perm));
      const auto rhs = beta_weight(r.image, coxeter_length(flatten(r.v)));
      if (lhs != rhs) run.fail("weight " + lhs.to_string() + " != " + rhs.to_string() + grid_text(e.grid));
    }
    Sets s{cat};
    for (const auto& w : all_permutations(m)) {
      if (!avoids(w, p("1243"))) continue;
      const auto classes = reduced_classes(cat, w);
      const int len = coxeter_length(w);
      for (int k = 0; k <= m; ++k) {
        for (const auto& sel : subwords(w, k)) {
          run.count();
          const auto idx = sel.indices();
          auto it = classes.find(std::vector<int>(idx.begin(), idx.end()));
          const auto lhs = it == classes.end() ? BetaPolynomial() : s.weight(it->second, len);
          const auto u = flatten(sel);
          Sets target{catalog(k)};
          const auto rhs = target.weight(target.mbpd(u), coxeter_length(u));
          if (lhs != rhs) {
            run.fail(w.to_string() + " v=" + sel.to_string() + ": " + lhs.to_string() + " != " + rhs.to_string());
          }
        }
      }
    }
  }
}

void check_groth(Run& run, int n) {
  for (int m = 0; m <= n; ++m) checked_catalog(m, "groth-1243-2143");
  MinimalData minimal(n);
  for (int m = 0; m <= n && !run.full(); ++m) {
    Sets s{catalog(m)};
    const auto& nus = run.evaluator().nu_table(m);
    const auto& cs = run.evaluator().coefficient_table(m);
    for (const auto& w : all_permutations(m)) {
      if (!is_vexillary(w) || !avoids(w, p("1243"))) continue;
      run.count();
      BetaPolynomial bound;
      for (const auto& [u, k] : pattern_counts(w)) {
        bound += minimal.weight.at(u) * Integer(static_cast<std::int64_t>(k));
      }
      const auto& nu = nus[w.rank()];
      const auto& c = cs[w.rank()];
      if (nu != bound) run.fail(w.to_string() + ": nu=" + nu.to_string() + " vs " + bound.to_string());
      if (c != minimal.weight.at(w)) run.fail(w.to_string() + ": c=" + c.to_string() + " vs wt(mbpd)=" + minimal.weight.at(w).to_string());
      const auto all_minimal = s.weight(s.mbpd(w, false), coxeter_length(w));
      if (c != all_minimal) run.fail(w.to_string() + ": c=" + c.to_string() + " vs wt(mBPD)=" + all_minimal.to_string());
      if (!c.nonnegative()) run.fail(w.to_string() + ": c has a negative coefficient: " + c.to_string());
      if (!nu.nonnegative()) run.fail(w.to_string() + ": nu has a negative coefficient: " + nu.to_string());
    }
  }
}

void check_conj_gao(Run& run, int n) {
  for (int m = 0; m <= n && !run.full(); ++m) {
    const auto& cs = run.evaluator().coefficient_values(m, 0);
    for (std::size_t r = 0; r < cs.size(); ++r) {
      run.count();
      if (cs[r].sign() < 0) run.fail(Permutation::unrank(m, r).to_string() + ": c=" + cs[r].to_string());
    }
  }
}

void check_conj_groth(Run& run, int n) {
  for (int m = 0; m <= n && !run.full(); ++m) {
    const auto& cs = run.evaluator().coefficient_table(m);
    for (std::size_t r = 0; r < cs.size(); ++r) {
      run.count();
      if (!cs[r].nonnegative()) run.fail(Permutation::unrank(m, r).to_string() + ": c=" + cs[r].to_string());
    }
  }
}

void skew_pair(Run& run, const Permutation& u, const Permutation& v, bool block_law) {
  run.count();
  const auto w = skew_sum(u, v);
  const auto total = w.size();
  const auto& nu_w = run.evaluator().nu_table(total)[w.rank()];
  const auto nu_uv = run.evaluator().nu_table(u.size())[u.rank()] * run.evaluator().nu_table(v.size())[v.rank()];
  const auto& c_w = run.evaluator().coefficient_table(total)[w.rank()];
  const auto c_uv = run.evaluator().coefficient_table(u.size())[u.rank()] * run.evaluator().coefficient_table(v.size())[v.rank()];
  const std::string tag = u.to_string() + " (-) " + v.to_string();
  if (nu_w != nu_uv) run.fail(tag + ": nu " + nu_w.to_string() + " != " + nu_uv.to_string());
  if (c_w != c_uv) run.fail(tag + ": c " + c_w.to_string() + " != " + c_uv.to_string());
  if (coxeter_length(w) != u.size() * v.size() + coxeter_length(u) + coxeter_length(v)) run.fail(tag + ": length");
  if (!block_law) return;
  const int m = u.size();
  const int k = v.size();
  const auto& cat = catalog(total);
  for (auto q : cat.with_type(w)) {
    const auto& g = cat.entries[q].grid;
    bool ok = true;
    for (int i = 1; i <= total && ok; ++i) {
      for (int j = 1; j <= total && ok; ++j) {
        if (i <= m && j <= k) ok = g.at(i, j) == Tile::Blank;
        if (i > m && j > k) ok = g.at(i, j) == Tile::Cross;
      }
    }
    BpdGrid bu(m);
    BpdGrid bv(k);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) bu.set(i, j, g.at(i, k + j));
    }
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) bv.set(i, j, g.at(m + i, j));
    }
    ok = ok && !validate(bu) && !validate(bv) && resolve(bu).type == u && resolve(bv).type == v;
    if (!ok) run.fail(tag + ": block form violated" + grid_text(g));
  }
}

void check_skew(Run& run, int n) {
  for (int total = 0; total <= n && !run.full(); ++total) {
    const bool block_law = total <= kCatalogMaxSize;
    for (int m = 0; m <= total; ++m) {
      for (const auto& u : all_permutations(m)) {
        for (const auto& v : all_permutations(total - m)) skew_pair(run, u, v, block_law);
      }
    }
  }
  const int max_size = std::min(run.options().random_max_size, run.evaluator().guard());
  if (run.options().random_pairs > 0 && max_size >= 2) {
    std::mt19937_64 rng(run.options().seed);
    for (int t = 0; t < run.options().random_pairs && !run.full(); ++t) {
      const int total = std::uniform_int_distribution<int>(2, max_size)(rng);
      const int m = std::uniform_int_distribution<int>(1, total - 1)(rng);
      auto draw = [&](int size) {
        return Permutation::unrank(size, std::uniform_int_distribution<std::uint64_t>(0, factorial(size) - 1)(rng));
      };
      const auto u = draw(m);
      const auto v = draw(total - m);
      skew_pair(run, u, v, false);
    }
    run.note(std::to_string(run.options().random_pairs) + " random pairs up to total size " + std::to_string(max_size));
  }
}

void check_pattern_sum(Run& run, int n) {
  for (int m = 0; m <= n && !run.full(); ++m) {
    const auto& nus = run.evaluator().nu_table(m);
    for (const auto& w : all_permutations(m)) {
      run.count();
      Integer sum(0);
      for (const auto& [u, k] : pattern_counts(w)) {
        sum += run.evaluator().coefficient(u).constant_term() * Integer(static_cast<std::int64_t>(k));
      }
      const auto nu = nus[w.rank()].constant_term();
      if (sum != nu) run.fail(w.to_string() + ": nu=" + nu.to_string() + " sum=" + sum.to_string());
    }
  }
}

void check_stanley(Run& run, int n) {
  for (int m = 0; m <= n && !run.full(); ++m) {
    const auto& nus = run.evaluator().nu_values(m, 0);
    for (const auto& w : all_permutations(m)) {
      run.count();
      const bool two = nus[w.rank()] == Integer(2);
      const bool one = pattern_count(p("132"), w) == 1;
      if (two != one) run.fail(w.to_string() + ": nu=" + nus[w.rank()].to_string());
    }
  }
}

void check_gao_bound(Run& run, int n) {
  for (int m = 0; m <= n && !run.full(); ++m) {
    const auto& nus = run.evaluator().nu_values(m, 0);
    for (const auto& w : all_permutations(m)) {
      run.count();
      const auto bound = 1 + pattern_count(p("132"), w) + pattern_count(p("1432"), w);
      if (nus[w.rank()] < Integer(static_cast<std::int64_t>(bound))) {
        run.fail(w.to_string() + ": nu=" + nus[w.rank()].to_string() + " < " + std::to_string(bound));
      }
    }
  }
}

void check_bk_order(Run& run, int n) {
  std::uint64_t nonreduced_fixed = 0;
  for (int m = 0; m <= n && !run.full(); ++m) {
    const auto& cat = checked_catalog(m, "bk-order");
    std::map<BpdGrid, std::size_t> where;
    for (std::size_t k = 0; k < cat.entries.size(); ++k) where.emplace(cat.entries[k].grid, k);
    for (const auto& e : cat.entries) {
      run.count();
      const auto row = resolve(e.grid, ScanOrder::RowMajor);
      if (!(row.grid == e.resolved)) run.fail("scan orders disagree" + grid_text(e.grid));
      if (!trace(e.resolved).reduced()) run.fail("resolved grid still has a repeated crossing" + grid_text(e.grid));
      if (unresolve(e.resolved) != e.grid) run.fail("bumps do not restore the grid" + grid_text(e.grid));
      const int len = coxeter_length(e.type);
      if (e.blanks < len || (e.blanks == len) != e.reduced) {
        run.fail("blank count " + std::to_string(e.blanks) + " vs length " + std::to_string(len) + grid_text(e.grid));
      }
      if (e.reduced && (e.type != e.perm || !(e.resolved == ResolvedGrid(e.grid)))) {
        run.fail("reduced grid changed by resolution" + grid_text(e.grid));
      }
      if (!e.reduced && e.type == e.perm) ++nonreduced_fixed;
    }
    std::uint64_t seen = 0;
    sweep_diagrams(m, 1, [&](int, const DiagramSummary& d) {
      ++seen;
      const auto g = d.grid();
      auto it = where.find(g);
      if (it == where.end()) {
        run.fail("sweep produced an unknown grid" + grid_text(g));
        return;
      }
      const auto& e = cat.entries[it->second];
      if (d.type_permutation() != e.type || !(d.resolved_grid() == e.resolved) || d.reduced != e.reduced ||
          d.blanks != e.blanks || d.jelbows != e.jelbows) {
        run.fail("sweep disagrees with re-tracing" + grid_text(g));
      }
    });
    if (seen != cat.entries.size()) run.fail("sweep visited " + std::to_string(seen) + " diagrams of size " + std::to_string(m));
  }
  run.note(std::to_string(nonreduced_fixed) + " nonreduced diagrams have type equal to their permutation");
}

}  // namespace

CheckReport run_check(std::string_view check_id, int n, const CheckOptions& options) {
  Specializer evaluator(9, options.jobs);
  return run_check(check_id, n, evaluator, options);
}

CheckReport run_check(std::string_view check_id, int n, Specializer& evaluator, const CheckOptions& options) {
  static const std::map<std::string, std::function<void(Run&, int)>, std::less<>> table = {
      {"upper-bound", [](Run& r, int n) { check_upper_bound(r, n, false); }},
      {"thm-1243", [](Run& r, int n) { check_upper_bound(r, n, true); }},
      {"vexillary-K", check_vexillary_k},
      {"nonreduced-pattern", check_nonreduced_pattern},
      {"bijection-roundtrip", check_bijection},
      {"reduced-restriction", check_reduced_restriction},
      {"weight-preservation", check_weight_preservation},
      {"groth-1243-2143", check_groth},
      {"conj-gao", check_conj_gao},
      {"conj-groth", check_conj_groth},
      {"skew", check_skew},
      {"pattern-sum", check_pattern_sum},
      {"stanley", check_stanley},
      {"bk-order", check_bk_order},
      {"gao-bound", check_gao_bound},
  };
  auto it = table.find(check_id);
  if (it == table.end()) throw UnknownCheck("unknown check '" + std::string(check_id) + "'");
  if (n < 0) throw std::invalid_argument("negative size");
  if (n > evaluator.guard()) {
    throw GuardExceeded("size " + std::to_string(n) + " exceeds guard " + std::to_string(evaluator.guard()));
  }
  CheckReport report;
  report.check_id = std::string(check_id);
  report.n = n;
  const auto start = std::chrono::steady_clock::now();
  Run run(report, evaluator, options);
  it->second(run, n);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

MaximaRow maxima_table(int n, std::int64_t beta_value, Specializer& evaluator) {
  MaximaRow row;
  row.n = n;
  row.beta_value = beta_value;
  const auto& nus = evaluator.nu_values(n, beta_value);
  const auto& cs = evaluator.coefficient_values(n, beta_value);
  row.max_nu = *std::max_element(nus.begin(), nus.end());
  row.max_c = *std::max_element(cs.begin(), cs.end());
  for (std::size_t r = 0; r < nus.size(); ++r) {
    if (nus[r] == row.max_nu) row.argmax_nu.push_back(Permutation::unrank(n, r));
    if (cs[r] == row.max_c) row.argmax_c.push_back(Permutation::unrank(n, r));
  }
  row.argmax_agree = row.argmax_nu == row.argmax_c;
  for (const auto* list : {&row.argmax_nu, &row.argmax_c}) {
    for (const auto& w : *list) row.argmax_layered = row.argmax_layered && is_layered(w);
  }
  return row;
}

MaximaRow maxima_table(int n, std::int64_t beta_value) { return maxima_table(n, beta_value, default_specializer()); }

}  // namespace pipedream
