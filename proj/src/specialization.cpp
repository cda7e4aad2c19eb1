#include "pipedream/specialization.hpp"

#include <algorithm>

#include "pipedream/bpd_grid.hpp"
#include "pipedream/enumeration.hpp"
#include "pipedream/ktheory.hpp"

namespace pipedream {

std::uint64_t pattern_rank(const int* values, int m) {
  std::uint64_t r = 0;
  for (int i = 0; i < m; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j < m; ++j) smaller += values[j] < values[i];
    r = r * static_cast<std::uint64_t>(m - i) + smaller;
  }
  return r;
}

namespace {

std::uint64_t type_rank(const DiagramSummary& d, int& length) {
  int vals[kMaxSweepSize];
  length = 0;
  for (int i = 0; i < d.n; ++i) {
    vals[i] = d.type[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) length += vals[j] > vals[i];
  }
  return pattern_rank(vals, d.n);
}

void checked_add(std::int64_t& acc, std::int64_t v) {
  if (__builtin_add_overflow(acc, v, &acc)) throw Overflow("64-bit accumulator overflow");
}

}  // namespace

void Specializer::set_guard(int guard) {
  std::lock_guard lock(mu_);
  guard_ = guard;
}

void Specializer::set_jobs(unsigned jobs) {
  std::lock_guard lock(mu_);
  jobs_ = jobs;
}

void Specializer::check_guard(int n) const {
  if (n > guard_) throw GuardExceeded("size " + std::to_string(n) + " exceeds guard " + std::to_string(guard_));
}

const std::vector<BetaPolynomial>& Specializer::nu_table(int n) {
  std::lock_guard lock(mu_);
  return nu_table_locked(n);
}

const std::vector<BetaPolynomial>& Specializer::nu_table_locked(int n) {
  if (auto it = nu_tables_.find(n); it != nu_tables_.end()) return it->second;
  check_guard(n);
  const auto count = static_cast<std::size_t>(factorial(n));
  // binomial rows for (1 + beta)^j
  const int max_j = n * n;
  std::vector<std::vector<std::int64_t>> binom(static_cast<std::size_t>(max_j) + 1);
  for (int j = 0; j <= max_j; ++j) {
    auto& row = binom[static_cast<std::size_t>(j)];
    row.assign(static_cast<std::size_t>(j) + 1, 1);
    for (int k = 1; k < j; ++k) {
      const auto& prev = binom[static_cast<std::size_t>(j - 1)];
      row[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(k)];
    }
  }
  const int workers = sweep_workers(n, jobs_);
  std::vector<std::vector<std::vector<std::int64_t>>> acc(
      static_cast<std::size_t>(workers), std::vector<std::vector<std::int64_t>>(count));
  sweep_diagrams(n, jobs_, [&](int worker, const DiagramSummary& d) {
    int length = 0;
    const auto r = type_rank(d, length);
    const int e = d.blanks - length;
    if (e < 0) throw NegativeExponent("blank count below the length of the type");
    auto& poly = acc[static_cast<std::size_t>(worker)][r];
    const auto& row = binom[static_cast<std::size_t>(d.jelbows)];
    const std::size_t top = static_cast<std::size_t>(e) + row.size();
    if (poly.size() < top) poly.resize(top, 0);
    for (std::size_t k = 0; k < row.size(); ++k) checked_add(poly[static_cast<std::size_t>(e) + k], row[k]);
  });
  std::vector<BetaPolynomial> table;
  table.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    std::vector<Integer> coeffs;
    for (int wk = 0; wk < workers; ++wk) {
      const auto& p = acc[static_cast<std::size_t>(wk)][r];
      if (coeffs.size() < p.size()) coeffs.resize(p.size(), Integer(0));
      for (std::size_t k = 0; k < p.size(); ++k) coeffs[k] += Integer(p[k]);
    }
    table.emplace_back(std::move(coeffs));
  }
  return nu_tables_.emplace(n, std::move(table)).first->second;
}

const std::vector<BetaPolynomial>& Specializer::coefficient_table(int n) {
  std::lock_guard lock(mu_);
  if (auto it = c_tables_.find(n); it != c_tables_.end()) return it->second;
  check_guard(n);
  std::vector<std::vector<BetaPolynomial>> nus;
  for (int m = 0; m <= n; ++m) nus.push_back(nu_table_locked(m));
  auto cs = coefficients_from_nu(nus);
  for (int m = 0; m <= n; ++m) c_tables_.try_emplace(m, std::move(cs[static_cast<std::size_t>(m)]));
  return c_tables_.at(n);
}

const std::vector<Integer>& Specializer::nu_values(int n, std::int64_t beta) {
  std::lock_guard lock(mu_);
  return nu_values_locked(n, beta);
}

const std::vector<Integer>& Specializer::nu_values_locked(int n, std::int64_t beta) {
  const auto key = std::make_pair(n, beta);
  if (auto it = nu_value_tables_.find(key); it != nu_value_tables_.end()) return it->second;
  check_guard(n);
  const auto count = static_cast<std::size_t>(factorial(n));
  const int max_k = n * n;
  // weight[e][j] = beta^e (1 + beta)^j, or nullopt when it does not fit 64 bits
  std::vector<std::vector<std::optional<std::int64_t>>> weight(
      static_cast<std::size_t>(max_k) + 1, std::vector<std::optional<std::int64_t>>(static_cast<std::size_t>(max_k) + 1));
  for (int e = 0; e <= max_k; ++e) {
    for (int j = 0; j <= max_k; ++j) {
      const Integer v = Integer::pow(Integer(beta), static_cast<unsigned>(e)) *
                        Integer::pow(Integer(beta + 1), static_cast<unsigned>(j));
      if (v.is_small()) weight[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] = v.to_int64();
    }
  }
  const int workers = sweep_workers(n, jobs_);
  std::vector<std::vector<std::int64_t>> acc(static_cast<std::size_t>(workers), std::vector<std::int64_t>(count, 0));
  sweep_diagrams(n, jobs_, [&](int worker, const DiagramSummary& d) {
    int length = 0;
    const auto r = type_rank(d, length);
    const int e = d.blanks - length;
    if (e < 0) throw NegativeExponent("blank count below the length of the type");
    const auto& wt = weight[static_cast<std::size_t>(e)][static_cast<std::size_t>(d.jelbows)];
    if (!wt) throw Overflow("weight does not fit 64 bits");
    checked_add(acc[static_cast<std::size_t>(worker)][r], *wt);
  });
  std::vector<Integer> table(count, Integer(0));
  for (const auto& part : acc) {
    for (std::size_t r = 0; r < count; ++r) table[r] += Integer(part[r]);
  }
  return nu_value_tables_.emplace(key, std::move(table)).first->second;
}

const std::vector<Integer>& Specializer::coefficient_values(int n, std::int64_t beta) {
  std::lock_guard lock(mu_);
  const auto key = std::make_pair(n, beta);
  if (auto it = c_value_tables_.find(key); it != c_value_tables_.end()) return it->second;
  check_guard(n);
  std::vector<std::vector<Integer>> nus;
  for (int m = 0; m <= n; ++m) nus.push_back(nu_values_locked(m, beta));
  auto cs = coefficients_from_nu(nus);
  for (int m = 0; m <= n; ++m) c_value_tables_.try_emplace({m, beta}, std::move(cs[static_cast<std::size_t>(m)]));
  return c_value_tables_.at(key);
}

BetaPolynomial Specializer::nu(const Permutation& w) {
  std::lock_guard lock(mu_);
  return nu_locked(w);
}

BetaPolynomial Specializer::nu_locked(const Permutation& w) {
  if (auto it = nu_memo_.find(w); it != nu_memo_.end()) return it->second;
  check_guard(w.size());
  const auto& table = nu_table_locked(w.size());
  BetaPolynomial value = table[w.rank()];
  nu_memo_.emplace(w, value);
  return value;
}

BetaPolynomial Specializer::coefficient(const Permutation& w, CoefficientMode mode) {
  std::lock_guard lock(mu_);
  check_guard(w.size());
  if (mode == CoefficientMode::Recursive) return recursive_locked(w);
  const int n = w.size();
  BetaPolynomial sum;
  const auto word = w.word();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> vals;
    for (int k = 0; k < n; ++k) {
      if (mask & (1U << k)) vals.push_back(word[static_cast<std::size_t>(k)]);
    }
    const auto term = nu_locked(flatten(vals));
    if ((n - static_cast<int>(vals.size())) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BetaPolynomial Specializer::recursive_locked(const Permutation& w) {
  if (auto it = c_memo_.find(w); it != c_memo_.end()) return it->second;
  BetaPolynomial c = nu_locked(w);
  if (!w.empty()) {
    std::map<Permutation, std::uint64_t> patterns;
    for (int m = 0; m < w.size(); ++m) {
      for (const auto& sel : subwords(w, m)) ++patterns[flatten(sel)];
    }
    for (const auto& [u, count] : patterns) {
      c -= recursive_locked(u) * Integer(static_cast<std::int64_t>(count));
    }
  }
  c_memo_.emplace(w, c);
  return c;
}

BetaPolynomial Specializer::nu_by_weights(const Permutation& w) {
  check_guard(w.size());
  BetaPolynomial sum;
  const int length = coxeter_length(w);
  for (const auto& g : query({SetKind::BPD_K, w, std::nullopt}, guard_)) sum += beta_weight(g, length);
  return sum;
}

MultivariatePolynomial Specializer::grothendieck(const Permutation& w) {
  check_guard(w.size());
  const int n = w.size();
  const int vars = std::max(n - 1, 0);
  MultivariatePolynomial total(vars);
  for (const auto& g : query({SetKind::BPD_K, w, std::nullopt}, guard_)) {
    Exponents exps(static_cast<std::size_t>(vars), 0);
    unsigned blanks = 0;
    std::vector<int> jelbow_rows;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const Tile t = g.at(i, j);
        if (t != Tile::Blank && t != Tile::JElbow) continue;
        if (i > vars) throw std::logic_error("blank or j-elbow in the bottom row");
        if (t == Tile::Blank) {
          ++exps[static_cast<std::size_t>(i - 1)];
          ++blanks;
        } else {
          jelbow_rows.push_back(i);
        }
      }
    }
    auto term = MultivariatePolynomial::monomial(exps, BetaPolynomial::beta_power(blanks));
    for (int i : jelbow_rows) {
      Exponents xi(static_cast<std::size_t>(vars), 0);
      xi[static_cast<std::size_t>(i - 1)] = 1;
      auto factor = MultivariatePolynomial::constant(vars, BetaPolynomial(1));
      factor += MultivariatePolynomial::monomial(xi, BetaPolynomial::beta_power(1));
      term *= factor;
    }
    total += term;
  }
  const auto length = static_cast<unsigned>(coxeter_length(w));
  return total.map_coefficients([&](const BetaPolynomial& c) { return c.divided_by_beta_power(length); });
}

SkewReport Specializer::skew_identities(const Permutation& u, const Permutation& v) {
  SkewReport r;
  r.sum = skew_sum(u, v);
  check_guard(r.sum.size());
  r.nu_sum = nu(r.sum);
  r.nu_product = nu(u) * nu(v);
  r.c_sum = coefficient(r.sum);
  r.c_product = coefficient(u) * coefficient(v);
  return r;
}

void Specializer::seed_nu(const Permutation& w, const BetaPolynomial& value) {
  std::lock_guard lock(mu_);
  nu_memo_[w] = value;
}

std::map<Permutation, BetaPolynomial> Specializer::known_nu() const {
  std::lock_guard lock(mu_);
  auto out = nu_memo_;
  for (const auto& [n, table] : nu_tables_) {
    for (std::size_t r = 0; r < table.size(); ++r) out.emplace(Permutation::unrank(n, r), table[r]);
  }
  return out;
}

Specializer& default_specializer() {
  static Specializer instance;
  return instance;
}

MultivariatePolynomial grothendieck(const Permutation& w) { return default_specializer().grothendieck(w); }
BetaPolynomial nu(const Permutation& w) { return default_specializer().nu(w); }
BetaPolynomial coefficient(const Permutation& w, CoefficientMode mode) {
  return default_specializer().coefficient(w, mode);
}
SkewReport skew_identities(const Permutation& u, const Permutation& v) {
  return default_specializer().skew_identities(u, v);
}

}  // namespace pipedream
