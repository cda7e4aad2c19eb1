#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pipedream/bpd_grid.hpp"
#include "pipedream/cache.hpp"
#include "pipedream/enumeration.hpp"
#include "pipedream/ktheory.hpp"
#include "pipedream/specialization.hpp"
#include "pipedream/verify.hpp"

namespace pd = pipedream;

namespace {

constexpr int kUsage = 2;
constexpr int kCheckFailed = 1;

// Default sizes used by `verify all` and when --n is omitted.
const std::map<std::string, int>& default_schedule() {
  static const std::map<std::string, int> schedule = {
      {"upper-bound", 5},         {"thm-1243", 6}, {"vexillary-K", 5}, {"nonreduced-pattern", 5},
      {"bijection-roundtrip", 5}, {"reduced-restriction", 6},          {"weight-preservation", 6},
      {"groth-1243-2143", 6},     {"conj-gao", 7}, {"conj-groth", 7},  {"skew", 5},
      {"pattern-sum", 6},         {"stanley", 6},  {"bk-order", 5},    {"gao-bound", 6}};
  return schedule;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  if (text == "e" || text.empty()) return out;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = std::min(text.find(',', start), text.size());
      out.push_back(std::stoi(text.substr(start, end - start)));
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad subword indices '" + text + "'");
      out.push_back(c - '0');
    }
  }
  return out;
}

pd::SetQuery make_query(const std::string& perm, std::string kind, const std::optional<std::string>& subword) {
  pd::SetQuery q;
  q.w = pd::Permutation::parse(std::string_view(perm));
  if (subword) {
    if (kind == "bpd") kind = "bpd_v";
    if (kind == "BPD") kind = "BPD_v";
    q.v = pd::SubwordSelection(q.w, parse_indices(*subword));
  }
  q.kind = pd::parse_set_kind(kind);
  return q;
}

class NuCache {
 public:
  explicit NuCache(pd::Specializer& evaluator) : evaluator_(evaluator), path_(pd::default_cache_path()) {
    auto loaded = pd::load_cache(path_);
    if (loaded.skipped) std::cerr << "warning: skipped " << loaded.skipped << " cache lines in " << path_ << "\n";
    before_ = loaded.values.size();
    for (const auto& [w, v] : loaded.values) evaluator_.seed_nu(w, v);
  }
  void save() {
    const auto all = evaluator_.known_nu();
    if (all.size() == before_) return;
    try {
      pd::store_cache(path_, all);
    } catch (const pd::IoError& e) {
      std::cerr << "warning: " << e.what() << "\n";
    }
  }

 private:
  pd::Specializer& evaluator_;
  std::filesystem::path path_;
  std::size_t before_ = 0;
};

void print_value(const pd::BetaPolynomial& p, const std::optional<std::int64_t>& at) {
  if (at) {
    std::cout << p.evaluate(pd::Integer(*at)) << "\n";
  } else {
    std::cout << p << "\n";
  }
}

void print_row(const pd::MaximaRow& row) {
  auto list = [](const std::vector<pd::Permutation>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : ",") + w.to_string();
    return s;
  };
  std::cout << "n=" << row.n << " beta=" << row.beta_value << " max_nu=" << row.max_nu << " argmax_nu="
            << list(row.argmax_nu) << " max_c=" << row.max_c << " argmax_c=" << list(row.argmax_c)
            << " layered=" << (row.argmax_layered ? "yes" : "no") << " agree=" << (row.argmax_agree ? "yes" : "no")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bumpless pipe dreams, Grothendieck specializations and pattern coefficients"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  int guard = 9;
  app.add_option("--jobs", jobs, "worker threads for exhaustive sweeps")->check(CLI::Range(1U, 256U));
  app.add_option("--guard", guard, "largest permutation size accepted")->check(CLI::Range(0, pd::kMaxSweepSize));

  std::string perm;
  std::string kind = "BPD";
  std::optional<std::string> subword;
  std::string format = "ascii";
  auto* enumerate = app.add_subcommand("enumerate", "list the diagrams of a set");
  enumerate->add_option("--perm", perm)->required();
  enumerate->add_option("--kind", kind, "BPD|bpd|BPD_K|mBPD|mbpd|BPD_v|bpd_v");
  enumerate->add_option("--subword", subword, "1-based positions, e.g. 134 or 1,3,4");
  enumerate->add_option("--format", format, "ascii|json");

  std::optional<std::int64_t> at;
  auto* nu = app.add_subcommand("nu", "principal specialization nu^(beta)_w");
  nu->add_option("--perm", perm)->required();
  nu->add_option("--at", at, "evaluate at an integer beta");

  std::string mode = "recursive";
  auto* coeff = app.add_subcommand("coeff", "pattern coefficient c^(beta)_w");
  coeff->add_option("--perm", perm)->required();
  coeff->add_option("--mode", mode, "recursive|ie")->check(CLI::IsMember({"recursive", "ie"}));
  coeff->add_option("--at", at, "evaluate at an integer beta");

  auto* poly = app.add_subcommand("poly", "Grothendieck polynomial G^(beta)_w");
  poly->add_option("--perm", perm)->required();

  int index = 1;
  auto* render = app.add_subcommand("render", "draw one diagram of a set");
  render->add_option("--perm", perm)->required();
  render->add_option("--index", index, "1-based position in the set")->required();
  render->add_option("--format", format, "ascii|json|svg");
  render->add_option("--kind", kind, "set to index into (default BPD)");
  render->add_option("--subword", subword, "1-based positions for BPD_v / bpd_v");

  std::string check_id;
  std::optional<int> check_n;
  bool as_json = false;
  pd::CheckOptions check_options;
  auto* verify = app.add_subcommand("verify", "run a named check (or 'all')");
  verify->add_option("check", check_id)->required();
  verify->add_option("--n", check_n, "largest size (default: per-check schedule)");
  verify->add_option("--seed", check_options.seed, "seed for random skew pairs");
  verify->add_flag("--json", as_json, "print reports as json lines");

  int maxima_n = 0;
  std::int64_t beta = 1;
  bool upto = false;
  auto* maxima = app.add_subcommand("maxima", "maxima of nu and c at a fixed beta");
  maxima->add_option("--n", maxima_n)->required()->check(CLI::NonNegativeNumber);
  maxima->add_option("--beta", beta);
  maxima->add_flag("--upto", upto, "print every size from 0 to n");

  std::string cache_action;
  auto* cache = app.add_subcommand("cache", "cache maintenance");
  cache->add_option("action", cache_action, "path|clear")->required()->check(CLI::IsMember({"path", "clear"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  pd::Specializer evaluator(guard, jobs);
  check_options.jobs = jobs;
  try {
    if (*enumerate) {
      const auto grids = pd::query(make_query(perm, kind, subword), guard);
      if (format == "json") {
        pd::write_json_lines(std::cout, grids);
      } else if (format == "ascii") {
        for (std::size_t k = 0; k < grids.size(); ++k) std::cout << (k ? "\n" : "") << grids[k].to_ascii() << "\n";
      } else {
        throw std::invalid_argument("enumerate supports ascii|json");
      }
    } else if (*nu) {
      NuCache store(evaluator);
      print_value(evaluator.nu(pd::Permutation::parse(std::string_view(perm))), at);
      store.save();
    } else if (*coeff) {
      NuCache store(evaluator);
      const auto m = mode == "ie" ? pd::CoefficientMode::InclusionExclusion : pd::CoefficientMode::Recursive;
      print_value(evaluator.coefficient(pd::Permutation::parse(std::string_view(perm)), m), at);
      store.save();
    } else if (*poly) {
      std::cout << evaluator.grothendieck(pd::Permutation::parse(std::string_view(perm))) << "\n";
    } else if (*render) {
      const auto fmt = pd::parse_render_format(format);
      const auto grids = pd::query(make_query(perm, kind, subword), guard);
      if (index < 1 || index > static_cast<int>(grids.size())) {
        throw std::invalid_argument("index " + std::to_string(index) + " out of range 1.." + std::to_string(grids.size()));
      }
      const auto& g = grids[static_cast<std::size_t>(index - 1)];
      std::cout << (kind == "BPD_K" ? pd::render(pd::resolve(g).grid, fmt) : pd::render(g, fmt));
      if (fmt != pd::RenderFormat::Svg) std::cout << "\n";
    } else if (*verify) {
      std::vector<std::pair<std::string, int>> plan;
      if (check_id == "all") {
        for (const auto& id : pd::check_ids()) plan.emplace_back(id, check_n.value_or(default_schedule().at(id)));
      } else {
        auto it = default_schedule().find(check_id);
        if (it == default_schedule().end()) throw pd::UnknownCheck("unknown check '" + check_id + "'");
        plan.emplace_back(check_id, check_n.value_or(it->second));
      }
      bool ok = true;
      for (const auto& [id, n] : plan) {
        const auto report = pd::run_check(id, n, evaluator, check_options);
        std::cout << (as_json ? report.to_json() : report.to_text()) << "\n";
        ok = ok && report.passed();
      }
      return ok ? 0 : kCheckFailed;
    } else if (*maxima) {
      for (int n = upto ? 0 : maxima_n; n <= maxima_n; ++n) print_row(pd::maxima_table(n, beta, evaluator));
    } else if (*cache) {
      const auto path = pd::default_cache_path();
      if (cache_action == "path") {
        std::cout << path.string() << "\n";
      } else {
        std::error_code ec;
        std::filesystem::remove(path, ec);
        if (ec) throw pd::IoError("cannot remove " + path.string() + ": " + ec.message());
      }
    }
  } catch (const pd::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return 0;
}
