#include "pipedream/cache.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace pipedream {

std::filesystem::path default_cache_path() {
  if (const char* env = std::getenv("PIPEDREAM_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "pipedream" / "nu-cache.jsonl";
  }
  const char* home = std::getenv("HOME");
  return std::filesystem::path(home ? home : ".") / ".cache" / "pipedream" / "nu-cache.jsonl";
}

CacheContents load_cache(const std::filesystem::path& path) {
  CacheContents out;
  std::ifstream in(path);
  if (!in) {
    if (std::filesystem::exists(path)) throw IoError("cannot read " + path.string());
    return out;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (j.at("schema_version").get<int>() != kCacheSchemaVersion) {
        ++out.skipped;
        out.warnings.push_back("line " + std::to_string(line_no) + ": schema version mismatch");
        continue;
      }
      const auto w = Permutation::parse(std::string_view(j.at("word").get<std::string>()));
      std::vector<Integer> coeffs;
      for (const auto& c : j.at("nu_coeffs")) {
        coeffs.push_back(c.is_string() ? Integer::from_string(c.get<std::string>()) : Integer(c.get<std::int64_t>()));
      }
      if (!coeffs.empty() && coeffs.back().is_zero()) throw std::invalid_argument("trailing zero coefficient");
      out.values[w] = BetaPolynomial(std::move(coeffs));
    } catch (const std::exception& e) {
      ++out.skipped;
      out.warnings.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void store_cache(const std::filesystem::path& path, const std::map<Permutation, BetaPolynomial>& values) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    for (const auto& [w, poly] : values) {
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (const auto& c : poly.coefficients()) {
        if (c.is_small()) {
          coeffs.push_back(*c.to_int64());
        } else {
          coeffs.push_back(c.to_string());
        }
      }
      nlohmann::ordered_json j;
      j["word"] = w.to_string();
      j["nu_coeffs"] = coeffs;
      j["schema_version"] = kCacheSchemaVersion;
      out << j.dump() << '\n';
    }
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace pipedream
