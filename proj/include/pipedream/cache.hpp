#pragma once

// On-disk store of nu^(beta)_w values as json lines:
//   {"word":"1243","nu_coeffs":[3,3,1],"schema_version":1}

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pipedream/permutation.hpp"
#include "pipedream/polynomial.hpp"

namespace pipedream {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kCacheSchemaVersion = 1;

struct CacheContents {
  std::map<Permutation, BetaPolynomial> values;
  /// Lines that were skipped (unparseable or another schema version).
  std::size_t skipped = 0;
  std::vector<std::string> warnings;
};

/// $PIPEDREAM_CACHE, else $XDG_CACHE_HOME/pipedream/nu-cache.jsonl, else
/// ~/.cache/pipedream/nu-cache.jsonl.
std::filesystem::path default_cache_path();

/// A missing file yields an empty map.
CacheContents load_cache(const std::filesystem::path& path);

/// Writes to a temporary file next to `path` and renames it into place.
/// Coefficients outside 64 bits are written as decimal strings.
void store_cache(const std::filesystem::path& path, const std::map<Permutation, BetaPolynomial>& values);

}  // namespace pipedream
