#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pipedream/bpd_grid.hpp"

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline pipedream::BpdGrid fixture_grid(const std::string& name) {
  return pipedream::BpdGrid::from_ascii(read_fixture(name));
}

inline pipedream::Permutation perm(const char* word) { return pipedream::Permutation::parse(std::string_view(word)); }
