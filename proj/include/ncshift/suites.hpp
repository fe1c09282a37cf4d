#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncshift/serialize.hpp"

namespace ncshift {

struct SuiteInfo {
  std::string name;
  int criterion;       // acceptance criterion the suite belongs to
  int default_degree;  // degree bound that matches the criterion sizes
  std::string summary;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo& find_suite(const std::string& name);  // throws std::invalid_argument

// Runs a suite at the degree bound; per-case seeds derive from seed. Cases are
// sorted by id. ExhaustedRetries turns into a failing case.
Report run_suite(const std::string& name, int degree, std::uint64_t seed);
inline Report run_suite(const std::string& name, std::uint64_t seed = 1) {
  return run_suite(name, find_suite(name).default_degree, seed);
}

}  // namespace ncshift
