#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncshift {

// Outcome of an identity check. On failure the witness names the first
// differing coefficient or matrix entry.
struct CheckResult {
  bool pass = true;
  std::string witness;
  std::uint64_t seed = 0;  // seed actually used by randomized checks
  int retries = 0;         // reseeds after singular draws

  explicit operator bool() const { return pass; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }
  // Keeps the first failure.
  CheckResult& operator&=(const CheckResult& o) {
    if (pass && !o.pass) {
      pass = false;
      witness = o.witness;
    }
    retries += o.retries;
    return *this;
  }
};

class ExhaustedRetries : public std::runtime_error {
 public:
  explicit ExhaustedRetries(const std::string& what) : std::runtime_error(what) {}
};

// Reseed budget for randomized checks: NCSHIFT_MAX_RESEED, default 16.
int max_reseed();

}  // namespace ncshift
