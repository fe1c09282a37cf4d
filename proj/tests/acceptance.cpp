// Acceptance run: one verdict line per criterion. Exits 1 only on a failure
// that is not recorded as a known failure.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "ncshift/suites.hpp"

using namespace ncshift;

namespace {

struct Criterion {
  int id;
  std::string title;
  double time_limit = 0;  // seconds, 0 for none
};

const std::vector<Criterion> kCriteria = {
    {1, "defining relation", 30},
    {2, "base change"},
    {3, "shift coefficients"},
    {4, "ribbon basis and products"},
    {5, "duality"},
    {6, "Nagelsbach-Kostka"},
    {7, "power sums"},
    {8, "Hopf structure", 60},
    {9, "specialization"},
    {10, "quasi-Schur"},
    {11, "Bazin"},
};

}  // namespace

int main() {
  const std::uint64_t seed = 1;
  int unexpected = 0, known = 0;
  for (const Criterion& c : kCriteria) {
    std::vector<std::string> notes;
    bool fail = false, known_fail = false;
    double elapsed = 0;
    for (const SuiteInfo& s : suites()) {
      if (s.criterion != c.id) continue;
      auto t0 = std::chrono::steady_clock::now();
      Report rep = run_suite(s.name, s.default_degree, seed);
      elapsed += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (const ReportCase& rc : rep.cases) {
        if (rc.pass) continue;
        const std::string where = s.name + ":" + rc.id;
        switch (rc.expect) {
          case Expectation::Pass:
            fail = true;
            notes.push_back(where + " FAIL: " + rc.witness);
            break;
          case Expectation::KnownFailure:
            known_fail = true;
            notes.push_back(where + " known failure: " + rc.witness);
            break;
          case Expectation::PrintedDiffers:
            notes.push_back(where + " printed form differs (known)");
            break;
        }
      }
    }
    if (c.time_limit > 0 && elapsed >= c.time_limit) {
      fail = true;
      notes.push_back("runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(c.time_limit) + " s");
    }
    const char* verdict = fail ? "FAIL" : (known_fail ? "FAIL (known)" : "PASS");
    std::cout << "criterion " << c.id << " [" << c.title << "]: " << verdict << "\n";
    for (const auto& n : notes) std::cout << "    " << n.substr(0, 240) << "\n";
    unexpected += fail;
    known += known_fail && !fail;
  }
  std::cout << "summary: " << kCriteria.size() - unexpected - known << " pass, " << known << " known failures, "
            << unexpected << " unexpected failures\n";
  return unexpected == 0 ? 0 : 1;
}
