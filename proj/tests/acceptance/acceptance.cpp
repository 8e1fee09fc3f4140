#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "verify.hpp"

using namespace maglab;

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<VerdictReport(const SuiteOptions&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  SuiteOptions options;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--jobs") == 0) options.jobs = std::max(1, std::atoi(argv[i + 1]));

  // All value comparisons are exact; the only tolerances are wall-clock limits.
  const std::vector<Criterion> criteria = {
      {1, "series fixtures", 1.0, [](const SuiteOptions&) { return suite_series(); }},
      {2, "oracle equivalence", 120.0, suite_oracle},
      {3, "mutant suite", 300.0, suite_mutants},
      {4, "isomer suite", 300.0, suite_isomers},
      {5, "F_n enumeration 6..30", 180.0, [](const SuiteOptions& o) { return suite_fsolve(6, 30, o); }},
      {6, "planar point counts", 30.0, [](const SuiteOptions&) { return suite_planar(); }},
      {7, "Euclidean fixtures", 30.0, suite_fixtures},
      {8, "property suites", 600.0, suite_properties},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    VerdictReport r;
    std::string error;
    try {
      r = c.run(options);
    } catch (const Error& e) {
      error = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int bad = 0;
    for (const auto& k : r.checks()) bad += !k.pass;
    bool pass = error.empty() && bad == 0 && !r.checks().empty() && secs < c.limit_seconds;
    failed += !pass;
    std::printf("%s criterion %d: %s (%zu checks, %d failed, %.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id,
                c.title, r.checks().size(), bad, secs, c.limit_seconds);
    if (!error.empty()) std::printf("  error: %s\n", error.c_str());
    for (const auto& k : r.checks())
      if (!k.pass) std::printf("  failed: %s %s\n", k.name.c_str(), k.detail.dump().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
