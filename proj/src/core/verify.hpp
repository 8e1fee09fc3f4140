#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "codec.hpp"
#include "metric_space.hpp"

namespace maglab {

struct Check {
  std::string name;
  bool pass = false;
  json detail;
};

class VerdictReport {
 public:
  explicit VerdictReport(std::string subject = {}) : subject_(std::move(subject)) {}

  void add(std::string name, bool pass, json detail = nullptr);
  void append(const VerdictReport& other);
  const std::vector<Check>& checks() const { return checks_; }
  const std::string& subject() const { return subject_; }
  bool all_pass() const;
  void set_seconds(double s) { seconds_ = s; }
  double seconds() const { return seconds_; }
  /// Timing is omitted unless requested, keeping output byte-stable.
  json to_json(bool with_timing = false) const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
  double seconds_ = 0;
};

struct SuiteOptions {
  int jobs = 1;
  std::uint64_t seed = 20240917;
  int property_cases = 1000;
  int isometry_cap = 24;
};

const std::vector<std::string>& suite_names();
/// Throws UnknownName.
VerdictReport verify_suite(const std::string& name, const SuiteOptions& options = {});

VerdictReport suite_series();
VerdictReport suite_oracle(const SuiteOptions& options);
VerdictReport suite_mutants(const SuiteOptions& options);
VerdictReport suite_isomers(const SuiteOptions& options);
VerdictReport suite_fsolve(int lo, int hi, const SuiteOptions& options);
VerdictReport suite_fixtures(const SuiteOptions& options);
VerdictReport suite_planar();
VerdictReport suite_properties(const SuiteOptions& options);

/// Pairs (l, i, j) of the n = 4k+1 table violating |lambda - mu| <= |j - i|_{2k+1}.
std::vector<std::array<int, 3>> lambda_mu_violations(int k);

struct CompareFlags {
  bool magnitude = false;
  bool riesz = false;
  bool isometry = false;
};

VerdictReport compare_spaces(const FiniteMetricSpace& a, const FiniteMetricSpace& b, const CompareFlags& flags,
                             int isometry_cap = kIsometryCap);

VerdictReport identification_report(int n);

/// Runs fn(0..count-1) on up to `jobs` threads; fn writes into its own slot.
void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

}  // namespace maglab
