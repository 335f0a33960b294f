#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etanu/homology.hpp"
#include "etanu/io.hpp"
#include "etanu/limits.hpp"

namespace etanu {

// Knobs for a verification run.
struct SuiteConfig {
  std::uint64_t seed = 1;
  int random_cases = 50;
  int nmax = 7;
  int pmax = 3;
  int qmax = 3;
  CoefficientField field = CoefficientField::rationals();
  Limits limits;
  // Where replay bundles for failures land; empty disables writing.
  std::string bundle_dir = ".";
};

struct CaseResult {
  std::string id;
  bool ok = false;
  bool tight = false;
  std::string message;
  Json values;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  int failures = 0;
  bool aborted = false;  // stopped at the first violation
  std::string bundle_path;
  double wall_ms = 0;
  Json config;

  bool passed() const { return failures == 0 && !aborted; }
  int tight_count() const;
  Json to_json() const;
  std::string summary() const;
};

// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

// Runs one named suite over the standard corpus plus seeded random instances.
// A failed check emits a self-contained replay bundle (JSON holding the
// instances and parameters) and stops the suite.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

// Re-runs the single case stored in a replay bundle.
VerificationReport replay_bundle(const Json& bundle, const SuiteConfig& config);

}  // namespace etanu
