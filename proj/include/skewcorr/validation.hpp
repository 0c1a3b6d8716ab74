#pragma once

#include "skewcorr/jad.hpp"
#include "skewcorr/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skewcorr {

/// Outcome of one invariant checked over a batch of seeded cases.
struct SuiteReport {
  std::string suite;      // "properties" or "oracle"
  std::string check;      // e.g. "local_unitary_invariance"
  int passed = 0;
  int total = 0;
  double worst = 0.0;     // worst residual (or violation) seen
  double tolerance = 0.0;

  bool ok() const { return passed == total; }
};

struct ValidationConfig {
  std::uint64_t seed = 7;
  int cases = 50;
  JadOptions jad;
  /// Extra user-supplied state folded into every property check.
  std::optional<DensityMatrix> extra_state;
};

/// Local-unitary invariance, contractivity under channels on B, pure-state
/// reduction, qubit-qudit path consistency, basis certificate and the
/// Fisher-information identity.
std::vector<SuiteReport> run_property_suite(const ValidationConfig& config);

/// Brute-force sandwich on small dimensions plus the closed-form families.
std::vector<SuiteReport> run_oracle_suite(const ValidationConfig& config);

}  // namespace skewcorr
