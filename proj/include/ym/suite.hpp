#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ym/braid.hpp"
#include "ym/yangmills.hpp"

namespace ym {

struct DistributionReport {
  std::string name;
  std::string metric_kind;  // "tv", "chisq_p", "count", "sigma", "bool", "bytes"
  double metric = 0;
  double threshold = 0;
  bool pass = false;       // metric within threshold, in the kind's sense
  uint64_t size = 0;       // enumeration or sample size
  uint64_t seed = 0;
  std::string detail;
};

// Exact comparison: TV distance against a tolerance.
DistributionReport compare_laws(const std::string& name, const LoopLaw& a, const LoopLaw& b,
                                double tol);
// Statistical comparison: chi-square of empirical canonical-form counts
// against an exact table.
DistributionReport compare_law_statistical(const std::string& name,
                                           const std::vector<std::vector<int>>& samples,
                                           const LoopLaw& exact, const FiniteGroup& g,
                                           double alpha);

// Braid-invariance surrogate: for each braid, two-sample chi-square between
// the canonical forms of the raw tuples and of their braid images, with a
// Bonferroni-corrected level.
DistributionReport braidability_test(const std::string& name, const FiniteGroup& g,
                                     const std::vector<std::vector<int>>& samples,
                                     const std::vector<BraidWord>& braids, double alpha);

struct SuiteConfig {
  uint64_t seed = 7;
  unsigned threads = 1;
  bool skip_determinism = false;  // used internally by the determinism check
};

// Runs the full verification suite; deterministic for a fixed seed and
// independent of the thread count.
std::vector<DistributionReport> run_all(const SuiteConfig& cfg);

std::string report_text(const std::vector<DistributionReport>& reports);
std::string report_json(const std::vector<DistributionReport>& reports, uint64_t seed);

}  // namespace ym
