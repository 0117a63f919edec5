#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "planarlab/unipoly.hpp"

namespace planarlab {

enum class SweepMode { PlanarTheorem, ApnParity, LemmaAudit };

struct SweepConfig {
  unsigned m = 8;
  int d_min = 3;
  int d_max = 8;
  std::uint64_t samples = 100;
  std::uint64_t seed = 0;
  SweepMode mode = SweepMode::PlanarTheorem;
  /// 0: every non-2-power position below d is random. Otherwise at most this
  /// many lower terms are drawn, which reaches the deep pipeline stages far
  /// more often than dense candidates do.
  unsigned max_terms = 0;
};

/// Degrees a candidate may have: non-2-powers in [max(d_min, 3), d_max],
/// restricted to d = 2 mod 4 for ApnParity.
std::vector<int> allowed_degrees(const SweepConfig& cfg);

/// Candidate `index` of the sweep. Depends only on (cfg, index).
UniPoly sweep_candidate(const SweepConfig& cfg, const Field& field, std::uint64_t index);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeLimit = 3;
inline constexpr int kExitInternalViolation = 4;

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planarlab
