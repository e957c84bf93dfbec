#pragma once

// Seeded verification suites. Each suite returns exact check records; the
// combined report is sorted by check id, so it is byte-identical for a given
// (suite, parameters, seed) regardless of the order in which cases ran.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetline/proj_surface.hpp"
#include "jetline/report.hpp"

namespace jetline {

inline const std::vector<std::string> kSuites = {"splitting", "equivariance-cmz", "bol", "phi", "casimir", "atlas", "all"};

struct VerifyParams {
  /// Upper bound on n; each suite has its own default when unset.
  std::optional<int> n;
  /// Single weight for the Casimir suites; the default sweeps -4..8.
  std::optional<int> k;
  std::uint64_t seed = 0;
  /// Atlas files for the atlas suite; the shipped atlases are used when empty.
  std::vector<std::string> atlas_paths;
};

struct SuiteResult {
  std::vector<CheckRecord> checks;
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
};

/// truncate o split = id, reconstruct o eval = id and SL(2)-equivariance of
/// split, on `count` seeded jets with n <= max_n, n <= m <= max_m.
SuiteResult suite_splitting(int max_n, int max_m, int count, std::uint64_t seed);
/// Both readings of the CMZ equivariance for n <= max_n and `maps` seeded Möbius maps.
SuiteResult suite_cmz(int max_n, int maps, std::uint64_t seed);
/// Symbol, conjugation invariance, annihilation of S^n(V) and pointwise agreement.
SuiteResult suite_bol(int max_n, int maps, std::uint64_t seed);
/// Linear algebra behind phi and the phi suites.
SuiteResult suite_phi(int max_n, std::uint64_t seed);
/// Casimir scalar, decomposition independence and the jet-built Casimir.
SuiteResult suite_casimir(const std::vector<int>& weights, int tensors, std::uint64_t seed);
/// The surface checks on one atlas.
SuiteResult suite_atlas(const Atlas& atlas, int max_n, int k);

/// Throws UnknownSuite, or AtlasParseError for a bad atlas file.
VerificationReport run_verify(const std::string& suite, const VerifyParams& params);

}  // namespace jetline
