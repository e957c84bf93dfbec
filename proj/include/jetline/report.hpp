#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace jetline {

/// One exact identity check. On failure lhs/rhs hold the two unequal sides.
struct CheckRecord {
  std::string id;
  std::string inputs;
  bool pass = true;
  std::string lhs;
  std::string rhs;
};

CheckRecord make_check(std::string id, std::string inputs, bool pass, std::string lhs = {}, std::string rhs = {});

/// Stable 64-bit FNV-1a digest, rendered as 16 hex digits.
std::string digest(const std::string& text);

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  /// Informational values (e.g. normalization constants); never pass/fail.
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks;

  void add(CheckRecord c) { checks.push_back(std::move(c)); }
  void add_all(const std::vector<CheckRecord>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  /// Sorts by check id (stable), so output never depends on evaluation order.
  void normalize();
  /// Deterministic JSON; the timestamp field is omitted when include_timestamp is false.
  nlohmann::ordered_json to_json(bool include_timestamp) const;
};

}  // namespace jetline
