#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuforge/checks.hpp"
#include "nuforge/nu.hpp"

namespace nuforge {

inline constexpr const char* kToolName = "nu-forge";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

struct GroupReport {
  std::string group;
  std::uint64_t order_g = 1;
  std::uint64_t order_derived = 1;
  std::uint64_t order_center = 1;
  std::uint64_t order_nu = 1;
  std::uint64_t order_upsilon = 1;
  std::uint64_t order_mu = 1;
  TensorSquareReport upsilon_structure;
  std::vector<CheckResult> checks;
  std::int64_t realize_us = 0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct RunReport {
  std::uint64_t seed = 0;
  std::vector<GroupReport> groups;

  bool all_pass() const {
    for (const auto& g : groups)
      if (!g.all_pass()) return false;
    return true;
  }
};

GroupReport build_group_report(const NuRealization& r,
                               std::vector<CheckResult> checks,
                               std::int64_t realize_us);

// Canonical JSON: stable key order, integers only. Timings are emitted only
// when include_timings is set, so identically seeded runs serialize
// byte-identically. Re-checks the order law and the derived-map quotient at
// serialization time.
std::string report_to_json(const RunReport& rep, bool include_timings);

std::string report_to_text(const RunReport& rep);

struct SeriesRunReport {
  std::string group;
  std::string which;  // lcs | ucs | derived
  std::vector<std::uint64_t> orders_g;
  std::size_t stabilized_g = 0;
  std::vector<std::uint64_t> orders_nu;
  std::size_t stabilized_nu = 0;
};

std::string series_to_json(const SeriesRunReport& rep);
std::string series_to_text(const SeriesRunReport& rep);

}  // namespace nuforge
