#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuforge/nu.hpp"

namespace nuforge {

struct CheckResult {
  std::string check_id;
  std::string group_label;
  bool pass = false;
  std::uint64_t tuples_checked = 0;
  std::string witness;  // non-empty exactly when pass is false
  std::string note;     // informational, independent of the verdict
  std::int64_t elapsed_us = 0;
  std::uint64_t seed = 0;  // sampling seed; 0 and unused when exhaustive
  bool sampled = false;
};

struct CheckOptions {
  std::uint64_t seed = 0;
  // arity-4 relations are checked exhaustively up to this group order and on
  // `samples` seeded tuples above it
  std::uint32_t exhaustive_order_limit = 12;
  std::uint64_t samples = 100000;
  std::size_t series_terms = 0;  // 0: stabilization depth of nu + 1, else 4
  std::uint64_t coset_cap = kDefaultCosetCap;
  std::uint64_t kernel_pair_nu_limit = 100000;
};

// The crossed-commutator relation suite: five identities checked over all
// element tuples (or seeded samples for large groups).
std::vector<CheckResult> check_basic_relations(const NuRealization& r,
                                               const CheckOptions& opts = {});

// Lower-central-series product formula, both sides computed by independent
// routes (series of nu vs generated subgroup of the four factors), for each
// 2 <= i <= i_max.
std::vector<CheckResult> check_lcs_formula(const NuRealization& r,
                                           std::size_t i_max);

// Derived-series product formula; i = 1 uses the derived-subgroup form
// nu' = upsilon * G' * (G')^phi.
std::vector<CheckResult> check_derived_formula(const NuRealization& r,
                                               std::size_t i_max);

CheckResult check_mu_central(const NuRealization& r);

// [Z_n(G), G^phi][G, Z_n(G)^phi] <= Z_n(nu(G)) for 1 <= n <= n_max.
std::vector<CheckResult> check_center_containment(const NuRealization& r,
                                                  std::size_t n_max);

// (a) exp(upsilon') divides |G'|; (b) |upsilon / Z(upsilon)| divides |G'|;
// (c) exp(G') divides [G : Z(G)].
std::vector<CheckResult> check_schur_neumann(const NuRealization& r);

// Records the maximal conjugacy class size d and |G'|; asserts d <= |G'|
// only in the central-derived case, informational otherwise.
CheckResult check_bfc_witness(const FiniteGroupInput& g);

// For nilpotent groups the minimal k with trivial gamma_{k+1} must equal the
// minimal m with Z_m = G; for others the stabilized terms are reported.
CheckResult check_finite_by_nilpotent_witnesses(const FiniteGroupInput& g);

// Kernel identity of the induced map nu(G) -> nu(G/N) for every normal N.
std::vector<CheckResult> check_quotient_kernels(const NuRealization& r,
                                                const CheckOptions& opts = {});

const std::vector<std::string>& check_ids();
bool check_id_known(const std::string& id);

std::size_t default_series_depth(const NuRealization& r);

// Runs the selected registry ids (all of them when `ids` is empty) and
// aggregates the results; never throws on a failed verdict.
std::vector<CheckResult> run_checks(const NuRealization& r,
                                    const std::vector<std::string>& ids,
                                    const CheckOptions& opts = {});

}  // namespace nuforge
