// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is an exact integer identity; the only non-exact gate is
// the corpus realization time budget.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "abelian_oracle.hpp"
#include "nuforge/catalog.hpp"
#include "nuforge/checks.hpp"
#include "nuforge/report.hpp"

using namespace nuforge;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void verdict(int idx, const std::string& what, bool pass,
             const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", idx,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

std::string run_cli_capture(const std::string& args, int& exit_code) {
  std::string out;
  std::string cmd = std::string(NU_FORGE_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return out;
  }
  char buf[8192];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

bool all_pass(const std::vector<CheckResult>& v, std::string& why) {
  for (const auto& c : v)
    if (!c.pass) {
      why = c.check_id + " on " + c.group_label +
            (c.witness.empty() ? "" : " " + c.witness);
      return false;
    }
  return true;
}

}  // namespace

int main() {
  const auto& corpus = default_corpus();

  // shared realizations, timed for the runtime budget
  auto t0 = Clock::now();
  std::vector<FiniteGroupInput> groups;
  std::vector<NuRealization> rs;
  for (const auto& name : corpus) {
    groups.push_back(make_catalog_group(name));
    rs.push_back(realize_nu(groups.back()));
  }
  double realize_s =
      std::chrono::duration<double>(Clock::now() - t0).count();

  // 1. order law |nu(G)| = |upsilon(G)| * |G|^2, corpus under the budget
  {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      u64 n = groups[i].n;
      if (rs[i].order_nu != rs[i].order_upsilon * n * n) {
        ok = false;
        why = corpus[i];
        break;
      }
    }
    std::ostringstream d;
    d << "corpus realized in " << realize_s << "s";
    if (realize_s >= 60.0) {
      ok = false;
      why = "over the 60s budget";
    }
    verdict(1, "order law |nu| = |upsilon| * |G|^2 on the corpus", ok,
            why.empty() ? d.str() : why + "; " + d.str());
  }

  // 2. derived-map quotient |upsilon| / |mu| = |G'|
  {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      u64 dg = rs[i].derived_of_g.size();
      if (rs[i].order_upsilon != rs[i].order_mu * dg) {
        ok = false;
        why = corpus[i];
        break;
      }
    }
    verdict(2, "derived-map quotient |upsilon| / |mu| = |G'|", ok, why);
  }

  // 3. crossed-commutator relations, exhaustive with exact tuple counts
  {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < rs.size() && ok; ++i) {
      auto res = check_basic_relations(rs[i]);
      if (!all_pass(res, why)) {
        ok = false;
        break;
      }
      u64 n = groups[i].n;
      u64 d = rs[i].derived_of_g.size();
      u64 want[5] = {n * n * n * n, n * n * n, 2 * n * d - d * d, n * n * n,
                     n * n * n * n};
      for (int k = 0; k < 5; ++k) {
        if (n <= 12 && res[k].sampled) {
          ok = false;
          why = "unexpected sampling on " + corpus[i];
        } else if (res[k].tuples_checked != want[k]) {
          ok = false;
          why = "tuple count mismatch on " + corpus[i] + " item " +
                std::to_string(k);
        }
      }
    }
    verdict(3, "relation suite (i)-(v), exhaustive tuple counts", ok, why);
  }

  // 4. series product formulas, both sides independent, to stabilization + 1
  {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < rs.size() && ok; ++i) {
      std::size_t depth = default_series_depth(rs[i]);
      ok = all_pass(check_lcs_formula(rs[i], depth), why) &&
           all_pass(check_derived_formula(rs[i], depth), why);
    }
    verdict(4, "lower-central and derived series formulas", ok, why);
  }

  // 5. kernel identity of nu(G) -> nu(G/N) for every normal N
  {
    bool ok = true;
    std::string why;
    CheckOptions opts;
    for (std::size_t i = 0; i < rs.size() && ok; ++i) {
      if (rs[i].order_nu > 100000) continue;
      ok = all_pass(check_quotient_kernels(rs[i], opts), why);
    }
    verdict(5, "quotient-map kernel identity over all normal subgroups", ok,
            why);
  }

  // 6. centrality of mu and the iterated-centre containment
  {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < rs.size() && ok; ++i) {
      CheckResult mc = check_mu_central(rs[i]);
      if (!mc.pass) {
        ok = false;
        why = "mu-central on " + corpus[i];
        break;
      }
      ok = all_pass(check_center_containment(rs[i], default_series_depth(rs[i])),
                    why);
    }
    verdict(6, "mu <= Z(nu) and [Z_n(G),G^phi][G,Z_n(G)^phi] <= Z_n(nu)", ok,
            why);
  }

  // 7. exp(upsilon') divides |G'|
  {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < rs.size() && ok; ++i) {
      auto res = check_schur_neumann(rs[i]);
      if (!res[0].pass) {
        ok = false;
        why = corpus[i] + " " + res[0].note;
      }
    }
    verdict(7, "exp(upsilon') divides |G'|", ok, why);
  }

  // 8. abelian tensor squares match the bilinear pairing oracle
  {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < rs.size() && ok; ++i) {
      if (!groups[i].is_abelian()) continue;
      u64 want = nuforge_test::abelian_tensor_square_order(groups[i]);
      if (rs[i].order_upsilon != want) {
        ok = false;
        why = corpus[i] + ": got " + std::to_string(rs[i].order_upsilon) +
              ", oracle " + std::to_string(want);
      }
    }
    verdict(8, "abelian |upsilon| equals the gcd-pairing oracle", ok, why);
  }

  // 9. BSGS order equals exhaustive closure count
  {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < rs.size() && ok; ++i) {
      PermGroup reg = groups[i].regular_perm_group();
      if (reg.order() != reg.elements().size()) {
        ok = false;
        why = "corpus group " + corpus[i];
        break;
      }
      if (rs[i].order_nu <= 5000 &&
          rs[i].nu.order() != rs[i].nu.elements().size()) {
        ok = false;
        why = "nu of " + corpus[i];
      }
    }
    verdict(9, "BSGS order equals exhaustive closure count", ok, why);
  }

  // 10. byte-identical seeded verification runs
  {
    int code1 = 0, code2 = 0;
    std::string a = run_cli_capture("verify --all --seed 0 --format json", code1);
    std::string b = run_cli_capture("verify --all --seed 0 --format json", code2);
    bool ok = code1 == 0 && code2 == 0 && !a.empty() && a == b;
    std::string why;
    if (code1 != 0 || code2 != 0)
      why = "exit codes " + std::to_string(code1) + "/" + std::to_string(code2);
    else if (a != b)
      why = "reports differ";
    verdict(10, "verify --all --seed 0 is byte-identical across runs", ok, why);
  }

  if (failures == 0)
    std::printf("ACCEPTANCE: all criteria pass\n");
  else
    std::printf("ACCEPTANCE: %d criterion(s) failing\n", failures);
  return failures == 0 ? 0 : 1;
}
