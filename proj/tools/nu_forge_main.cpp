#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "nuforge/catalog.hpp"
#include "nuforge/checks.hpp"
#include "nuforge/kernels.hpp"
#include "nuforge/report.hpp"

namespace {

using namespace nuforge;

struct CommonOpts {
  std::string group;
  std::string presentation_file;
  std::string cayley_file;
  std::string perms_file;
  std::uint64_t max_cosets = kDefaultCosetCap;
  std::uint32_t max_order = kDefaultMaxNuOrder;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool timings = false;
};

void add_group_options(CLI::App* cmd, CommonOpts& o) {
  auto* g = cmd->add_option("--group", o.group, "catalog group name");
  auto* p = cmd->add_option("--presentation", o.presentation_file,
                            "presentation file (gens:/rel: lines)");
  auto* c = cmd->add_option("--cayley", o.cayley_file,
                            "Cayley table file (order: n header)");
  auto* m = cmd->add_option("--perms", o.perms_file,
                            "permutation generator file (cycle notation)");
  g->excludes(p)->excludes(c)->excludes(m);
  p->excludes(c)->excludes(m);
  c->excludes(m);
}

void add_common_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--max-cosets", o.max_cosets,
                  "coset enumeration limit (default 2^20)");
  cmd->add_option("--max-order", o.max_order,
                  "largest |G| accepted for the nu construction");
  cmd->add_option("--seed", o.seed, "seed for sampled checks");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--timings", o.timings, "include timings in JSON output");
}

std::string file_label(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

FiniteGroupInput resolve_group(const CommonOpts& o) {
  if (!o.group.empty()) return make_catalog_group(o.group);
  if (!o.presentation_file.empty())
    return group_from_presentation(file_label(o.presentation_file),
                                   load_presentation_file(o.presentation_file),
                                   o.max_cosets);
  if (!o.cayley_file.empty())
    return load_cayley_file(o.cayley_file, file_label(o.cayley_file));
  if (!o.perms_file.empty())
    return group_from_perms(file_label(o.perms_file),
                            load_perms_file(o.perms_file));
  throw InputError(
      "no group selected: use --group, --presentation, --cayley or --perms");
}

GroupReport make_group_report(const FiniteGroupInput& g, const CommonOpts& o,
                              const std::vector<std::string>& checks) {
  auto t0 = std::chrono::steady_clock::now();
  NuRealization r = realize_nu(g, o.max_cosets, o.max_order);
  auto realize_us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  CheckOptions copts;
  copts.seed = o.seed;
  copts.coset_cap = o.max_cosets;
  std::vector<CheckResult> results = run_checks(r, checks, copts);
  return build_group_report(r, std::move(results), realize_us);
}

void emit(const RunReport& rep, const CommonOpts& o) {
  if (o.format == "json")
    std::cout << report_to_json(rep, o.timings);
  else
    std::cout << report_to_text(rep);
}

int cmd_build(const CommonOpts& o) {
  FiniteGroupInput g = resolve_group(o);
  auto t0 = std::chrono::steady_clock::now();
  NuRealization r = realize_nu(g, o.max_cosets, o.max_order);
  auto realize_us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  RunReport rep;
  rep.seed = o.seed;
  rep.groups.push_back(build_group_report(r, {}, realize_us));
  emit(rep, o);
  return 0;
}

int cmd_verify(const CommonOpts& o, bool all,
               const std::vector<std::string>& checks, unsigned jobs) {
  for (const auto& id : checks)
    if (!check_id_known(id)) throw UnknownCheck(id);
  std::vector<FiniteGroupInput> groups;
  if (all) {
    for (const auto& name : default_corpus())
      groups.push_back(make_catalog_group(name));
  } else {
    groups.push_back(resolve_group(o));
  }
  std::vector<GroupReport> results(groups.size());
  std::atomic<std::size_t> next{0};
  std::mutex fail_lock;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= groups.size()) return;
      try {
        results[i] = make_group_report(groups[i], o, checks);
      } catch (...) {
        std::lock_guard<std::mutex> hold(fail_lock);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  unsigned nthreads = std::max(1u, std::min<unsigned>(jobs, groups.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  RunReport rep;
  rep.seed = o.seed;
  rep.groups = std::move(results);
  emit(rep, o);
  if (!rep.all_pass()) {
    for (const auto& g : rep.groups)
      for (const auto& c : g.checks)
        if (!c.pass) {
          std::cerr << "first failing check: " << c.check_id << " on "
                    << g.group << '\n';
          return 1;
        }
  }
  return 0;
}

int cmd_series(const CommonOpts& o, const std::string& which) {
  FiniteGroupInput g = resolve_group(o);
  NuRealization r = realize_nu(g, o.max_cosets, o.max_order);
  auto run = [&](const PermGroup& grp) {
    if (which == "lcs") return lower_central_series(grp, 64);
    if (which == "ucs") return upper_central_series(grp, 64);
    return derived_series(grp, 64);
  };
  SeriesRunReport rep;
  rep.group = g.label;
  rep.which = which;
  SeriesReport sg = run(g.regular_perm_group());
  SeriesReport sn = run(r.nu);
  rep.orders_g = sg.orders;
  rep.stabilized_g = sg.stabilized_at;
  rep.orders_nu = sn.orders;
  rep.stabilized_nu = sn.stabilized_at;
  if (o.format == "json")
    std::cout << series_to_json(rep);
  else
    std::cout << series_to_text(rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nu-forge: builds the crossed-square group nu(G) of a finite group, "
      "extracts the tensor square upsilon(G) = [G, G^phi] and the kernel "
      "mu(G) of the derived map, and verifies the commutator, series, "
      "kernel and exponent identities that hold in nu(G)"};
  app.set_version_flag("--version", std::string(kToolVersion) + " (simd: " +
                                        kernels::backend_name() + ")");
  app.require_subcommand(1);

  CommonOpts bopts;
  CLI::App* build = app.add_subcommand("build", "realize nu(G) and report orders");
  add_group_options(build, bopts);
  add_common_options(build, bopts);

  CommonOpts vopts;
  bool all = false;
  std::vector<std::string> checks;
  unsigned jobs = 1;
  CLI::App* verify =
      app.add_subcommand("verify", "run identity checks against nu(G)");
  add_group_options(verify, vopts);
  verify->add_flag("--all", all, "verify the whole default corpus");
  verify
      ->add_option("--check", checks,
                   "check ids, comma separated: lemma21, lcs, derived, "
                   "kernel, mu-central, zn, schur, bfc, nilpotency")
      ->delimiter(',');
  verify->add_option("--jobs", jobs, "worker threads across groups");
  add_common_options(verify, vopts);

  CommonOpts sopts;
  std::string which = "lcs";
  CLI::App* series =
      app.add_subcommand("series", "central/derived series of G and nu(G)");
  add_group_options(series, sopts);
  series->add_option("--which", which, "series kind")
      ->check(CLI::IsMember({"lcs", "ucs", "derived"}));
  add_common_options(series, sopts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return static_cast<int>(ExitCode::input_error);
  }

  try {
    if (build->parsed()) return cmd_build(bopts);
    if (verify->parsed()) {
      if (!all && vopts.group.empty() && vopts.presentation_file.empty() &&
          vopts.cayley_file.empty() && vopts.perms_file.empty())
        throw InputError("verify needs --all or a group selection");
      return cmd_verify(vopts, all, checks, jobs);
    }
    if (series->parsed()) return cmd_series(sopts, which);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::input_error);
  }
  return 0;
}
