#include "nuforge/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace nuforge {

using json = nlohmann::ordered_json;

GroupReport build_group_report(const NuRealization& r,
                               std::vector<CheckResult> checks,
                               std::int64_t realize_us) {
  GroupReport g;
  g.group = r.g.label;
  g.order_g = r.g.n;
  g.order_derived = r.derived_of_g.size();
  g.order_center = r.g.center_elements().size();
  g.order_nu = r.order_nu;
  g.order_upsilon = r.order_upsilon;
  g.order_mu = r.order_mu;
  g.upsilon_structure = tensor_square_report(r);
  g.checks = std::move(checks);
  g.realize_us = realize_us;
  return g;
}

namespace {

json check_to_json(const CheckResult& c, bool include_timings) {
  json j;
  j["id"] = c.check_id;
  j["verdict"] = c.pass ? "pass" : "fail";
  j["tuples_checked"] = c.tuples_checked;
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.note.empty()) j["note"] = c.note;
  if (c.sampled) {
    j["sampled"] = true;
    j["seed"] = c.seed;
  }
  if (include_timings) j["elapsed_us"] = c.elapsed_us;
  return j;
}

json group_to_json(const GroupReport& g, bool include_timings) {
  // final guard: the two defining order identities must hold in anything we
  // serialize
  internal_check(g.order_upsilon * g.order_g * g.order_g == g.order_nu,
                 "report violates |nu| = |upsilon| |G|^2");
  internal_check(g.order_mu * g.order_derived == g.order_upsilon,
                 "report violates |upsilon| / |mu| = |G'|");
  json j;
  j["group"] = g.group;
  json orders;
  orders["G"] = g.order_g;
  orders["G_derived"] = g.order_derived;
  orders["G_center"] = g.order_center;
  orders["nu"] = g.order_nu;
  orders["upsilon"] = g.order_upsilon;
  orders["mu"] = g.order_mu;
  j["orders"] = orders;
  json ts;
  ts["order"] = g.upsilon_structure.order;
  ts["exponent"] = g.upsilon_structure.exponent;
  ts["derived_order"] = g.upsilon_structure.derived_order;
  if (g.upsilon_structure.nilpotency_class)
    ts["nilpotency_class"] = *g.upsilon_structure.nilpotency_class;
  ts["abelian"] = g.upsilon_structure.abelian;
  if (g.upsilon_structure.abelian)
    ts["abelian_invariants"] = g.upsilon_structure.abelian_invariants;
  j["upsilon"] = ts;
  json checks = json::array();
  for (const auto& c : g.checks) checks.push_back(check_to_json(c, include_timings));
  j["checks"] = checks;
  j["all_pass"] = g.all_pass();
  if (include_timings) j["realize_us"] = g.realize_us;
  return j;
}

}  // namespace

std::string report_to_json(const RunReport& rep, bool include_timings) {
  json j;
  j["tool"] = kToolName;
  j["tool_version"] = kToolVersion;
  j["schema_version"] = kReportSchemaVersion;
  j["seed"] = rep.seed;
  json groups = json::array();
  for (const auto& g : rep.groups)
    groups.push_back(group_to_json(g, include_timings));
  j["groups"] = groups;
  j["all_pass"] = rep.all_pass();
  return j.dump(2) + "\n";
}

namespace {

std::string invariants_str(const std::vector<std::uint64_t>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

}  // namespace

std::string report_to_text(const RunReport& rep) {
  std::ostringstream out;
  out << kToolName << ' ' << kToolVersion << "  (seed " << rep.seed << ")\n";
  out << std::left << std::setw(9) << "group" << std::right << std::setw(6)
      << "|G|" << std::setw(7) << "|G'|" << std::setw(7) << "|Z|"
      << std::setw(9) << "|nu|" << std::setw(9) << "|ups|" << std::setw(7)
      << "|mu|" << "  upsilon structure\n";
  for (const auto& g : rep.groups) {
    std::ostringstream ts;
    ts << "exp=" << g.upsilon_structure.exponent
       << " der=" << g.upsilon_structure.derived_order;
    if (g.upsilon_structure.nilpotency_class)
      ts << " class=" << *g.upsilon_structure.nilpotency_class;
    if (g.upsilon_structure.abelian)
      ts << " inv=" << invariants_str(g.upsilon_structure.abelian_invariants);
    out << std::left << std::setw(9) << g.group << std::right << std::setw(6)
        << g.order_g << std::setw(7) << g.order_derived << std::setw(7)
        << g.order_center << std::setw(9) << g.order_nu << std::setw(9)
        << g.order_upsilon << std::setw(7) << g.order_mu << "  " << ts.str()
        << '\n';
    for (const auto& c : g.checks) {
      out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << std::left
          << std::setw(24) << c.check_id << std::right << " tuples="
          << c.tuples_checked;
      if (c.sampled) out << " (sampled, seed " << c.seed << ")";
      if (!c.note.empty()) out << "  " << c.note;
      if (!c.witness.empty()) out << "  witness " << c.witness;
      out << "  (" << c.elapsed_us << " us)\n";
    }
  }
  out << (rep.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
  return out.str();
}

std::string series_to_json(const SeriesRunReport& rep) {
  json j;
  j["tool"] = kToolName;
  j["tool_version"] = kToolVersion;
  j["schema_version"] = kReportSchemaVersion;
  j["group"] = rep.group;
  j["which"] = rep.which;
  j["orders_G"] = rep.orders_g;
  j["stabilized_at_G"] = rep.stabilized_g;
  j["orders_nu"] = rep.orders_nu;
  j["stabilized_at_nu"] = rep.stabilized_nu;
  return j.dump(2) + "\n";
}

std::string series_to_text(const SeriesRunReport& rep) {
  std::ostringstream out;
  auto line = [&](const char* who, const std::vector<std::uint64_t>& v,
                  std::size_t stab) {
    out << who << " " << rep.which << " orders:";
    for (auto o : v) out << ' ' << o;
    if (stab < v.size())
      out << "  (stabilizes at index " << stab << ")";
    else
      out << "  (truncated before stabilization)";
    out << '\n';
  };
  out << rep.group << ":\n";
  line("  G ", rep.orders_g, rep.stabilized_g);
  line("  nu", rep.orders_nu, rep.stabilized_nu);
  return out.str();
}

}  // namespace nuforge
