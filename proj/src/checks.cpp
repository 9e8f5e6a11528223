#include "nuforge/checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

namespace nuforge {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

std::int64_t us_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                               t0)
      .count();
}

// element points of the embedded generators: ex[e] = point of x_e etc.
struct PointTables {
  const RegularAmbient* amb;
  std::vector<u32> ex, ey;
  std::vector<std::vector<u32>> cxy;  // cxy[g][h] = point of [x_g, y_h]

  explicit PointTables(const NuRealization& r) {
    amb = r.nu.ambient().get();
    u32 n = r.g.n;
    ex.resize(n);
    ey.resize(n);
    for (u32 e = 0; e < n; ++e) {
      ex[e] = r.x_perm[e][0];
      ey[e] = r.y_perm[e][0];
    }
    cxy.assign(n, std::vector<u32>(n));
    for (u32 a = 0; a < n; ++a)
      for (u32 b = 0; b < n; ++b) cxy[a][b] = amb->comm(ex[a], ey[b]);
  }
};

std::string tuple_witness(std::initializer_list<std::pair<const char*, u32>> kv) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) out << ',';
    out << k << '=' << v;
    first = false;
  }
  out << ')';
  return out.str();
}

// Iterates either the full tuple cube or `samples` seeded draws.
template <std::size_t Arity, typename Fn>
CheckResult sweep_tuples(const NuRealization& r, std::string id,
                         const CheckOptions& opts, u64 check_salt, Fn body) {
  auto t0 = Clock::now();
  CheckResult res;
  res.check_id = std::move(id);
  res.group_label = r.g.label;
  res.pass = true;
  u32 n = r.g.n;
  std::array<u32, Arity> tup{};
  bool exhaustive = Arity <= 3 || n <= opts.exhaustive_order_limit;
  if (exhaustive) {
    u64 total = 1;
    for (std::size_t i = 0; i < Arity; ++i) total *= n;
    for (u64 code = 0; code < total && res.pass; ++code) {
      u64 c = code;
      for (std::size_t i = 0; i < Arity; ++i) {
        tup[i] = static_cast<u32>(c % n);
        c /= n;
      }
      ++res.tuples_checked;
      body(tup, res);
    }
  } else {
    res.sampled = true;
    res.seed = opts.seed * 1000003ull + check_salt;
    std::mt19937_64 rng(res.seed);
    std::uniform_int_distribution<u32> pick(0, n - 1);
    for (u64 s = 0; s < opts.samples && res.pass; ++s) {
      for (std::size_t i = 0; i < Arity; ++i) tup[i] = pick(rng);
      ++res.tuples_checked;
      body(tup, res);
    }
  }
  res.elapsed_us = us_since(t0);
  return res;
}

bool in_sorted(const std::vector<u32>& v, u32 x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

std::vector<CheckResult> check_basic_relations(const NuRealization& r,
                                               const CheckOptions& opts) {
  PointTables pt(r);
  const auto& amb = *pt.amb;
  const FiniteGroupInput& g = r.g;
  std::vector<CheckResult> out;

  // (i) [g,h^phi]^{[x,y^phi]} = [g,h^phi]^{[x,y]}
  out.push_back(sweep_tuples<4>(
      r, "lemma21:i", opts, 1, [&](const auto& t, CheckResult& res) {
        auto [a, b, x, y] = std::tuple(t[0], t[1], t[2], t[3]);
        u32 lhs = amb.conj(pt.cxy[a][b], pt.cxy[x][y]);
        u32 rhs = amb.conj(pt.cxy[a][b], pt.ex[g.comm(x, y)]);
        if (lhs != rhs) {
          res.pass = false;
          res.witness = tuple_witness({{"g", a}, {"h", b}, {"x", x}, {"y", y}});
        }
      }));

  // (ii) the six-fold equality of mixed triple commutators
  out.push_back(sweep_tuples<3>(
      r, "lemma21:ii", opts, 2, [&](const auto& t, CheckResult& res) {
        auto [a, b, x] = std::tuple(t[0], t[1], t[2]);
        u32 v0 = amb.comm(pt.cxy[a][b], pt.ey[x]);
        u32 v1 = amb.comm(amb.comm(pt.ex[a], pt.ex[b]), pt.ey[x]);
        u32 v2 = amb.comm(pt.cxy[a][b], pt.ex[x]);
        u32 v3 = amb.comm(amb.comm(pt.ey[a], pt.ex[b]), pt.ey[x]);
        u32 v4 = amb.comm(amb.comm(pt.ey[a], pt.ey[b]), pt.ex[x]);
        u32 v5 = amb.comm(amb.comm(pt.ey[a], pt.ex[b]), pt.ex[x]);
        if (v1 != v0 || v2 != v0 || v3 != v0 || v4 != v0 || v5 != v0) {
          res.pass = false;
          res.witness = tuple_witness({{"g", a}, {"h", b}, {"x", x}});
        }
      }));

  // (iii) h in G' (or g in G'): [g,h^phi][h,g^phi] = 1
  {
    auto t0 = Clock::now();
    CheckResult res;
    res.check_id = "lemma21:iii";
    res.group_label = g.label;
    res.pass = true;
    for (u32 a = 0; a < g.n && res.pass; ++a)
      for (u32 b = 0; b < g.n && res.pass; ++b) {
        if (!in_sorted(r.derived_of_g, a) && !in_sorted(r.derived_of_g, b))
          continue;
        ++res.tuples_checked;
        if (amb.mul(pt.cxy[a][b], pt.cxy[b][a]) != 0) {
          res.pass = false;
          res.witness = tuple_witness({{"g", a}, {"h", b}});
        }
      }
    res.elapsed_us = us_since(t0);
    out.push_back(std::move(res));
  }

  // (iv) [g, [h,x]^phi] = [[h,x], g^phi]^{-1}
  out.push_back(sweep_tuples<3>(
      r, "lemma21:iv", opts, 4, [&](const auto& t, CheckResult& res) {
        auto [a, b, x] = std::tuple(t[0], t[1], t[2]);
        u32 c = g.comm(b, x);
        if (pt.cxy[a][c] != amb.inv(pt.cxy[c][a])) {
          res.pass = false;
          res.witness = tuple_witness({{"g", a}, {"h", b}, {"x", x}});
        }
      }));

  // (v) [[g,h^phi],[x,y^phi]] = [[g,h],[x,y]^phi]
  out.push_back(sweep_tuples<4>(
      r, "lemma21:v", opts, 5, [&](const auto& t, CheckResult& res) {
        auto [a, b, x, y] = std::tuple(t[0], t[1], t[2], t[3]);
        u32 lhs = amb.comm(pt.cxy[a][b], pt.cxy[x][y]);
        u32 rhs = pt.cxy[g.comm(a, b)][g.comm(x, y)];
        if (lhs != rhs) {
          res.pass = false;
          res.witness = tuple_witness({{"g", a}, {"h", b}, {"x", x}, {"y", y}});
        }
      }));

  return out;
}

namespace {

// series term with clamping past stabilization; clamping is only sound once
// the series is constant
const PermGroup& term_at(const SeriesReport& s, std::size_t i) {
  if (i < s.terms.size()) return s.terms[i];
  internal_check(s.stabilized(), "series truncated before requested term");
  return s.terms.back();
}

PermGroup join(const NuRealization& r,
               const std::vector<const PermGroup*>& parts) {
  std::vector<Permutation> gens;
  for (const auto* p : parts)
    gens.insert(gens.end(), p->generators().begin(), p->generators().end());
  return PermGroup(r.nu.degree(), std::move(gens), r.nu.ambient());
}

CheckResult equal_subgroups(const NuRealization& r, std::string id,
                            const PermGroup& lhs, const PermGroup& rhs) {
  auto t0 = Clock::now();
  CheckResult res;
  res.check_id = std::move(id);
  res.group_label = r.g.label;
  const auto& a = lhs.element_points();
  const auto& b = rhs.element_points();
  res.tuples_checked = a.size() + b.size();
  res.pass = a == b;
  if (!res.pass) {
    std::ostringstream w;
    w << "|lhs|=" << a.size() << " |rhs|=" << b.size();
    if (a != b && a.size() == b.size()) w << " (same order, different sets)";
    res.witness = w.str();
  }
  res.elapsed_us = us_since(t0);
  return res;
}

CheckResult contained_subgroup(const NuRealization& r, std::string id,
                               const PermGroup& small, const PermGroup& big) {
  auto t0 = Clock::now();
  CheckResult res;
  res.check_id = std::move(id);
  res.group_label = r.g.label;
  res.pass = true;
  for (u32 p : small.element_points()) {
    ++res.tuples_checked;
    if (!big.contains_point(p)) {
      res.pass = false;
      res.witness = "element point " + std::to_string(p) + " escapes";
      break;
    }
  }
  res.elapsed_us = us_since(t0);
  return res;
}

}  // namespace

std::vector<CheckResult> check_lcs_formula(const NuRealization& r,
                                           std::size_t i_max) {
  std::vector<CheckResult> out;
  SeriesReport nu_lcs = lower_central_series(r.nu, i_max + 1);
  SeriesReport g_lcs = lower_central_series(r.embedded_g, i_max + 1);
  SeriesReport gphi_lcs = lower_central_series(r.embedded_gphi, i_max + 1);
  for (std::size_t i = 2; i <= i_max; ++i) {
    const PermGroup& lhs = term_at(nu_lcs, i - 1);  // gamma_i, 1-indexed
    PermGroup cross_a = commutator_subgroup(
        r.nu, term_at(g_lcs, i - 2).generators(), r.embedded_gphi.generators());
    PermGroup cross_b = commutator_subgroup(
        r.nu, r.embedded_g.generators(), term_at(gphi_lcs, i - 2).generators());
    PermGroup rhs = join(r, {&term_at(g_lcs, i - 1), &term_at(gphi_lcs, i - 1),
                             &cross_a, &cross_b});
    out.push_back(equal_subgroups(r, "lcs:i=" + std::to_string(i), lhs, rhs));
  }
  return out;
}

std::vector<CheckResult> check_derived_formula(const NuRealization& r,
                                               std::size_t i_max) {
  std::vector<CheckResult> out;
  SeriesReport nu_der = derived_series(r.nu, i_max + 1);
  SeriesReport g_der = derived_series(r.embedded_g, i_max + 1);
  SeriesReport gphi_der = derived_series(r.embedded_gphi, i_max + 1);
  for (std::size_t i = 1; i <= i_max; ++i) {
    const PermGroup& lhs = term_at(nu_der, i);
    PermGroup rhs;
    if (i == 1) {
      // nu' = upsilon G' (G')^phi
      std::vector<Permutation> gens = r.upsilon.generators();
      for (u32 e : r.derived_of_g) {
        if (e == 0) continue;
        gens.push_back(r.x_perm[e]);
        gens.push_back(r.y_perm[e]);
      }
      rhs = PermGroup(r.nu.degree(), std::move(gens), r.nu.ambient());
    } else {
      PermGroup cross =
          commutator_subgroup(r.nu, term_at(g_der, i - 1).generators(),
                              term_at(gphi_der, i - 1).generators());
      rhs = join(r, {&term_at(g_der, i), &term_at(gphi_der, i), &cross});
    }
    out.push_back(
        equal_subgroups(r, "derived:i=" + std::to_string(i), lhs, rhs));
  }
  return out;
}

CheckResult check_mu_central(const NuRealization& r) {
  auto t0 = Clock::now();
  CheckResult res;
  res.check_id = "mu-central";
  res.group_label = r.g.label;
  res.pass = true;
  const auto& amb = *r.nu.ambient();
  for (const auto& m : r.mu.generators()) {
    for (const auto& c : r.nu.generators()) {
      ++res.tuples_checked;
      if (amb.comm(m[0], c[0]) != 0) {
        res.pass = false;
        res.witness = "mu generator at point " + std::to_string(m[0]) +
                      " fails to commute";
        break;
      }
    }
    if (!res.pass) break;
  }
  if (res.tuples_checked == 0) res.tuples_checked = 1;  // trivial mu
  res.elapsed_us = us_since(t0);
  return res;
}

std::vector<CheckResult> check_center_containment(const NuRealization& r,
                                                  std::size_t n_max) {
  std::vector<CheckResult> out;
  SeriesReport nu_ucs = upper_central_series(r.nu, n_max + 1);
  SeriesReport g_ucs = upper_central_series(r.embedded_g, n_max + 1);
  SeriesReport gphi_ucs = upper_central_series(r.embedded_gphi, n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    PermGroup cross_a = commutator_subgroup(
        r.nu, term_at(g_ucs, n).generators(), r.embedded_gphi.generators());
    PermGroup cross_b = commutator_subgroup(
        r.nu, r.embedded_g.generators(), term_at(gphi_ucs, n).generators());
    PermGroup lhs = join(r, {&cross_a, &cross_b});
    out.push_back(contained_subgroup(r, "zn:n=" + std::to_string(n), lhs,
                                     term_at(nu_ucs, n)));
  }
  return out;
}

std::vector<CheckResult> check_schur_neumann(const NuRealization& r) {
  std::vector<CheckResult> out;
  const FiniteGroupInput& g = r.g;
  u64 dg = r.derived_of_g.size();

  {
    auto t0 = Clock::now();
    CheckResult res;
    res.check_id = "schur:a";
    res.group_label = g.label;
    PermGroup ups_derived = commutator_subgroup(
        r.upsilon, r.upsilon.generators(), r.upsilon.generators());
    u64 e = exponent(ups_derived);
    res.pass = dg % e == 0;
    res.tuples_checked = ups_derived.order();
    res.note = "exp(upsilon')=" + std::to_string(e) +
               " |G'|=" + std::to_string(dg);
    if (!res.pass) res.witness = res.note;
    res.elapsed_us = us_since(t0);
    out.push_back(std::move(res));
  }
  {
    auto t0 = Clock::now();
    CheckResult res;
    res.check_id = "schur:b";
    res.group_label = g.label;
    PermGroup z = center(r.upsilon);
    u64 idx = r.order_upsilon / z.order();
    res.pass = r.order_upsilon % z.order() == 0 && dg % idx == 0;
    res.tuples_checked = r.order_upsilon;
    res.note = "|upsilon/Z(upsilon)|=" + std::to_string(idx) +
               " |G'|=" + std::to_string(dg);
    if (!res.pass) res.witness = res.note;
    res.elapsed_us = us_since(t0);
    out.push_back(std::move(res));
  }
  {
    auto t0 = Clock::now();
    CheckResult res;
    res.check_id = "schur:c";
    res.group_label = g.label;
    u64 e = 1;
    for (u32 a : r.derived_of_g) e = std::lcm(e, g.element_order(a));
    u64 zsize = g.center_elements().size();
    u64 index = g.n / zsize;
    res.pass = index % e == 0;
    res.tuples_checked = dg;
    res.note =
        "exp(G')=" + std::to_string(e) + " [G:Z(G)]=" + std::to_string(index);
    if (!res.pass) res.witness = res.note;
    res.elapsed_us = us_since(t0);
    out.push_back(std::move(res));
  }
  return out;
}

CheckResult check_bfc_witness(const FiniteGroupInput& g) {
  auto t0 = Clock::now();
  CheckResult res;
  res.check_id = "bfc";
  res.group_label = g.label;
  u64 d = g.max_conjugacy_class_size();
  std::vector<u32> derived = g.derived_subgroup();
  std::vector<u32> zc = g.center_elements();
  res.tuples_checked = g.n;
  res.note = "d=" + std::to_string(d) + " |G'|=" + std::to_string(derived.size());
  bool derived_central = std::includes(zc.begin(), zc.end(), derived.begin(),
                                       derived.end());
  res.pass = true;
  if (derived_central && d > derived.size()) {
    res.pass = false;
    res.witness = res.note + " with G' central";
  }
  res.elapsed_us = us_since(t0);
  return res;
}

CheckResult check_finite_by_nilpotent_witnesses(const FiniteGroupInput& g) {
  auto t0 = Clock::now();
  CheckResult res;
  res.check_id = "nilpotency";
  res.group_label = g.label;
  PermGroup reg = g.regular_perm_group();
  SeriesReport lcs = lower_central_series(reg, 64);
  SeriesReport ucs = upper_central_series(reg, 64);
  res.tuples_checked = lcs.terms.size() + ucs.terms.size();
  if (lcs.orders.back() == 1) {
    if (ucs.orders.back() != g.n) {
      res.pass = false;
      res.witness = "lower series reaches 1 but upper series stops at order " +
                    std::to_string(ucs.orders.back());
    } else {
      // minimal k with gamma_{k+1} = 1 and minimal m with Z_m = G
      std::size_t k = 0;
      while (lcs.orders[k] != 1) ++k;
      std::size_t m = 0;
      while (ucs.orders[m] != g.n) ++m;
      res.pass = k == m;
      res.note = "class k=" + std::to_string(k) + " m=" + std::to_string(m);
      if (!res.pass) res.witness = res.note;
    }
  } else {
    res.pass = true;
    res.note = "not nilpotent: gamma stabilizes at order " +
               std::to_string(lcs.orders.back()) + ", Z at order " +
               std::to_string(ucs.orders.back());
  }
  res.elapsed_us = us_since(t0);
  return res;
}

std::vector<CheckResult> check_quotient_kernels(const NuRealization& r,
                                                const CheckOptions& opts) {
  std::vector<CheckResult> out;
  if (r.order_nu > opts.kernel_pair_nu_limit) {
    CheckResult res;
    res.check_id = "kernel";
    res.group_label = r.g.label;
    res.pass = true;
    res.tuples_checked = 1;
    res.note = "skipped: |nu(G)| exceeds the pair limit";
    out.push_back(std::move(res));
    return out;
  }
  auto normals = r.g.normal_subgroups();
  std::size_t idx = 0;
  for (const auto& nset : normals) {
    auto t0 = Clock::now();
    CheckResult res;
    res.check_id = "kernel#" + std::to_string(idx++) + ":|N|=" +
                   std::to_string(nset.size());
    res.group_label = r.g.label;
    NuQuotientReport q = quotient_nu_map(r, nset, opts.coset_cap);
    res.pass = q.passed();
    res.tuples_checked = q.kernel_subgroup_order;
    res.note = "|nu|=" + std::to_string(q.nu_order) +
               " |K|=" + std::to_string(q.kernel_subgroup_order) +
               " |nu(G/N)|=" + std::to_string(q.quotient_nu_order);
    if (!res.pass) res.witness = res.note;
    res.elapsed_us = us_since(t0);
    out.push_back(std::move(res));
  }
  return out;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "lemma21", "lcs",  "derived", "kernel",
      "mu-central", "zn", "schur",  "bfc",     "nilpotency"};
  return ids;
}

bool check_id_known(const std::string& id) {
  const auto& ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::size_t default_series_depth(const NuRealization& r) {
  auto cls = nilpotency_class(r.nu);
  return cls ? *cls + 1 : 4;
}

std::vector<CheckResult> run_checks(const NuRealization& r,
                                    const std::vector<std::string>& ids,
                                    const CheckOptions& opts) {
  const std::vector<std::string>& selected = ids.empty() ? check_ids() : ids;
  for (const auto& id : selected)
    if (!check_id_known(id)) throw UnknownCheck(id);
  std::size_t depth =
      opts.series_terms ? opts.series_terms : default_series_depth(r);
  depth = std::max<std::size_t>(depth, 2);
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  for (const auto& id : selected) {
    if (id == "lemma21") append(check_basic_relations(r, opts));
    else if (id == "lcs") append(check_lcs_formula(r, depth));
    else if (id == "derived") append(check_derived_formula(r, depth));
    else if (id == "kernel") append(check_quotient_kernels(r, opts));
    else if (id == "mu-central") out.push_back(check_mu_central(r));
    else if (id == "zn") append(check_center_containment(r, depth));
    else if (id == "schur") append(check_schur_neumann(r));
    else if (id == "bfc") out.push_back(check_bfc_witness(r.g));
    else if (id == "nilpotency")
      out.push_back(check_finite_by_nilpotent_witnesses(r.g));
  }
  return out;
}

}  // namespace nuforge
