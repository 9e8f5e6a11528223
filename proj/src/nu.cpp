#include "nuforge/nu.hpp"

#include <algorithm>

namespace nuforge {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Generated subgroup from element points, with the generating set thinned to
// the points that actually grow the group (ascending scan).
PermGroup subgroup_from_points(const std::shared_ptr<const RegularAmbient>& amb,
                               u32 degree, std::vector<u32> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Permutation> gens;
  PermGroup current(degree, {}, amb);
  for (u32 p : points) {
    if (p == 0 || current.contains_point(p)) continue;
    gens.push_back(amb->element(p));
    current = PermGroup(degree, gens, amb);
  }
  return current;
}

}  // namespace

Presentation build_nu_presentation(const FiniteGroupInput& g) {
  Presentation p;
  u32 n = g.n;
  // x-copy generators first, then the phi copy; element e > 0 maps to
  // generator ids e-1 and (n-1) + e-1
  for (u32 e = 1; e < n; ++e) p.generator_names.push_back("g" + std::to_string(e));
  for (u32 e = 1; e < n; ++e) p.generator_names.push_back("p" + std::to_string(e));
  auto x = [&](u32 e) { return Word::generator(static_cast<int>(e - 1)); };
  auto y = [&](u32 e) {
    return Word::generator(static_cast<int>(n - 1 + e - 1));
  };
  // multiplication-table relators for both copies
  for (u32 a = 1; a < n; ++a)
    for (u32 b = 1; b < n; ++b) {
      u32 ab = g.mul(a, b);
      Word wx = concat(x(a), x(b));
      Word wy = concat(y(a), y(b));
      if (ab != 0) {
        wx = concat(wx, inverse(x(ab)));
        wy = concat(wy, inverse(y(ab)));
      }
      p.relators.push_back(free_reduce(wx));
      p.relators.push_back(free_reduce(wy));
    }
  // crossed conjugation relators over all non-identity triples
  for (u32 a = 1; a < n; ++a)
    for (u32 b = 1; b < n; ++b) {
      Word base = commutator_word(x(a), y(b));
      for (u32 k = 1; k < n; ++k) {
        u32 ak = g.conj(a, k);
        u32 bk = g.conj(b, k);
        Word target = inverse(commutator_word(x(ak), y(bk)));
        p.relators.push_back(
            free_reduce(concat(conjugate_word(base, x(k)), target)));
        p.relators.push_back(
            free_reduce(concat(conjugate_word(base, y(k)), target)));
      }
    }
  p.validate();
  return p;
}

NuRealization realize_nu(const FiniteGroupInput& g, u64 cap, u32 max_order) {
  if (g.n > max_order)
    throw InputError("group order " + std::to_string(g.n) +
                     " exceeds the nu-construction guard of " +
                     std::to_string(max_order) +
                     " (the relator count grows cubically; raise --max-order "
                     "to override)");
  NuRealization r;
  r.g = g;
  r.presentation = build_nu_presentation(g);

  CosetTable table = todd_coxeter(r.presentation, {}, cap);
  internal_check(table.verify_traces(r.presentation, {}),
                 "nu coset table fails relator traces");
  u32 degree = static_cast<u32>(std::max<u64>(table.live_count(), 1));
  std::vector<Permutation> gen_perms = table.to_permutations();

  auto ambient = RegularAmbient::build(gen_perms, degree);
  r.nu = PermGroup(degree, gen_perms, ambient);
  r.order_nu = r.nu.order();
  internal_check(r.order_nu == degree, "realized action is not regular");

  u32 n = g.n;
  r.x_perm.assign(n, Permutation(degree));
  r.y_perm.assign(n, Permutation(degree));
  r.gen_of.assign(n, -1);
  r.gen_of_phi.assign(n, -1);
  for (u32 e = 1; e < n; ++e) {
    r.gen_of[e] = static_cast<std::int32_t>(e - 1);
    r.gen_of_phi[e] = static_cast<std::int32_t>(n - 1 + e - 1);
    r.x_perm[e] = gen_perms[e - 1];
    r.y_perm[e] = gen_perms[n - 1 + e - 1];
  }

  // embedded copies carry G's multiplication table; checking products at
  // point 0 suffices in a regular action
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b) {
      u32 ab = g.mul(a, b);
      internal_check(r.x_perm[b][r.x_perm[a][0]] == r.x_perm[ab][0],
                     "embedded G copy violates the multiplication table");
      internal_check(r.y_perm[b][r.y_perm[a][0]] == r.y_perm[ab][0],
                     "embedded G^phi copy violates the multiplication table");
    }

  std::vector<Permutation> xg(r.x_perm.begin() + 1, r.x_perm.end());
  std::vector<Permutation> yg(r.y_perm.begin() + 1, r.y_perm.end());
  r.embedded_g = PermGroup(degree, xg, ambient);
  r.embedded_gphi = PermGroup(degree, yg, ambient);
  internal_check(r.embedded_g.order() == n && r.embedded_gphi.order() == n,
                 "embedded copy order differs from |G|");

  r.upsilon = commutator_subgroup(r.nu, xg, yg);
  r.order_upsilon = r.upsilon.order();
  internal_check(r.order_upsilon * n * n == r.order_nu,
                 "order law |nu| = |upsilon| |G|^2 fails");
  // normality of upsilon in nu, generator-wise
  for (const auto& ug : r.upsilon.generators())
    for (const auto& ng : r.nu.generators())
      internal_check(
          r.upsilon.contains_point(ambient->conj(ug[0], ng[0])),
          "upsilon is not normal in nu");
  // the two-step product decomposition: |upsilon * G| = |upsilon| * |G| and
  // adjoining the phi copy recovers all of nu
  {
    std::vector<Permutation> ug_gens = r.upsilon.generators();
    ug_gens.insert(ug_gens.end(), xg.begin(), xg.end());
    PermGroup ups_g(degree, ug_gens, ambient);
    internal_check(ups_g.order() == r.order_upsilon * n,
                   "|upsilon * G| differs from |upsilon| * |G|");
    ug_gens.insert(ug_gens.end(), yg.begin(), yg.end());
    PermGroup whole(degree, std::move(ug_gens), ambient);
    internal_check(whole.order() == r.order_nu,
                   "upsilon * G * G^phi does not recover nu");
  }

  // the derived map: both copies project onto G's regular action
  PermGroup g_reg = g.regular_perm_group();
  std::vector<Permutation> images;
  images.reserve(r.presentation.generator_names.size());
  for (u32 e = 1; e < n; ++e)
    images.push_back(g_reg.generators()[e - 1]);  // x_e -> e
  for (u32 e = 1; e < n; ++e)
    images.push_back(g_reg.generators()[e - 1]);  // y_e -> e
  // well-definedness: every defining relator evaluates to the identity in G
  for (const auto& rel : r.presentation.relators) {
    u32 acc = 0;
    for (const auto& s : rel) {
      u32 e = static_cast<u32>(s.id) < n - 1
                  ? static_cast<u32>(s.id) + 1
                  : static_cast<u32>(s.id) - (n - 1) + 1;
      acc = g.mul(acc, s.sign > 0 ? e : g.inv(e));
    }
    internal_check(acc == 0, "derived map is not well defined on a relator");
  }
  r.rho.image_point = ambient->pushforward(images);

  r.derived_of_g = g.derived_subgroup();
  // image of upsilon under the derived map is exactly G'
  {
    std::vector<u32> image;
    for (u32 p : r.upsilon.element_points()) image.push_back(r.rho.eval(p));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    internal_check(image == r.derived_of_g,
                   "derived map image differs from G'");
  }

  // mu = kernel of the derived map restricted to upsilon
  std::vector<u32> mu_points;
  for (u32 p : r.upsilon.element_points())
    if (r.rho.eval(p) == 0) mu_points.push_back(p);
  u64 mu_count = mu_points.size();
  r.mu = subgroup_from_points(ambient, degree, std::move(mu_points));
  r.order_mu = r.mu.order();
  internal_check(r.order_mu == mu_count, "mu point set is not a subgroup");
  internal_check(r.order_upsilon == r.order_mu * r.derived_of_g.size(),
                 "|upsilon| / |mu| differs from |G'|");

  // mu is central in nu (generator-wise commutation)
  for (const auto& mg : r.mu.generators())
    for (const auto& ng : r.nu.generators())
      internal_check(ambient->comm(mg[0], ng[0]) == 0,
                     "mu is not central in nu");

  return r;
}

TensorSquareReport tensor_square_report(const NuRealization& r) {
  TensorSquareReport rep;
  rep.order = r.order_upsilon;
  rep.exponent = exponent(r.upsilon);
  PermGroup derived =
      commutator_subgroup(r.upsilon, r.upsilon.generators(),
                          r.upsilon.generators());
  rep.derived_order = derived.order();
  rep.nilpotency_class = nilpotency_class(r.upsilon);
  rep.abelian = r.upsilon.is_abelian();
  if (rep.abelian)
    rep.abelian_invariants = abelian_invariants(r.upsilon).torsion_factors;
  return rep;
}

const PermGroup& mu_subgroup(const NuRealization& r) { return r.mu; }

NuQuotientReport quotient_nu_map(const FiniteGroupInput& g,
                                 const std::vector<u32>& n_elements,
                                 u64 cap) {
  NuRealization r = realize_nu(g, cap);
  return quotient_nu_map(r, n_elements, cap);
}

NuQuotientReport quotient_nu_map(const NuRealization& r,
                                 const std::vector<u32>& n_elements,
                                 u64 cap) {
  const FiniteGroupInput& g = r.g;
  std::vector<u32> nset(n_elements);
  std::sort(nset.begin(), nset.end());
  nset.erase(std::unique(nset.begin(), nset.end()), nset.end());
  if (!g.is_normal_subgroup(nset)) throw NotNormal();

  // with a trivial N the quotient realization is r itself (the enumeration
  // is deterministic), so skip the duplicate enumeration
  std::optional<NuRealization> rq_store;
  std::vector<u32> projection;
  if (nset.size() == 1) {
    projection.resize(g.n);
    for (u32 e = 0; e < g.n; ++e) projection[e] = e;
  } else {
    FiniteGroupInput::Quotient q = g.quotient(nset);
    projection = std::move(q.projection);
    rq_store = realize_nu(q.group, cap);
  }
  const NuRealization& rq = rq_store ? *rq_store : r;

  NuQuotientReport rep;
  rep.nu_order = r.order_nu;
  rep.quotient_nu_order = rq.order_nu;

  const auto& amb = r.nu.ambient();
  u32 degree = r.nu.degree();

  // K = <N, N^phi> [N, G^phi] [G, N^phi] as a generated subgroup
  std::vector<u32> kpoints;
  for (u32 s : nset) {
    if (s == 0) continue;
    kpoints.push_back(r.x_perm[s][0]);
    kpoints.push_back(r.y_perm[s][0]);
  }
  for (u32 s : nset) {
    if (s == 0) continue;
    for (u32 e = 1; e < g.n; ++e) {
      kpoints.push_back(amb->comm(r.x_perm[s][0], r.y_perm[e][0]));
      kpoints.push_back(amb->comm(r.x_perm[e][0], r.y_perm[s][0]));
    }
  }
  PermGroup k = subgroup_from_points(amb, degree, std::move(kpoints));
  rep.kernel_subgroup_order = k.order();

  // the induced map on generators: x_e -> x-copy of eN, y_e -> phi copy
  std::vector<Permutation> images;
  u32 qdeg = rq.nu.degree();
  for (u32 e = 1; e < g.n; ++e) {
    u32 img = projection[e];
    images.push_back(img == 0 ? Permutation(qdeg) : rq.x_perm[img]);
  }
  for (u32 e = 1; e < g.n; ++e) {
    u32 img = projection[e];
    images.push_back(img == 0 ? Permutation(qdeg) : rq.y_perm[img]);
  }
  std::vector<Permutation> inv_images;
  inv_images.reserve(images.size());
  for (const auto& p : images) inv_images.push_back(p.inverse());
  // homomorphism evidence: every relator of nu(G) maps to the identity
  for (const auto& rel : r.presentation.relators) {
    u32 acc = 0;
    for (const auto& s : rel) {
      u32 id = static_cast<u32>(s.id);
      acc = s.sign > 0 ? images[id][acc] : inv_images[id][acc];
    }
    internal_check(acc == 0, "induced map is not well defined on a relator");
  }
  std::vector<u32> pi0 = amb->pushforward(images);

  u64 kernel_count = 0;
  for (u32 p = 0; p < degree; ++p)
    if (pi0[p] == 0) ++kernel_count;
  bool k_inside = true;
  for (u32 p : k.element_points())
    if (pi0[p] != 0) k_inside = false;

  rep.kernel_maps_to_identity = k_inside;
  rep.kernel_equals_preimage = k_inside && kernel_count == k.order();
  rep.kernel_order_matches =
      rep.nu_order == rep.kernel_subgroup_order * rep.quotient_nu_order;
  return rep;
}

}  // namespace nuforge
