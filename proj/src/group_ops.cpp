#include <algorithm>
#include <numeric>

#include "nuforge/perm_group.hpp"

// Subgroup algorithms. Everything runs in the point calculus of a regular
// ambient action: for groups that already carry one the mapping is the
// identity; other groups are routed through their regular representation
// (exhaustive closure, bounded) and results are mapped back to the original
// degree.

namespace nuforge {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct World {
  std::shared_ptr<const RegularAmbient> amb;
  std::vector<u32> gen_points;        // the group's generators as points
  bool flagged = false;               // true: public form == ambient form
  u32 orig_degree = 1;
  std::vector<Permutation> elements;  // conversion table when !flagged

  PermGroup to_public(const std::vector<u32>& sub_gens) const {
    std::vector<Permutation> gens;
    gens.reserve(sub_gens.size());
    for (u32 p : sub_gens)
      gens.push_back(flagged ? amb->element(p) : elements[p]);
    return flagged ? PermGroup(orig_degree, std::move(gens), amb)
                   : PermGroup(orig_degree, std::move(gens));
  }
};

std::size_t element_index(const std::vector<Permutation>& sorted,
                          const Permutation& p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
  if (it == sorted.end() || !(*it == p)) throw ElementOutsideGroup();
  return static_cast<std::size_t>(it - sorted.begin());
}

World make_world(const PermGroup& g, u64 bound = kDefaultExhaustiveBound) {
  World w;
  w.orig_degree = g.degree();
  if (g.ambient()) {
    w.flagged = true;
    w.amb = g.ambient();
    for (const auto& gen : g.generators()) w.gen_points.push_back(gen[0]);
    return w;
  }
  w.flagged = false;
  w.elements = g.elements(bound);
  u32 n = static_cast<u32>(w.elements.size());
  std::vector<Permutation> reg;
  reg.reserve(g.generators().size());
  for (const auto& gen : g.generators()) {
    std::vector<u32> img(n);
    for (u32 i = 0; i < n; ++i)
      img[i] =
          static_cast<u32>(element_index(w.elements, w.elements[i] * gen));
    reg.push_back(Permutation(std::move(img)));
    w.gen_points.push_back(reg.back()[0]);
  }
  w.amb = RegularAmbient::build(std::move(reg), std::max<u32>(n, 1));
  return w;
}

// Locates an external permutation as a point of the world; membership in g
// is the caller's claim, checked via the BSGS first.
u32 point_of(const World& w, const PermGroup& g, const Permutation& p) {
  if (p.degree() != g.degree()) throw DegreeMismatch(p.degree(), g.degree());
  if (w.flagged) {
    if (!g.contains(p)) throw ElementOutsideGroup();
    return p[0];
  }
  return static_cast<u32>(element_index(w.elements, p));
}

// A subgroup inside a world: generator points plus the closed element set
// (the orbit of 0 under right multiplication, which is the subgroup itself).
struct Sub {
  std::vector<u32> gens;
  std::vector<u32> orbit;      // ascending
  std::vector<bool> mask;

  u64 order() const { return orbit.size(); }
  bool has(u32 p) const { return mask[p]; }
  bool operator==(const Sub& rhs) const { return orbit == rhs.orbit; }
};

Sub close_sub(const World& w, std::vector<u32> gen_points) {
  Sub s;
  std::sort(gen_points.begin(), gen_points.end());
  gen_points.erase(std::unique(gen_points.begin(), gen_points.end()),
                   gen_points.end());
  for (u32 p : gen_points)
    if (p != 0) s.gens.push_back(p);
  s.mask.assign(w.amb->degree(), false);
  s.mask[0] = true;
  std::vector<u32> bfs{0};
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (u32 g : s.gens) {
      u32 q = w.amb->mul(bfs[i], g);
      if (!s.mask[q]) {
        s.mask[q] = true;
        bfs.push_back(q);
      }
    }
  }
  std::sort(bfs.begin(), bfs.end());
  s.orbit = std::move(bfs);
  return s;
}

Sub whole_group(const World& w) { return close_sub(w, w.gen_points); }

Sub normal_closure_w(const World& w, const std::vector<u32>& group_gens,
                     std::vector<u32> seeds) {
  Sub n = close_sub(w, std::move(seeds));
  std::vector<u32> work = n.gens;
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (u32 c : group_gens) {
      u32 y = w.amb->conj(work[i], c);
      if (!n.has(y)) {
        work.push_back(y);
        n.gens.push_back(y);
        n = close_sub(w, n.gens);
      }
    }
  }
  return n;
}

Sub commutator_w(const World& w, const std::vector<u32>& a_gens,
                 const std::vector<u32>& b_gens) {
  std::vector<u32> seeds;
  for (u32 a : a_gens)
    for (u32 b : b_gens) seeds.push_back(w.amb->comm(a, b));
  std::vector<u32> ambient_gens = a_gens;
  ambient_gens.insert(ambient_gens.end(), b_gens.begin(), b_gens.end());
  return normal_closure_w(w, ambient_gens, std::move(seeds));
}

bool central_in(const World& w, u32 p, const std::vector<u32>& gens) {
  for (u32 g : gens)
    if (w.amb->comm(p, g) != 0) return false;
  return true;
}

Sub center_w(const World& w, const Sub& h) {
  Sub cen = close_sub(w, {});
  for (u32 p : h.orbit) {
    if (cen.has(p) || !central_in(w, p, h.gens)) continue;
    cen.gens.push_back(p);
    cen = close_sub(w, cen.gens);
  }
  return cen;
}

struct QuotientW {
  World world;                 // the quotient's own regular world
  std::vector<u32> rep_point;  // color -> ambient point of the coset rep
};

QuotientW quotient_w(const World& w, const Sub& h, const Sub& n) {
  for (u32 x : n.gens)
    for (u32 c : h.gens)
      if (!n.has(w.amb->conj(x, c))) throw NotNormal();
  constexpr u32 kUncolored = 0xffffffffu;
  std::vector<u32> color(w.amb->degree(), kUncolored);
  std::vector<u32> reps;
  for (u32 p : h.orbit) {
    if (color[p] != kUncolored) continue;
    u32 c = static_cast<u32>(reps.size());
    reps.push_back(p);
    for (u32 s : n.orbit) {
      u32 q = w.amb->apply(p, s);  // the coset N*u_p = { u_p(s) : s in N }
      internal_check(color[q] == kUncolored, "coset coloring collision");
      color[q] = c;
    }
  }
  internal_check(reps.size() * n.order() == h.order(),
                 "coset count mismatch in quotient");
  u32 deg = std::max<u32>(static_cast<u32>(reps.size()), 1);
  QuotientW out;
  std::vector<Permutation> qgens;
  out.world.flagged = true;
  out.world.orig_degree = deg;
  for (u32 g : h.gens) {
    std::vector<u32> img(deg);
    if (reps.empty()) img.assign(1, 0);
    for (u32 c = 0; c < reps.size(); ++c)
      img[c] = color[w.amb->mul(reps[c], g)];
    qgens.push_back(Permutation(std::move(img)));
    out.world.gen_points.push_back(qgens.back()[0]);
  }
  out.world.amb = RegularAmbient::build(qgens, deg);
  out.rep_point = std::move(reps);
  return out;
}

// series helpers ------------------------------------------------------------

SeriesReport finish_report(const World& w, SeriesKind kind,
                           const std::vector<Sub>& subs, std::size_t stab) {
  SeriesReport rep;
  rep.kind = kind;
  rep.stabilized_at = stab;
  for (const auto& s : subs) {
    rep.orders.push_back(s.order());
    rep.terms.push_back(w.to_public(s.gens));
  }
  return rep;
}

template <typename Step>
SeriesReport descending_series(const World& w, SeriesKind kind,
                               std::size_t max_terms, Step step) {
  std::vector<Sub> terms{whole_group(w)};
  std::size_t stab = 1;  // sentinel: not stabilized (== terms.size())
  if (terms.back().order() == 1) {
    return finish_report(w, kind, terms, 0);
  }
  while (terms.size() < max_terms) {
    Sub next = step(terms.back());
    if (next == terms.back()) {
      terms.push_back(std::move(next));
      stab = terms.size() - 2;
      break;
    }
    terms.push_back(std::move(next));
    if (terms.back().order() == 1) {
      stab = terms.size() - 1;
      break;
    }
    stab = terms.size() + 1;  // keep sentinel ahead
  }
  if (stab > terms.size()) stab = terms.size();
  return finish_report(w, kind, terms, stab);
}

SeriesReport lcs_w(const World& w, std::size_t max_terms) {
  Sub whole = whole_group(w);
  return descending_series(w, SeriesKind::lower_central, max_terms,
                           [&](const Sub& prev) {
                             return commutator_w(w, prev.gens, whole.gens);
                           });
}

SeriesReport derived_w(const World& w, std::size_t max_terms) {
  return descending_series(
      w, SeriesKind::derived, max_terms,
      [&](const Sub& prev) { return commutator_w(w, prev.gens, prev.gens); });
}

SeriesReport ucs_w(const World& w, std::size_t max_terms) {
  Sub whole = whole_group(w);
  std::vector<Sub> terms{close_sub(w, {})};
  std::size_t stab = terms.size() + 1;
  while (terms.size() < max_terms) {
    QuotientW q = quotient_w(w, whole, terms.back());
    Sub qcenter = center_w(q.world, whole_group(q.world));
    std::vector<u32> next_gens = terms.back().gens;
    for (u32 cg : qcenter.gens) next_gens.push_back(q.rep_point[cg]);
    Sub next = close_sub(w, std::move(next_gens));
    if (next == terms.back()) {
      terms.push_back(std::move(next));
      stab = terms.size() - 2;
      break;
    }
    terms.push_back(std::move(next));
    if (terms.back() == whole) {
      stab = terms.size() - 1;
      break;
    }
    stab = terms.size() + 1;
  }
  if (stab > terms.size()) stab = terms.size();
  return finish_report(w, SeriesKind::upper_central, terms, stab);
}

std::vector<u32> points_of(const World& w, const PermGroup& g,
                           const std::vector<Permutation>& perms) {
  std::vector<u32> pts;
  pts.reserve(perms.size());
  for (const auto& p : perms) pts.push_back(point_of(w, g, p));
  return pts;
}

}  // namespace

PermGroup normal_closure(const PermGroup& g,
                         const std::vector<Permutation>& seeds) {
  World w = make_world(g);
  Sub n = normal_closure_w(w, w.gen_points, points_of(w, g, seeds));
  return w.to_public(n.gens);
}

PermGroup commutator_subgroup(const PermGroup& g,
                              const std::vector<Permutation>& h_gens,
                              const std::vector<Permutation>& k_gens) {
  World w = make_world(g);
  Sub c = commutator_w(w, points_of(w, g, h_gens), points_of(w, g, k_gens));
  return w.to_public(c.gens);
}

PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& h,
                              const PermGroup& k) {
  return commutator_subgroup(g, h.generators(), k.generators());
}

PermGroup center(const PermGroup& g) {
  World w = make_world(g);
  Sub c = center_w(w, whole_group(w));
  return w.to_public(c.gens);
}

PermGroup quotient_action(const PermGroup& g, const PermGroup& n) {
  World w = make_world(g);
  Sub whole = whole_group(w);
  Sub nsub = close_sub(w, points_of(w, g, n.generators()));
  QuotientW q = quotient_w(w, whole, nsub);
  u32 deg = q.world.orig_degree;
  std::vector<Permutation> gens;
  for (u32 p : q.world.gen_points) gens.push_back(q.world.amb->element(p));
  PermGroup image(deg, std::move(gens), q.world.amb);
  internal_check(image.order() * nsub.order() == whole.order(),
                 "quotient action image order");
  return image;
}

SeriesReport lower_central_series(const PermGroup& g, std::size_t max_terms) {
  if (max_terms < 1) throw InputError("max_terms must be at least 1");
  return lcs_w(make_world(g), max_terms);
}

SeriesReport upper_central_series(const PermGroup& g, std::size_t max_terms) {
  if (max_terms < 1) throw InputError("max_terms must be at least 1");
  return ucs_w(make_world(g), max_terms);
}

SeriesReport derived_series(const PermGroup& g, std::size_t max_terms) {
  if (max_terms < 1) throw InputError("max_terms must be at least 1");
  return derived_w(make_world(g), max_terms);
}

std::uint64_t exponent(const PermGroup& g, std::uint64_t bound) {
  if (g.order() > bound) throw GroupTooLarge(g.order(), bound);
  World w = make_world(g, bound);
  Sub whole = whole_group(w);
  u64 e = 1;
  for (u32 p : whole.orbit) e = std::lcm(e, w.amb->order_of(p));
  return e;
}

AbelianInvariants abelian_invariants(const PermGroup& g, std::uint64_t bound) {
  if (!g.is_abelian()) throw NotAbelian();
  if (g.order() > bound) throw GroupTooLarge(g.order(), bound);
  World w = make_world(g, bound);
  std::vector<u64> factors;  // collected largest-first
  World cur = std::move(w);
  for (;;) {
    Sub whole = whole_group(cur);
    if (whole.order() == 1) break;
    u64 best = 1;
    u32 best_p = 0;
    for (u32 p : whole.orbit) {
      u64 o = cur.amb->order_of(p);
      if (o > best) {
        best = o;
        best_p = p;
      }
    }
    factors.push_back(best);
    // split off <x> of maximal order and continue in the quotient
    std::vector<u32> cyc{best_p};
    Sub xsub = close_sub(cur, std::move(cyc));
    QuotientW q = quotient_w(cur, whole, xsub);
    cur = std::move(q.world);
  }
  std::reverse(factors.begin(), factors.end());
  AbelianInvariants inv;
  inv.torsion_factors = std::move(factors);
  u64 product = 1;
  for (std::size_t i = 0; i < inv.torsion_factors.size(); ++i) {
    internal_check(inv.torsion_factors[i] >= 2, "invariant factor below 2");
    if (i + 1 < inv.torsion_factors.size())
      internal_check(
          inv.torsion_factors[i + 1] % inv.torsion_factors[i] == 0,
          "invariant factors must divide in ascending order");
    product *= inv.torsion_factors[i];
  }
  internal_check(product == g.order(), "invariant factor product");
  return inv;
}

std::uint64_t max_class_size(const PermGroup& g, std::uint64_t bound) {
  if (g.order() > bound) throw GroupTooLarge(g.order(), bound);
  World w = make_world(g, bound);
  Sub whole = whole_group(w);
  std::vector<bool> seen(w.amb->degree(), false);
  u64 best = 1;
  for (u32 p : whole.orbit) {
    if (seen[p]) continue;
    std::vector<u32> cls{p};
    seen[p] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (u32 c : whole.gens) {
        u32 q = w.amb->conj(cls[i], c);
        if (!seen[q]) {
          seen[q] = true;
          cls.push_back(q);
        }
      }
    }
    best = std::max<u64>(best, cls.size());
  }
  return best;
}

std::optional<std::size_t> nilpotency_class(const PermGroup& g,
                                            std::size_t max_terms) {
  SeriesReport lcs = lower_central_series(g, max_terms);
  if (lcs.orders.back() == 1) return lcs.terms.size() - 1;
  return std::nullopt;
}

}  // namespace nuforge
