#include "nuforge/perm_group.hpp"

#include <algorithm>
#include <set>

namespace nuforge {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Path from the tree root to p as generator indices, then applied in order.
template <typename ViaGen, typename Parent>
void collect_path(u32 p, const ViaGen& via_gen, const Parent& parent,
                  std::vector<u32>& out) {
  out.clear();
  while (via_gen[p] >= 0) {
    out.push_back(static_cast<u32>(via_gen[p]));
    p = static_cast<u32>(parent[p]);
  }
  std::reverse(out.begin(), out.end());
}

}  // namespace

std::shared_ptr<const RegularAmbient> RegularAmbient::build(
    std::vector<Permutation> gens, u32 degree) {
  if (degree == 0) throw InputError("ambient degree must be positive");
  auto amb = std::shared_ptr<RegularAmbient>(new RegularAmbient());
  amb->degree_ = degree;
  for (const auto& g : gens)
    if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
  amb->gens_ = std::move(gens);
  for (const auto& g : amb->gens_) amb->inv_gens_.push_back(g.inverse());
  amb->parent_.assign(degree, 0);
  amb->via_gen_.assign(degree, -1);
  std::vector<bool> seen(degree, false);
  seen[0] = true;
  amb->bfs_order_.push_back(0);
  for (std::size_t qi = 0; qi < amb->bfs_order_.size(); ++qi) {
    u32 p = amb->bfs_order_[qi];
    for (std::size_t j = 0; j < amb->gens_.size(); ++j) {
      u32 q = amb->gens_[j][p];
      if (!seen[q]) {
        seen[q] = true;
        amb->parent_[q] = p;
        amb->via_gen_[q] = static_cast<std::int32_t>(j);
        amb->bfs_order_.push_back(q);
      }
    }
  }
  internal_check(amb->bfs_order_.size() == degree,
                 "regular ambient action not transitive");
  return amb;
}

std::vector<RegularAmbient::u32> RegularAmbient::pushforward(
    const std::vector<Permutation>& gen_images) const {
  internal_check(gen_images.size() == gens_.size(),
                 "pushforward image count mismatch");
  std::vector<u32> img(degree_, 0);
  for (u32 p : bfs_order_) {
    if (via_gen_[p] < 0) continue;  // root
    img[p] = gen_images[static_cast<u32>(via_gen_[p])][img[parent_[p]]];
  }
  return img;
}

RegularAmbient::u32 RegularAmbient::apply(u32 p, u32 x) const {
  // u_p = g_{j1} * ... * g_{jd} along the root path, applied left to right
  thread_local std::vector<u32> path;
  collect_path(p, via_gen_, parent_, path);
  for (u32 j : path) x = gens_[j][x];
  return x;
}

RegularAmbient::u32 RegularAmbient::apply_inv(u32 p, u32 x) const {
  // inverse gens applied leaf to root; no reversal needed
  while (via_gen_[p] >= 0) {
    x = inv_gens_[static_cast<u32>(via_gen_[p])][x];
    p = parent_[p];
  }
  return x;
}

RegularAmbient::u32 RegularAmbient::conj(u32 p, u32 q) const {
  return mul(mul(inv(q), p), q);
}

RegularAmbient::u32 RegularAmbient::comm(u32 p, u32 q) const {
  return mul(mul(inv(p), inv(q)), mul(p, q));
}

std::uint64_t RegularAmbient::order_of(u32 p) const {
  // cycle length of 0 under right multiplication by u_p
  u64 ord = 1;
  for (u32 q = p; q != 0; q = apply(p, q)) ++ord;
  return ord;
}

Permutation RegularAmbient::element(u32 p) const {
  std::vector<u32> path;
  collect_path(p, via_gen_, parent_, path);
  Permutation e(degree_);
  for (u32 j : path) e = e * gens_[j];
  return e;
}

Permutation BsgsLevel::transversal(std::uint32_t pt) const {
  std::vector<u32> path;
  collect_path(pt, via_gen, parent, path);
  Permutation u(static_cast<u32>(parent.size()));
  for (u32 j : path) u = u * gens[j];
  return u;
}

// ---------------------------------------------------------------------------

struct PermGroup::Data {
  u32 degree = 1;
  std::vector<Permutation> gens;
  std::shared_ptr<const RegularAmbient> ambient;

  mutable std::mutex lock;
  mutable std::optional<std::vector<BsgsLevel>> chain;
  mutable std::optional<u64> order;
  mutable std::optional<std::vector<u32>> points;  // sorted 0-orbit (ambient)
};

PermGroup::PermGroup(u32 degree, std::vector<Permutation> gens,
                     std::shared_ptr<const RegularAmbient> ambient) {
  d_ = std::make_shared<Data>();
  d_->degree = degree;
  d_->ambient = std::move(ambient);
  if (d_->ambient && d_->ambient->degree() != degree)
    throw DegreeMismatch(d_->ambient->degree(), degree);
  std::set<Permutation> seen;
  for (auto& g : gens) {
    if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
    if (g.is_identity()) continue;
    if (seen.insert(g).second) d_->gens.push_back(std::move(g));
  }
}

PermGroup::u32 PermGroup::degree() const { return d_->degree; }

const std::vector<Permutation>& PermGroup::generators() const {
  return d_->gens;
}

const std::shared_ptr<const RegularAmbient>& PermGroup::ambient() const {
  return d_->ambient;
}

namespace {

u32 smallest_moved_point(const Permutation& p) {
  for (u32 i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  return p.degree();
}

u32 smallest_moved_point(const std::vector<Permutation>& gens, u32 degree) {
  u32 best = degree;
  for (const auto& g : gens) best = std::min(best, smallest_moved_point(g));
  return best;
}

void rebuild_orbit(BsgsLevel& lvl, u32 degree) {
  lvl.orbit.clear();
  lvl.parent.assign(degree, -1);
  lvl.via_gen.assign(degree, -1);
  lvl.orbit.push_back(lvl.base);
  for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
    u32 p = lvl.orbit[qi];
    for (std::size_t j = 0; j < lvl.gens.size(); ++j) {
      u32 q = lvl.gens[j][p];
      if (q != lvl.base && lvl.parent[q] < 0) {
        lvl.parent[q] = static_cast<std::int32_t>(p);
        lvl.via_gen[q] = static_cast<std::int32_t>(j);
        lvl.orbit.push_back(q);
      }
    }
  }
}

// Sift p through levels [from, end); returns the residue and the level at
// which sifting stopped (chain.size() if it fell off the end).
std::pair<Permutation, std::size_t> sift_from(
    const std::vector<BsgsLevel>& chain, std::size_t from, Permutation p) {
  for (std::size_t l = from; l < chain.size(); ++l) {
    if (p.is_identity()) return {std::move(p), l};
    u32 gamma = p[chain[l].base];
    if (!chain[l].in_orbit(gamma)) return {std::move(p), l};
    p = p * chain[l].transversal(gamma).inverse();
  }
  return {std::move(p), chain.size()};
}

// Deterministic Schreier-Sims over a global strong generating list: level l
// takes every strong generator fixing bases 0..l-1, so group generators
// always feed level 0. For subgroups of a regular ambient action the chain
// provably has a single level (any Schreier generator fixes ambient point 0
// and only the identity does), which is built directly to skip the Schreier
// generator sweep.
std::vector<BsgsLevel> build_chain(
    const std::vector<Permutation>& gens, u32 degree,
    const std::shared_ptr<const RegularAmbient>& ambient) {
  std::vector<BsgsLevel> chain;
  if (gens.empty()) return chain;

  if (ambient) {
    BsgsLevel lvl;
    lvl.base = smallest_moved_point(gens, degree);
    lvl.gens = gens;
    for (const auto& g : gens) lvl.inv_gens.push_back(g.inverse());
    rebuild_orbit(lvl, degree);
    chain.push_back(std::move(lvl));
    return chain;
  }

  std::vector<u32> bases;
  std::vector<Permutation> strong;
  auto fixes_prefix = [&](const Permutation& p, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      if (p[bases[i]] != bases[i]) return false;
    return true;
  };
  auto rebuild = [&] {
    chain.assign(bases.size(), BsgsLevel{});
    for (std::size_t l = 0; l < bases.size(); ++l) {
      chain[l].base = bases[l];
      for (const auto& s : strong) {
        if (!fixes_prefix(s, l)) continue;
        chain[l].gens.push_back(s);
        chain[l].inv_gens.push_back(s.inverse());
      }
      rebuild_orbit(chain[l], degree);
    }
  };
  auto add_strong = [&](Permutation r) {
    if (fixes_prefix(r, bases.size()))
      bases.push_back(smallest_moved_point(r));
    strong.push_back(std::move(r));
    rebuild();
  };

  for (const auto& g : gens) add_strong(g);

  // fixpoint: every Schreier generator must sift to the identity. An
  // addition rebuilds the chain, so the sweep re-indexes it on every access
  // and restarts as soon as `changed` is set.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t l = 0; !changed && l < chain.size(); ++l) {
      for (std::size_t oi = 0; !changed && oi < chain[l].orbit.size(); ++oi) {
        u32 gamma = chain[l].orbit[oi];
        Permutation u = chain[l].transversal(gamma);
        for (std::size_t j = 0; !changed && j < chain[l].gens.size(); ++j) {
          const Permutation& g = chain[l].gens[j];
          Permutation s = u * g * chain[l].transversal(g[gamma]).inverse();
          if (s.is_identity()) continue;
          auto [r, at] = sift_from(chain, l + 1, std::move(s));
          (void)at;
          if (!r.is_identity()) {
            add_strong(std::move(r));  // rebuilds the chain
            changed = true;
          }
        }
      }
    }
  }
  return chain;
}

}  // namespace

const std::vector<BsgsLevel>& PermGroup::bsgs_chain() const {
  std::lock_guard<std::mutex> hold(d_->lock);
  if (!d_->chain)
    d_->chain = build_chain(d_->gens, d_->degree, d_->ambient);
  return *d_->chain;
}

PermGroup::u64 PermGroup::order() const {
  {
    std::lock_guard<std::mutex> hold(d_->lock);
    if (d_->order) return *d_->order;
  }
  const auto& chain = bsgs_chain();
  u64 ord = 1;
  for (const auto& lvl : chain) ord *= lvl.orbit.size();
  std::lock_guard<std::mutex> hold(d_->lock);
  d_->order = ord;
  return ord;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != d_->degree) throw DegreeMismatch(p.degree(), d_->degree);
  if (p.is_identity()) return true;
  const auto& chain = bsgs_chain();
  auto [r, l] = sift_from(chain, 0, p);
  (void)l;
  return r.is_identity();
}

bool PermGroup::is_abelian() const {
  const auto& gens = d_->gens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const auto& g : d_->gens)
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

const std::vector<PermGroup::u32>& PermGroup::element_points() const {
  internal_check(d_->ambient != nullptr,
                 "element_points needs a regular ambient context");
  {
    std::lock_guard<std::mutex> hold(d_->lock);
    if (d_->points) return *d_->points;
  }
  std::vector<bool> seen(d_->degree, false);
  std::vector<u32> all{0};
  seen[0] = true;
  // right multiplication by generator permutations; semigroup closure
  // suffices in a finite group
  for (std::size_t qi = 0; qi < all.size(); ++qi) {
    u32 p = all[qi];
    for (const auto& g : d_->gens) {
      u32 q = g[p];
      if (!seen[q]) {
        seen[q] = true;
        all.push_back(q);
      }
    }
  }
  std::sort(all.begin(), all.end());
  std::lock_guard<std::mutex> hold(d_->lock);
  if (!d_->points) d_->points = std::move(all);
  return *d_->points;
}

bool PermGroup::contains_point(u32 p) const {
  const auto& pts = element_points();
  return std::binary_search(pts.begin(), pts.end(), p);
}

std::vector<Permutation> PermGroup::elements(u64 bound) const {
  std::set<Permutation> all;
  all.insert(Permutation(d_->degree));
  std::vector<Permutation> frontier{Permutation(d_->degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& g : d_->gens) {
        Permutation q = e * g;
        if (all.insert(q).second) {
          if (all.size() > bound) throw GroupTooLarge(all.size(), bound);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

bool PermGroup::verify_bsgs() const {
  const auto& chain = bsgs_chain();
  for (const auto& g : d_->gens) {
    auto [r, l] = sift_from(chain, 0, g);
    (void)l;
    if (!r.is_identity()) return false;
  }
  for (std::size_t l = 0; l < chain.size(); ++l) {
    const auto& lvl = chain[l];
    for (u32 gamma : lvl.orbit) {
      Permutation u = lvl.transversal(gamma);
      if (u[lvl.base] != gamma) return false;
      for (const auto& g : lvl.gens) {
        Permutation s = u * g * lvl.transversal(g[gamma]).inverse();
        auto [r, at] = sift_from(chain, l + 1, std::move(s));
        (void)at;
        if (!r.is_identity()) return false;
      }
    }
  }
  return true;
}

std::uint64_t group_order(const PermGroup& g) { return g.order(); }

}  // namespace nuforge
