#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "nuforge/permutation.hpp"

namespace nuforge {

inline constexpr std::uint64_t kDefaultExhaustiveBound = 1'000'000;

// Shared context for subgroups of one regular permutation action. In a
// regular action every point is the image of point 0 under a unique group
// element, so points double as group elements: u_p is the element with
// u_p(0) = p. Element arithmetic walks the Schreier tree of the action, so
// a product or inverse costs O(tree depth) point lookups instead of a full
// permutation composition.
class RegularAmbient {
 public:
  using u32 = std::uint32_t;

  // gens must generate a transitive action on {0..degree-1}; regularity is
  // the caller's guarantee (coset tables over the trivial subgroup and
  // right-multiplication actions built from element tables provide it).
  static std::shared_ptr<const RegularAmbient> build(
      std::vector<Permutation> gens, u32 degree);

  u32 degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  u32 apply(u32 p, u32 x) const;      // u_p(x)
  u32 apply_inv(u32 p, u32 x) const;  // u_p^-1(x)
  u32 mul(u32 p, u32 q) const { return apply(q, p); }
  u32 inv(u32 p) const { return apply_inv(p, 0); }
  u32 conj(u32 p, u32 q) const;       // point of u_q^-1 u_p u_q
  u32 comm(u32 p, u32 q) const;       // point of [u_p, u_q]
  std::uint64_t order_of(u32 p) const;
  Permutation element(u32 p) const;   // materializes u_p

  // Image point of every element under the generator-level map sending
  // generator i to gen_images[i] (permutations of some target action):
  // entry p is the image of u_p evaluated at the target's point 0. Only
  // meaningful when the map extends to a homomorphism; callers verify that
  // separately against the defining relators.
  std::vector<u32> pushforward(
      const std::vector<Permutation>& gen_images) const;

 private:
  RegularAmbient() = default;

  u32 degree_ = 0;
  std::vector<Permutation> gens_;      // kept verbatim, aligned with callers
  std::vector<Permutation> inv_gens_;
  // BFS spanning tree of the action rooted at 0
  std::vector<u32> parent_;
  std::vector<std::int32_t> via_gen_;  // -1 at the root
  std::vector<u32> bfs_order_;         // parents precede children
};

// Base and strong generating set with Schreier-vector transversals.
struct BsgsLevel {
  std::uint32_t base = 0;
  std::vector<Permutation> gens;
  std::vector<Permutation> inv_gens;
  std::vector<std::uint32_t> orbit;         // discovery order, base first
  std::vector<std::int32_t> parent;         // point -> parent point, -1 if absent
  std::vector<std::int32_t> via_gen;        // point -> gens index, -1 at base
  bool in_orbit(std::uint32_t pt) const {
    return pt == base || parent[pt] >= 0;
  }
  Permutation transversal(std::uint32_t pt) const;  // u with base -> pt
};

// A permutation group given by generators. Order and membership go through
// a deterministic Schreier-Sims BSGS (base points are smallest moved
// points). Immutable after construction apart from internally synchronized
// caches; safe for concurrent readers.
class PermGroup {
 public:
  using u32 = std::uint32_t;
  using u64 = std::uint64_t;

  PermGroup() : PermGroup(1, {}) {}  // trivial group on one point

  PermGroup(u32 degree, std::vector<Permutation> gens,
            std::shared_ptr<const RegularAmbient> ambient = nullptr);

  static PermGroup trivial(u32 degree) { return PermGroup(degree, {}); }

  u32 degree() const;
  const std::vector<Permutation>& generators() const;
  const std::shared_ptr<const RegularAmbient>& ambient() const;

  u64 order() const;  // product of BSGS transversal sizes
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  // subgroup relations by generator membership
  bool is_subgroup_of(const PermGroup& other) const;
  bool same_group_as(const PermGroup& other) const;

  // Sorted element set as points of the ambient regular action (the orbit
  // of point 0). Requires an ambient context.
  const std::vector<u32>& element_points() const;
  bool contains_point(u32 p) const;

  // Exhaustive closure enumeration, lexicographically sorted image arrays
  // (identity first). Independent of the BSGS machinery; throws
  // GroupTooLarge beyond `bound`.
  std::vector<Permutation> elements(u64 bound = kDefaultExhaustiveBound) const;

  // Full-arithmetic strong-generation audit: every generator and every
  // Schreier generator must sift to the identity.
  bool verify_bsgs() const;

  const std::vector<BsgsLevel>& bsgs_chain() const;

 private:
  struct Data;
  std::shared_ptr<Data> d_;
};

enum class SeriesKind { lower_central, upper_central, derived };

struct SeriesReport {
  SeriesKind kind = SeriesKind::lower_central;
  std::vector<PermGroup> terms;
  std::vector<std::uint64_t> orders;
  // Index from which the series is constant; terms.size() if truncated by
  // max_terms before stabilizing.
  std::size_t stabilized_at = 0;
  bool stabilized() const { return stabilized_at < terms.size(); }
};

struct AbelianInvariants {
  // d1 | d2 | ... | dk, each >= 2; empty for the trivial group
  std::vector<std::uint64_t> torsion_factors;
};

std::uint64_t group_order(const PermGroup& g);

PermGroup normal_closure(const PermGroup& g,
                         const std::vector<Permutation>& seeds);

// [H,K]: normal closure in <H,K> of the pairwise generator commutators.
// H and K are expected normal in g (generator-level check).
PermGroup commutator_subgroup(const PermGroup& g,
                              const std::vector<Permutation>& h_gens,
                              const std::vector<Permutation>& k_gens);
PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& h,
                              const PermGroup& k);

PermGroup center(const PermGroup& g);

// Action of g on the coset space of a normal subgroup n; degree = index,
// faithful on the quotient. Throws NotNormal.
PermGroup quotient_action(const PermGroup& g, const PermGroup& n);

SeriesReport lower_central_series(const PermGroup& g, std::size_t max_terms);
SeriesReport upper_central_series(const PermGroup& g, std::size_t max_terms);
SeriesReport derived_series(const PermGroup& g, std::size_t max_terms);

std::uint64_t exponent(const PermGroup& g,
                       std::uint64_t bound = kDefaultExhaustiveBound);

AbelianInvariants abelian_invariants(
    const PermGroup& g, std::uint64_t bound = kDefaultExhaustiveBound);

std::uint64_t max_class_size(const PermGroup& g,
                             std::uint64_t bound = kDefaultExhaustiveBound);

// nilpotency class via the lower central series; nullopt if not nilpotent
std::optional<std::size_t> nilpotency_class(const PermGroup& g,
                                            std::size_t max_terms = 64);

}  // namespace nuforge
