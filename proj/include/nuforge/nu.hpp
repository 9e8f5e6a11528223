#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nuforge/cayley.hpp"
#include "nuforge/perm_group.hpp"
#include "nuforge/presentation.hpp"
#include "nuforge/todd_coxeter.hpp"

namespace nuforge {

inline constexpr std::uint32_t kDefaultMaxNuOrder = 24;

// The derived map on the crossed commutator subgroup: [g, h^phi] |-> [g, h].
// Realized as the point-level evaluation of the generator map sending both
// embedded copies onto G; image(p) is a G element index for every point p of
// the realized group.
struct RhoPrime {
  std::vector<std::uint32_t> image_point;  // nu point -> G element index
  std::uint32_t eval(std::uint32_t nu_point) const {
    return image_point[nu_point];
  }
};

// nu(G) realized as a regular permutation group, with the named subobjects:
// the two embedded copies of G, the crossed commutator subgroup
// upsilon = [G, G^phi], and mu = the kernel of the derived map, which is a
// central subgroup with upsilon/mu isomorphic to G'.
struct NuRealization {
  FiniteGroupInput g;
  Presentation presentation;

  PermGroup nu;
  PermGroup embedded_g;
  PermGroup embedded_gphi;
  PermGroup upsilon;
  PermGroup mu;

  // element index (0 = identity) -> generator permutation; index 0 holds the
  // identity permutation for uniform indexing
  std::vector<Permutation> x_perm;  // the G copy
  std::vector<Permutation> y_perm;  // the G^phi copy
  // element index -> generator index in the presentation (-1 for identity)
  std::vector<std::int32_t> gen_of;
  std::vector<std::int32_t> gen_of_phi;

  RhoPrime rho;
  std::vector<std::uint32_t> derived_of_g;  // G' inside G, sorted

  std::uint64_t order_nu = 1;
  std::uint64_t order_upsilon = 1;
  std::uint64_t order_mu = 1;

  bool in_mu(std::uint32_t nu_point) const {
    return upsilon.contains_point(nu_point) && rho.eval(nu_point) == 0;
  }
};

// The defining presentation on one generator per non-identity element of
// each copy: multiplication-table relators for both copies plus, for every
// triple (g,h,k) of non-identity elements, the two crossed conjugation
// relators  [x_g, y_h]^{x_k} = [x_{g^k}, y_{h^k}]  and
// [x_g, y_h]^{y_k} = [x_{g^k}, y_{h^k}].
Presentation build_nu_presentation(const FiniteGroupInput& g);

// Enumerates the presentation over the trivial subgroup, checks the full
// relator traces, and assembles the realization. Construction asserts the
// order law |nu| = |upsilon| * |G|^2, the embedded-copy multiplication
// tables, normality of upsilon, |upsilon| / |mu| = |G'|, and centrality of
// mu. Throws CosetLimitExceeded if cap is insufficient and InputError for
// |G| > max_order.
NuRealization realize_nu(const FiniteGroupInput& g,
                         std::uint64_t cap = kDefaultCosetCap,
                         std::uint32_t max_order = kDefaultMaxNuOrder);

struct TensorSquareReport {
  std::uint64_t order = 1;
  std::uint64_t exponent = 1;
  std::uint64_t derived_order = 1;
  std::optional<std::size_t> nilpotency_class;
  bool abelian = true;
  std::vector<std::uint64_t> abelian_invariants;  // when abelian
};

TensorSquareReport tensor_square_report(const NuRealization& r);

// mu(G) as a subgroup (kernel of the derived map).
const PermGroup& mu_subgroup(const NuRealization& r);

struct NuQuotientReport {
  std::uint64_t nu_order = 1;
  std::uint64_t quotient_nu_order = 1;
  std::uint64_t kernel_subgroup_order = 1;
  bool kernel_order_matches = false;  // |nu(G)| / |K| == |nu(G/N)|
  bool kernel_maps_to_identity = false;
  bool kernel_equals_preimage = false;  // K is exactly the kernel point set
  bool passed() const {
    return kernel_order_matches && kernel_maps_to_identity &&
           kernel_equals_preimage;
  }
};

// Builds nu(G) and nu(G/N), forms K = <N, N^phi> [N, G^phi] [G, N^phi]
// inside nu(G), and checks that K is exactly the kernel of the induced map
// nu(G) -> nu(G/N). Throws NotNormal if n_elements is not normal in G.
NuQuotientReport quotient_nu_map(const FiniteGroupInput& g,
                                 const std::vector<std::uint32_t>& n_elements,
                                 std::uint64_t cap = kDefaultCosetCap);

// Same check reusing an existing realization of G.
NuQuotientReport quotient_nu_map(const NuRealization& r,
                                 const std::vector<std::uint32_t>& n_elements,
                                 std::uint64_t cap = kDefaultCosetCap);

}  // namespace nuforge
