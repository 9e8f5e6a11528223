#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuforge/perm_group.hpp"
#include "nuforge/presentation.hpp"

namespace nuforge {

// A finite group as a multiplication table over element indices 0..n-1,
// index 0 the identity. The index order is the canonical element order;
// everything downstream (generator numbering, witnesses) derives from it.
struct FiniteGroupInput {
  using u32 = std::uint32_t;
  using u64 = std::uint64_t;

  std::string label;
  u32 n = 1;
  std::vector<u32> table;    // n*n, table[a*n+b] = a*b
  std::vector<u32> inverse;  // inverse[a]*a = a*inverse[a] = identity

  u32 mul(u32 a, u32 b) const { return table[a * n + b]; }
  u32 inv(u32 a) const { return inverse[a]; }
  u32 conj(u32 a, u32 b) const { return mul(mul(inv(b), a), b); }  // a^b
  u32 comm(u32 a, u32 b) const { return mul(inv(mul(b, a)), mul(a, b)); }
  u32 pow(u32 a, u64 k) const;

  // Validates the group axioms: identity at 0, rows/columns bijective,
  // two-sided inverses, associativity exhaustive for n <= 64 and on 10^5
  // seeded samples above. Throws InvalidCayleyTable.
  static FiniteGroupInput from_table(std::string label, u32 n,
                                     std::vector<u32> flat_table);

  // exhaustive element-level helpers; these stay independent of the
  // permutation engine so cross-checks have two routes
  u64 element_order(u32 a) const;
  bool is_abelian() const;
  std::vector<u32> subgroup_closure(std::vector<u32> seed) const;
  std::vector<u32> derived_subgroup() const;
  std::vector<u32> center_elements() const;
  std::vector<std::vector<u32>> conjugacy_classes() const;
  u64 max_conjugacy_class_size() const;
  bool is_subgroup(const std::vector<u32>& elems) const;
  bool is_normal_subgroup(const std::vector<u32>& elems) const;
  // every normal subgroup, as sorted element lists, ordered by (size, lex)
  std::vector<std::vector<u32>> normal_subgroups() const;

  struct Quotient;
  Quotient quotient(const std::vector<u32>& normal_elems) const;

  // right-multiplication action on the element set: a regular, flagged
  // permutation group with one generator per non-identity element
  PermGroup regular_perm_group() const;
};

struct FiniteGroupInput::Quotient {
  FiniteGroupInput group;
  std::vector<u32> projection;  // element -> quotient element
};

// Cayley-table file: `order: n` header then n lines of n indices.
FiniteGroupInput load_cayley_file(const std::string& path, std::string label);

// Permutation-generator file: optional `degree: n` header, then one
// permutation per line in disjoint-cycle notation.
std::vector<Permutation> load_perms_file(const std::string& path);

// Conversion by exhaustive closure, guarded at `bound` elements.
FiniteGroupInput group_from_perms(std::string label,
                                  const std::vector<Permutation>& gens,
                                  std::uint64_t bound = 5000);

// Enumerates the presented group over the trivial subgroup and reads the
// multiplication table off the coset table.
FiniteGroupInput group_from_presentation(std::string label,
                                         const Presentation& p,
                                         std::uint64_t cap,
                                         std::uint64_t order_bound = 5000);

}  // namespace nuforge
