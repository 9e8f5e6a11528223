#pragma once

#include <cstdint>
#include <vector>

#include "nuforge/permutation.hpp"
#include "nuforge/presentation.hpp"
#include "nuforge/word.hpp"

namespace nuforge {

inline constexpr std::uint64_t kDefaultCosetCap = 1ull << 20;

// A completed coset table: the transitive action of a finitely presented
// group on the cosets of a subgroup. Coset 0 is the subgroup coset. Rows are
// indexed by coset, columns by generator and inverse generator.
class CosetTable {
 public:
  CosetTable() = default;

  std::uint32_t generator_count() const { return ngens_; }
  std::uint64_t live_count() const { return live_; }
  bool complete() const { return complete_; }

  std::uint32_t apply(std::uint32_t coset, GeneratorSymbol s) const;
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;

  // One permutation of the coset set per generator, in declaration order.
  // With a trivial subgroup the action is regular and faithful.
  std::vector<Permutation> to_permutations() const;

  // Re-scans every relator from every coset and every subgroup generator
  // from coset 0; true iff all traces return to their start.
  bool verify_traces(const Presentation& p,
                     const std::vector<Word>& subgroup_gens) const;

 private:
  friend CosetTable make_completed_table(std::uint32_t, std::uint64_t,
                                         std::vector<std::int32_t>);

  std::uint32_t ngens_ = 0;
  std::uint64_t live_ = 0;
  bool complete_ = false;
  std::vector<std::int32_t> tab_;  // live rows only, fully defined

  std::int32_t entry(std::uint64_t coset, std::uint32_t col) const {
    return tab_[coset * 2 * ngens_ + col];
  }
};

// HLT-style coset enumeration with a coincidence queue and capacity-pressure
// lookahead. Throws CosetLimitExceeded if the enumeration does not complete
// within cap cosets. Deterministic: relators are scanned in declaration
// order, cosets in ascending id.
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_gens,
                        std::uint64_t cap = kDefaultCosetCap);

}  // namespace nuforge
