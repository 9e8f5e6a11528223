#pragma once

// Test-only oracle: the tensor square order of a finite abelian group by
// brute-force bilinear pairing counting, fully independent of the realized
// construction. The cyclic decomposition is recovered from the Cayley table
// by order counting (for each prime power p^k, the count of solutions of
// x^{p^k} = 1 determines the number of cyclic factors of order >= p^k), and
// the tensor square of a direct sum of cyclic groups multiplies gcds
// pairwise.

#include <cstdint>
#include <numeric>
#include <vector>

#include "nuforge/cayley.hpp"

namespace nuforge_test {

inline std::vector<std::uint64_t> cyclic_decomposition_by_counting(
    const nuforge::FiniteGroupInput& g) {
  using u64 = std::uint64_t;
  std::vector<u64> factors;
  u64 n = g.n;
  for (u64 p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    // count solutions of x^{p^k} = 1 for growing k
    std::vector<u64> counts{1};
    for (u64 pk = p;; pk *= p) {
      u64 c = 0;
      for (std::uint32_t x = 0; x < g.n; ++x)
        if (g.pow(x, pk) == 0) ++c;
      counts.push_back(c);
      if (c == counts[counts.size() - 2]) break;
    }
    // number of cyclic p-factors of order >= p^k is log_p of the count ratio
    for (std::size_t k = 1; k + 1 < counts.size() + 1; ++k) {
      if (k >= counts.size()) break;
      u64 ratio = counts[k] / counts[k - 1];
      u64 m = 0;
      while (ratio > 1) {
        ratio /= p;
        ++m;
      }
      // m factors have order >= p^k; factors with order exactly p^{k-1} drop out
      u64 m_next = 0;
      if (k + 1 < counts.size()) {
        u64 r2 = counts[k + 1] / counts[k];
        while (r2 > 1) {
          r2 /= p;
          ++m_next;
        }
      }
      u64 exactly_pk = m - m_next;
      u64 pk = 1;
      for (std::size_t i = 0; i < k; ++i) pk *= p;
      for (u64 i = 0; i < exactly_pk; ++i) factors.push_back(pk);
    }
  }
  return factors;
}

inline std::uint64_t abelian_tensor_square_order(
    const nuforge::FiniteGroupInput& g) {
  auto factors = cyclic_decomposition_by_counting(g);
  std::uint64_t result = 1;
  for (std::uint64_t a : factors)
    for (std::uint64_t b : factors) result *= std::gcd(a, b);
  return result;
}

}  // namespace nuforge_test
