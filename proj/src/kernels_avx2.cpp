#include "nuforge/kernels.hpp"

#if defined(NUFORGE_AVX2_BUILD) && (defined(__x86_64__) || defined(__i386__))
#include <immintrin.h>

namespace nuforge::kernels::detail {

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

void compose_avx2(u32* out, const u32* a, const u32* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(b), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < n; ++i) out[i] = b[a[i]];
}

bool is_identity_avx2(const u32* a, std::size_t n) {
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i eq = _mm256_cmpeq_epi32(v, iota);
    if (_mm256_movemask_epi8(eq) != -1) return false;
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i)
    if (a[i] != i) return false;
  return true;
}

}  // namespace nuforge::kernels::detail

#else

namespace nuforge::kernels::detail {

bool cpu_has_avx2() { return false; }

void compose_avx2(u32* out, const u32* a, const u32* b, std::size_t n) {
  compose_scalar(out, a, b, n);
}

bool is_identity_avx2(const u32* a, std::size_t n) {
  return is_identity_scalar(a, n);
}

}  // namespace nuforge::kernels::detail

#endif
