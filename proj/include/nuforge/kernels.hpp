#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops for permutation arithmetic on image arrays.
// Scalar reference implementations plus an AVX2 gather variant selected at
// runtime; the two are equivalence-tested against each other.

namespace nuforge::kernels {

using u32 = std::uint32_t;

// out[i] = b[a[i]] for i in [0, n): the image array of "apply a, then b".
// out must not alias a or b.
void compose(u32* out, const u32* a, const u32* b, std::size_t n);

// true iff a[i] == i for all i in [0, n).
bool is_identity(const u32* a, std::size_t n);

// Name of the dispatched backend ("avx2" or "scalar").
const char* backend_name();

namespace detail {

void compose_scalar(u32* out, const u32* a, const u32* b, std::size_t n);
bool is_identity_scalar(const u32* a, std::size_t n);

// Present only when the build has an AVX2 object; guarded by cpu_has_avx2().
bool cpu_has_avx2();
void compose_avx2(u32* out, const u32* a, const u32* b, std::size_t n);
bool is_identity_avx2(const u32* a, std::size_t n);

}  // namespace detail

}  // namespace nuforge::kernels
