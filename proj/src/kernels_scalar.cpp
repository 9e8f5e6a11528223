#include "nuforge/kernels.hpp"

namespace nuforge::kernels::detail {

void compose_scalar(u32* out, const u32* a, const u32* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = b[a[i]];
}

bool is_identity_scalar(const u32* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != i) return false;
  return true;
}

}  // namespace nuforge::kernels::detail
