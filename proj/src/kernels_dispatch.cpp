#include "nuforge/kernels.hpp"

namespace nuforge::kernels {

namespace {

using ComposeFn = void (*)(u32*, const u32*, const u32*, std::size_t);
using IsIdentityFn = bool (*)(const u32*, std::size_t);

struct Backend {
  ComposeFn compose;
  IsIdentityFn is_identity;
  const char* name;
};

Backend select_backend() {
  if (detail::cpu_has_avx2())
    return {detail::compose_avx2, detail::is_identity_avx2, "avx2"};
  return {detail::compose_scalar, detail::is_identity_scalar, "scalar"};
}

const Backend& backend() {
  static const Backend b = select_backend();
  return b;
}

}  // namespace

void compose(u32* out, const u32* a, const u32* b, std::size_t n) {
  backend().compose(out, a, b, n);
}

bool is_identity(const u32* a, std::size_t n) {
  return backend().is_identity(a, n);
}

const char* backend_name() { return backend().name; }

}  // namespace nuforge::kernels
