#include "engelkit/kernels.hpp"

namespace engelkit::kernels {

void left_sweep_scalar(const std::int32_t* mul, const std::int32_t* inv, int n,
                       int x, int depth, std::int32_t* out) {
  const std::int32_t ix = inv[x];
  for (int g = 0; g < n; ++g) {
    std::int32_t e = g;
    for (int k = 0; k < depth; ++k) {
      // [e, x] = (e^-1 x^-1)(e x)
      std::int32_t t1 = mul[static_cast<std::size_t>(inv[e]) * n + ix];
      std::int32_t t2 = mul[static_cast<std::size_t>(e) * n + x];
      e = mul[static_cast<std::size_t>(t1) * n + t2];
    }
    out[g] = e;
  }
}

void right_sweep_scalar(const std::int32_t* mul, const std::int32_t* inv, int n,
                        int x, int depth, std::int32_t* out) {
  for (int g = 0; g < n; ++g) {
    std::int32_t e = x;
    const std::int32_t ig = inv[g];
    for (int k = 0; k < depth; ++k) {
      std::int32_t t1 = mul[static_cast<std::size_t>(inv[e]) * n + ig];
      std::int32_t t2 = mul[static_cast<std::size_t>(e) * n + g];
      e = mul[static_cast<std::size_t>(t1) * n + t2];
    }
    out[g] = e;
  }
}

namespace {

SweepFn resolve_left() {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) return &left_sweep_avx2;
#endif
  return &left_sweep_scalar;
}

SweepFn resolve_right() {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) return &right_sweep_avx2;
#endif
  return &right_sweep_scalar;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

SweepFn left_sweep() {
  static const SweepFn fn = resolve_left();
  return fn;
}

SweepFn right_sweep() {
  static const SweepFn fn = resolve_right();
  return fn;
}

const char* active_impl() { return avx2_available() ? "avx2" : "scalar"; }

}  // namespace engelkit::kernels
