// AVX2 variants of the Engel sweeps. This translation unit is compiled with
// -mavx2; the functions are only reachable through the runtime dispatch in
// kernels_scalar.cpp, which checks cpu support first.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "engelkit/kernels.hpp"

namespace engelkit::kernels {

namespace {

inline __m256i gather32(const std::int32_t* base, __m256i idx) {
  return _mm256_i32gather_epi32(base, idx, 4);
}

}  // namespace

void left_sweep_avx2(const std::int32_t* mul, const std::int32_t* inv, int n,
                     int x, int depth, std::int32_t* out) {
  const __m256i vn = _mm256_set1_epi32(n);
  const __m256i vx = _mm256_set1_epi32(x);
  const __m256i vix = _mm256_set1_epi32(inv[x]);
  int g = 0;
  for (; g + 8 <= n; g += 8) {
    __m256i e = _mm256_setr_epi32(g, g + 1, g + 2, g + 3, g + 4, g + 5, g + 6, g + 7);
    for (int k = 0; k < depth; ++k) {
      __m256i ie = gather32(inv, e);
      __m256i t1 = gather32(mul, _mm256_add_epi32(_mm256_mullo_epi32(ie, vn), vix));
      __m256i t2 = gather32(mul, _mm256_add_epi32(_mm256_mullo_epi32(e, vn), vx));
      e = gather32(mul, _mm256_add_epi32(_mm256_mullo_epi32(t1, vn), t2));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + g), e);
  }
  for (; g < n; ++g) {
    std::int32_t e = g;
    for (int k = 0; k < depth; ++k) {
      std::int32_t t1 = mul[static_cast<std::size_t>(inv[e]) * n + inv[x]];
      std::int32_t t2 = mul[static_cast<std::size_t>(e) * n + x];
      e = mul[static_cast<std::size_t>(t1) * n + t2];
    }
    out[g] = e;
  }
}

void right_sweep_avx2(const std::int32_t* mul, const std::int32_t* inv, int n,
                      int x, int depth, std::int32_t* out) {
  const __m256i vn = _mm256_set1_epi32(n);
  const __m256i vx = _mm256_set1_epi32(x);
  int g = 0;
  for (; g + 8 <= n; g += 8) {
    __m256i vg = _mm256_setr_epi32(g, g + 1, g + 2, g + 3, g + 4, g + 5, g + 6, g + 7);
    __m256i vig = gather32(inv, vg);
    __m256i e = vx;
    for (int k = 0; k < depth; ++k) {
      __m256i ie = gather32(inv, e);
      __m256i t1 = gather32(mul, _mm256_add_epi32(_mm256_mullo_epi32(ie, vn), vig));
      __m256i t2 = gather32(mul, _mm256_add_epi32(_mm256_mullo_epi32(e, vn), vg));
      e = gather32(mul, _mm256_add_epi32(_mm256_mullo_epi32(t1, vn), t2));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + g), e);
  }
  for (; g < n; ++g) {
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

}  // namespace engelkit::kernels

#endif  // x86_64
