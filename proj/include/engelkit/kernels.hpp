#pragma once

#include <cstdint>

namespace engelkit::kernels {

// Engel commutator sweeps: the inner loops of every Engel-set computation.
// Both fill out[g] for g in [0, n):
//   left:  out[g] = [g,_depth x]   (chain e <- [e, x],  x fixed)
//   right: out[g] = [x,_depth g]   (chain e <- [e, g],  per-lane g)
// `mul` is the n*n multiplication table, `inv` the inverse table.
// The chains are independent across g, so the sweep vectorizes with 32-bit
// table gathers; the AVX2 variant is selected at runtime and is equivalence-
// tested against the scalar reference.

using SweepFn = void (*)(const std::int32_t* mul, const std::int32_t* inv, int n,
                         int x, int depth, std::int32_t* out);

void left_sweep_scalar(const std::int32_t* mul, const std::int32_t* inv, int n,
                       int x, int depth, std::int32_t* out);
void right_sweep_scalar(const std::int32_t* mul, const std::int32_t* inv, int n,
                        int x, int depth, std::int32_t* out);

#if defined(__x86_64__) || defined(_M_X64)
void left_sweep_avx2(const std::int32_t* mul, const std::int32_t* inv, int n,
                     int x, int depth, std::int32_t* out);
void right_sweep_avx2(const std::int32_t* mul, const std::int32_t* inv, int n,
                      int x, int depth, std::int32_t* out);
#endif

bool avx2_available();

// Dispatched entry points (resolved once, thread-safe).
SweepFn left_sweep();
SweepFn right_sweep();
const char* active_impl();  // "avx2" or "scalar"

}  // namespace engelkit::kernels
