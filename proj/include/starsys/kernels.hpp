#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP variant; both compute every output entry with the same sequential
// accumulation order, so their results are bit-identical.

#include <starsys/cmat.hpp>

namespace starsys::kernels {

CMat matmul_serial(const CMat& a, const CMat& b);
CMat matmul_parallel(const CMat& a, const CMat& b);

/// Kronecker product a (x) b.
CMat kron_serial(const CMat& a, const CMat& b);
CMat kron_parallel(const CMat& a, const CMat& b);

/// Work (m*n*k multiply-adds) above which operator* switches to the parallel kernel.
inline constexpr std::size_t kParallelMatmulWork = 1u << 15;

int max_threads();

}  // namespace starsys::kernels
