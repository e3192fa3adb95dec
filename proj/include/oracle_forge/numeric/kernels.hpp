#ifndef ORACLE_FORGE_NUMERIC_KERNELS_HPP
#define ORACLE_FORGE_NUMERIC_KERNELS_HPP

// Dense kernels behind CMatrix arithmetic. Each has a serial reference and
// an OpenMP version; the two must agree bit-for-bit on every input since
// each output entry is accumulated in the same order by one thread.

#include <span>
#include <vector>

#include "oracle_forge/numeric/cmatrix.hpp"

namespace oracle_forge::numeric::kernels {

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b);
CMatrix matmul_parallel(const CMatrix& a, const CMatrix& b);

CMatrix kron_serial(const CMatrix& a, const CMatrix& b);
CMatrix kron_parallel(const CMatrix& a, const CMatrix& b);

std::vector<Complex> apply_serial(const CMatrix& m, std::span<const Complex> v);
std::vector<Complex> apply_parallel(const CMatrix& m, std::span<const Complex> v);

/// Work (output entries times inner dimension) above which the parallel
/// kernels are selected by the CMatrix operators.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 15;

}  // namespace oracle_forge::numeric::kernels

#endif  // ORACLE_FORGE_NUMERIC_KERNELS_HPP
