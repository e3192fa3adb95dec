#include "oracle_forge/numeric/kernels.hpp"

#include <cstddef>
#include <stdexcept>

namespace oracle_forge::numeric::kernels {

namespace {

void check_matmul_shapes(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions differ");
  }
}

// Row i of a*b, accumulated k-major. Structural zeros of a are skipped; most
// composites here are built from near-permutation matrices.
inline void matmul_row(const CMatrix& a, const CMatrix& b, CMatrix& out, std::size_t i) {
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  auto orow = out.entries().subspan(i * cols, cols);
  for (std::size_t k = 0; k < inner; ++k) {
    const Complex aik = a(i, k);
    if (aik == Complex{}) continue;
    auto brow = b.entries().subspan(k * cols, cols);
    for (std::size_t j = 0; j < cols; ++j) orow[j] += aik * brow[j];
  }
}

inline void kron_row(const CMatrix& a, const CMatrix& b, CMatrix& out, std::size_t r) {
  const std::size_t i = r / b.rows();
  const std::size_t k = r % b.rows();
  const std::size_t cols = out.cols();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Complex aij = a(i, j);
    for (std::size_t l = 0; l < b.cols(); ++l) {
      out.entries()[r * cols + j * b.cols() + l] = aij * b(k, l);
    }
  }
}

inline Complex apply_row(const CMatrix& m, std::span<const Complex> v, std::size_t i) {
  Complex acc{};
  for (std::size_t k = 0; k < m.cols(); ++k) acc += m(i, k) * v[k];
  return acc;
}

}  // namespace

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b) {
  check_matmul_shapes(a, b);
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, out, i);
  return out;
}

CMatrix matmul_parallel(const CMatrix& a, const CMatrix& b) {
  check_matmul_shapes(a, b);
  CMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    matmul_row(a, b, out, static_cast<std::size_t>(i));
  }
  return out;
}

CMatrix kron_serial(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < out.rows(); ++r) kron_row(a, b, out, r);
  return out;
}

CMatrix kron_parallel(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(out.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    kron_row(a, b, out, static_cast<std::size_t>(r));
  }
  return out;
}

std::vector<Complex> apply_serial(const CMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply: vector length mismatch");
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = apply_row(m, v, i);
  return out;
}

std::vector<Complex> apply_parallel(const CMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply: vector length mismatch");
  std::vector<Complex> out(m.rows());
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    out[static_cast<std::size_t>(i)] = apply_row(m, v, static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace oracle_forge::numeric::kernels
