#include "oracle_forge/numeric/cmatrix.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oracle_forge/numeric/kernels.hpp"

namespace oracle_forge::numeric {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("CMatrix: entry count does not match shape");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::scalar(Complex value) { return CMatrix(1, 1, {value}); }

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("CMatrix::from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return CMatrix(r, c, std::move(entries));
}

CMatrix CMatrix::basis_column(std::size_t n, std::size_t index) {
  if (index >= n) throw std::out_of_range("CMatrix::basis_column: index out of range");
  CMatrix m(n, 1);
  m(index, 0) = 1.0;
  return m;
}

CMatrix CMatrix::column(std::span<const Complex> entries) {
  return CMatrix(entries.size(), 1, std::vector<Complex>(entries.begin(), entries.end()));
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.rows() * b.cols() * a.cols() >= kernels::kParallelThreshold) {
    return kernels::matmul_parallel(a, b);
  }
  return kernels::matmul_serial(a, b);
}

CMatrix operator*(Complex s, const CMatrix& a) {
  CMatrix out = a;
  for (auto& x : out.entries()) x *= s;
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("CMatrix +: shape mismatch");
  }
  CMatrix out = a;
  for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] += b.entries()[i];
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) { return a + Complex(-1.0) * b; }

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  if (a.rows() * a.cols() * b.rows() * b.cols() >= kernels::kParallelThreshold) {
    return kernels::kron_parallel(a, b);
  }
  return kernels::kron_serial(a, b);
}

CMatrix tensor(std::initializer_list<CMatrix> factors) {
  CMatrix acc = CMatrix::scalar(1.0);
  for (const auto& f : factors) acc = tensor(acc, f);
  return acc;
}

CMatrix dagger(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

CMatrix swap_matrix(std::size_t m, std::size_t n) {
  CMatrix out(m * n, m * n);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < n; ++y) out(y * m + x, x * n + y) = 1.0;
  }
  return out;
}

double max_norm(const CMatrix& a) {
  double best = 0.0;
  for (const auto& x : a.entries()) best = std::max(best, std::abs(x));
  return best;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return best;
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) < tol;
}

double unitarity_residual(const CMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("not an endomorphism");
  const CMatrix id = CMatrix::identity(a.rows());
  const CMatrix ad = dagger(a);
  return std::max(max_abs_diff(ad * a, id), max_abs_diff(a * ad, id));
}

bool is_unitary(const CMatrix& a, double tol) { return unitarity_residual(a) < tol; }

double max_schmidt_coefficient(const CMatrix& state, std::size_t left, std::size_t right) {
  if (state.cols() != 1 || state.rows() != left * right) {
    throw std::invalid_argument("max_schmidt_coefficient: state has wrong shape");
  }
  Eigen::MatrixXcd reshaped(left, right);
  for (std::size_t x = 0; x < left; ++x) {
    for (std::size_t y = 0; y < right; ++y) reshaped(x, y) = state(x * right + y, 0);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(reshaped);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

}  // namespace oracle_forge::numeric
