#ifndef ORACLE_FORGE_NUMERIC_CMATRIX_HPP
#define ORACLE_FORGE_NUMERIC_CMATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace oracle_forge::numeric {

using Complex = std::complex<double>;

/// Default tolerance for unitarity and matrix equality checks.
inline constexpr double kDefaultTol = 1e-9;

/**
 * Dense complex matrix, row-major.
 *
 * Morphisms of Hilb between C^a and C^b are b x a matrices; states are
 * column vectors. Tensor-product basis vectors |x,y> of C^m (x) C^n sit at
 * index x*n + y.
 */
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix scalar(Complex value);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// Column vector e_index of length n.
  static CMatrix basis_column(std::size_t n, std::size_t index);
  static CMatrix column(std::span<const Complex> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);

/// Kronecker product; entry (i*b.rows+k, j*b.cols+l) = a(i,j) b(k,l).
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CMatrix tensor(std::initializer_list<CMatrix> factors);
/// Conjugate transpose.
CMatrix dagger(const CMatrix& a);
CMatrix transpose(const CMatrix& a);

/// The symmetry C^m (x) C^n -> C^n (x) C^m.
CMatrix swap_matrix(std::size_t m, std::size_t n);

/// Largest entry modulus.
double max_norm(const CMatrix& a);
/// max_norm(a - b); shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);

/// Largest of max_norm(a^dag a - I) and max_norm(a a^dag - I).
/// Throws std::invalid_argument("not an endomorphism") for non-square input.
double unitarity_residual(const CMatrix& a);
bool is_unitary(const CMatrix& a, double tol = kDefaultTol);

/// Largest singular value of a state vector of C^left (x) C^right
/// reshaped into a left x right matrix.
double max_schmidt_coefficient(const CMatrix& state, std::size_t left, std::size_t right);

}  // namespace oracle_forge::numeric

#endif  // ORACLE_FORGE_NUMERIC_CMATRIX_HPP
