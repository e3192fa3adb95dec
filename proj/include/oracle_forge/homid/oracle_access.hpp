#ifndef ORACLE_FORGE_HOMID_ORACLE_ACCESS_HPP
#define ORACLE_FORGE_HOMID_ORACLE_ACCESS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "oracle_forge/numeric/cmatrix.hpp"

namespace oracle_forge::homid {

using numeric::CMatrix;
using numeric::Complex;

struct QueryLedger {
  std::size_t count = 0;
};

/// State of the form sum_k exp(2 pi i e_k / modulus) |k>, up to normalisation.
struct PhaseState {
  std::size_t modulus = 1;
  std::vector<std::size_t> exponents;
};

/**
 * Black-box access to a unitary on C^left (x) C^right. The matrix is not
 * observable; every application bumps the ledger by one.
 */
class OracleAccess {
 public:
  /// Throws std::invalid_argument if the unitary's size is not left * right.
  OracleAccess(CMatrix unitary, std::size_t left_dim, std::size_t right_dim,
               double tol = numeric::kDefaultTol);

  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  const QueryLedger& ledger() const { return ledger_; }
  bool is_permutation() const { return permutation_.has_value(); }

  std::vector<Complex> apply(std::span<const Complex> state);
  /// Exact application; requires the unitary to be a permutation matrix.
  PhaseState apply(const PhaseState& state);

 private:
  CMatrix unitary_;
  std::size_t left_;
  std::size_t right_;
  std::optional<std::vector<std::size_t>> permutation_;  // column -> row
  QueryLedger ledger_;
};

}  // namespace oracle_forge::homid

#endif  // ORACLE_FORGE_HOMID_ORACLE_ACCESS_HPP
