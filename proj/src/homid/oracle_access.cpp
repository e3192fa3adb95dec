#include "oracle_forge/homid/oracle_access.hpp"

#include <cmath>
#include <stdexcept>

#include "oracle_forge/numeric/kernels.hpp"

namespace oracle_forge::homid {

namespace {

std::optional<std::vector<std::size_t>> as_permutation(const CMatrix& u, double tol) {
  std::vector<std::size_t> perm(u.cols());
  std::vector<char> hit(u.rows(), 0);
  for (std::size_t c = 0; c < u.cols(); ++c) {
    std::size_t found = u.rows();
    for (std::size_t r = 0; r < u.rows(); ++r) {
      const Complex x = u(r, c);
      if (std::abs(x - Complex(1.0)) < tol) {
        if (found != u.rows()) return std::nullopt;
        found = r;
      } else if (std::abs(x) >= tol) {
        return std::nullopt;
      }
    }
    if (found == u.rows() || hit[found]++) return std::nullopt;
    perm[c] = found;
  }
  return perm;
}

}  // namespace

OracleAccess::OracleAccess(CMatrix unitary, std::size_t left_dim, std::size_t right_dim,
                           double tol)
    : unitary_(std::move(unitary)), left_(left_dim), right_(right_dim) {
  if (!unitary_.is_square() || unitary_.rows() != left_ * right_) {
    throw std::invalid_argument("oracle dimension mismatch: expected " +
                                std::to_string(left_ * right_) + " x " +
                                std::to_string(left_ * right_));
  }
  permutation_ = as_permutation(unitary_, tol);
}

std::vector<Complex> OracleAccess::apply(std::span<const Complex> state) {
  if (state.size() != unitary_.cols()) throw std::invalid_argument("oracle dimension mismatch");
  ++ledger_.count;
  return numeric::kernels::apply_parallel(unitary_, state);
}

PhaseState OracleAccess::apply(const PhaseState& state) {
  if (state.exponents.size() != unitary_.cols()) {
    throw std::invalid_argument("oracle dimension mismatch");
  }
  if (!permutation_) throw std::invalid_argument("exact mode requires a permutation oracle");
  ++ledger_.count;
  PhaseState out{state.modulus, std::vector<std::size_t>(state.exponents.size())};
  for (std::size_t k = 0; k < state.exponents.size(); ++k) {
    out.exponents[(*permutation_)[k]] = state.exponents[k];
  }
  return out;
}

}  // namespace oracle_forge::homid
