#include "oracle_forge/frobenius/comonoid.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle_forge::frobenius {

using numeric::Complex;
using numeric::dagger;
using numeric::max_abs_diff;
using numeric::tensor;

std::string to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::kClassical:
      return "classical";
    case StructureKind::kGroupAlgebra:
      return "group-algebra";
    case StructureKind::kCustom:
      return "custom";
  }
  return "custom";
}

DaggerComonoid::DaggerComonoid(CMatrix comult, CMatrix counit, StructureKind kind,
                               double norm_scale)
    : dim_(comult.cols()),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      kind_(kind),
      norm_scale_(norm_scale) {
  if (dim_ == 0) throw std::invalid_argument("comonoid on a zero-dimensional space");
  if (comult_.rows() != dim_ * dim_) {
    throw std::invalid_argument("comultiplication must be n^2 x n");
  }
  if (counit_.rows() != 1 || counit_.cols() != dim_) {
    throw std::invalid_argument("counit must be 1 x n");
  }
}

DaggerComonoid DaggerComonoid::create(CMatrix comult, CMatrix counit, StructureKind kind,
                                      double norm_scale, double tol) {
  if (!(norm_scale > 0.0)) throw std::invalid_argument("norm_scale must be positive");
  DaggerComonoid c(std::move(comult), std::move(counit), kind, norm_scale);
  const CMatrix id = CMatrix::identity(c.dim_);
  const CMatrix& d = c.comult_;
  const double coassoc = max_abs_diff(tensor(d, id) * d, tensor(id, d) * d);
  if (!(coassoc < tol)) {
    throw std::invalid_argument("comultiplication is not coassociative (residual " +
                                std::to_string(coassoc) + ")");
  }
  const double left = max_abs_diff(tensor(c.counit_, id) * d, id);
  const double right = max_abs_diff(tensor(id, c.counit_) * d, id);
  if (!(std::max(left, right) < tol)) {
    throw std::invalid_argument("counit law fails (residual " +
                                std::to_string(std::max(left, right)) + ")");
  }
  return c;
}

DaggerComonoid DaggerComonoid::unvalidated(CMatrix comult, CMatrix counit) {
  return DaggerComonoid(std::move(comult), std::move(counit), StructureKind::kCustom, 1.0);
}

DaggerComonoid DaggerComonoid::conjugated(const CMatrix& u) const {
  if (!u.is_square() || u.rows() != dim_) {
    throw std::invalid_argument("conjugating unitary has the wrong dimension");
  }
  DaggerComonoid out(tensor(u, u) * comult_ * dagger(u), counit_ * dagger(u),
                     StructureKind::kCustom, norm_scale_);
  return out;
}

DaggerComonoid classical_structure(std::size_t n, std::vector<std::string> labels) {
  if (n == 0) throw std::invalid_argument("classical structure needs n >= 1");
  if (!labels.empty() && labels.size() != n) {
    throw std::invalid_argument("classical structure: label count does not match n");
  }
  CMatrix comult(n * n, n);
  CMatrix counit(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    comult(i * n + i, i) = 1.0;
    counit(0, i) = 1.0;
  }
  DaggerComonoid c(std::move(comult), std::move(counit), StructureKind::kClassical, 1.0);
  c.labels_ = std::move(labels);
  return c;
}

DaggerComonoid group_algebra_structure(const groups::FiniteGroup& g) {
  const std::size_t n = g.order();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix mult(n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult(g.mul(a, b), a * n + b) = scale;
  }
  CMatrix unit(n, 1);
  unit(0, 0) = std::sqrt(static_cast<double>(n));
  return DaggerComonoid::create(dagger(mult), dagger(unit), StructureKind::kGroupAlgebra, scale);
}

}  // namespace oracle_forge::frobenius
