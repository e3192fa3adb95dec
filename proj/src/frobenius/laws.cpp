#include "oracle_forge/frobenius/laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle_forge::frobenius {

using numeric::dagger;
using numeric::max_abs_diff;
using numeric::swap_matrix;
using numeric::tensor;

namespace {

LawCheck check(double residual, double tol) { return {residual < tol, residual}; }

void require_same_dim(const DaggerComonoid& a, const DaggerComonoid& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("structures live on spaces of different dimension");
  }
}

// (1 (x) cap_b)(cup_a (x) 1) : A -> A.
CMatrix bend(const DaggerComonoid& cup_side, const DaggerComonoid& cap_side) {
  const CMatrix id = CMatrix::identity(cup_side.dim());
  return tensor(id, cap(cap_side)) * tensor(cup(cup_side), id);
}

CMatrix primary_form(const DaggerComonoid& white, const DaggerComonoid& gray) {
  const CMatrix id = CMatrix::identity(white.dim());
  return dimension_scalar(white) * (white.mult() * tensor(bend(white, gray), id) * gray.comult());
}

CMatrix flipped_form(const DaggerComonoid& white, const DaggerComonoid& gray) {
  const CMatrix id = CMatrix::identity(white.dim());
  return dimension_scalar(white) *
         dagger(gray.mult() * tensor(bend(gray, white), id) * white.comult());
}

}  // namespace

bool LawReport::special_symmetric_frobenius() const {
  return coassociative.holds && counital.holds && frobenius.holds && special.holds &&
         symmetric.holds;
}

CMatrix cup(const DaggerComonoid& c) { return c.comult() * c.unit(); }

CMatrix cap(const DaggerComonoid& c) { return c.counit() * c.mult(); }

LawReport law_report(const DaggerComonoid& c, double tol) {
  const std::size_t n = c.dim();
  const CMatrix id = CMatrix::identity(n);
  const CMatrix& d = c.comult();
  const CMatrix m = c.mult();
  const CMatrix sigma = swap_matrix(n, n);

  LawReport r;
  r.coassociative = check(max_abs_diff(tensor(d, id) * d, tensor(id, d) * d), tol);
  r.counital = check(std::max(max_abs_diff(tensor(c.counit(), id) * d, id),
                              max_abs_diff(tensor(id, c.counit()) * d, id)),
                     tol);
  r.frobenius = check(max_abs_diff(tensor(id, m) * tensor(d, id), tensor(m, id) * tensor(id, d)),
                      tol);
  r.special = check(max_abs_diff(m * d, id), tol);
  r.symmetric = check(max_abs_diff(sigma * cup(c), cup(c)), tol);
  r.commutative = check(max_abs_diff(sigma * d, d), tol);
  return r;
}

Complex dimension_scalar(const DaggerComonoid& c) {
  const std::size_t n = c.dim();
  return (c.counit() * c.mult() * swap_matrix(n, n) * c.comult() * c.unit())(0, 0);
}

double sqrt_dimension(const DaggerComonoid& c, double tol) {
  const Complex d = dimension_scalar(c);
  if (std::abs(d.imag()) >= tol || !(d.real() > 0.0)) {
    throw std::domain_error("dimension scalar is not a positive real");
  }
  return std::sqrt(d.real());
}

CMatrix complementarity_composite(const DaggerComonoid& white, const DaggerComonoid& gray) {
  require_same_dim(white, gray);
  const CMatrix id = CMatrix::identity(white.dim());
  return Complex(sqrt_dimension(white)) * (tensor(id, white.mult()) * tensor(gray.comult(), id));
}

std::array<double, 4> complementarity_residuals(const DaggerComonoid& white,
                                                const DaggerComonoid& gray) {
  require_same_dim(white, gray);
  const CMatrix target = white.unit() * gray.counit();
  const CMatrix p = primary_form(white, gray);
  const CMatrix f = flipped_form(white, gray);
  return {max_abs_diff(p, target), max_abs_diff(f, target),
          max_abs_diff(dagger(p), dagger(target)), max_abs_diff(dagger(f), dagger(target))};
}

bool check_complementarity(const DaggerComonoid& white, const DaggerComonoid& gray, double tol) {
  require_same_dim(white, gray);
  return max_abs_diff(primary_form(white, gray), white.unit() * gray.counit()) < tol;
}

}  // namespace oracle_forge::frobenius
