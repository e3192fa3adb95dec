#include "oracle_forge/frobenius/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "oracle_forge/frobenius/laws.hpp"

namespace oracle_forge::frobenius {

using numeric::Complex;
using numeric::dagger;
using numeric::max_abs_diff;
using numeric::tensor;

CMatrix function_matrix(std::span<const Element> images, std::size_t codomain_dim) {
  CMatrix m(codomain_dim, images.size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x] >= codomain_dim) {
      throw std::out_of_range("function image " + std::to_string(images[x]) +
                              " out of range for dimension " + std::to_string(codomain_dim));
    }
    m(images[x], x) = 1.0;
  }
  return m;
}

CMatrix comonoid_hom_matrix(std::span<const Element> images, const DaggerComonoid& dom,
                            const DaggerComonoid& cod) {
  if (dom.kind() != StructureKind::kClassical || cod.kind() != StructureKind::kClassical) {
    throw std::invalid_argument("comonoid_hom_matrix needs classical structures");
  }
  if (images.size() != dom.dim()) {
    throw std::invalid_argument("function needs one image per domain basis vector");
  }
  return function_matrix(images, cod.dim());
}

CMatrix comonoid_hom_matrix(const groups::GroupHom& f, const DaggerComonoid& dom,
                            const DaggerComonoid& cod) {
  return comonoid_hom_matrix(f.images(), dom, cod);
}

bool check_comonoid_hom(const CMatrix& f, const DaggerComonoid& dom, const DaggerComonoid& cod,
                        double tol) {
  if (f.cols() != dom.dim() || f.rows() != cod.dim()) {
    throw std::invalid_argument("check_comonoid_hom: matrix shape does not match structures");
  }
  const double comult = max_abs_diff(cod.comult() * f, tensor(f, f) * dom.comult());
  const double counit = max_abs_diff(cod.counit() * f, dom.counit());
  return comult < tol && counit < tol;
}

CMatrix frobenius_transpose(const CMatrix& f, const DaggerComonoid& dom,
                            const DaggerComonoid& cod) {
  if (f.cols() != dom.dim() || f.rows() != cod.dim()) {
    throw std::invalid_argument("frobenius_transpose: matrix shape does not match structures");
  }
  // (cap_cod (x) I)(I (x) f (x) I)(I (x) cup_dom) contracted index-wise:
  // T(d', c) = sum over d, c' of U(d, d') f(c', d) K(c, c'), so T = U^T f^T K^T.
  const std::size_t m = dom.dim();
  const std::size_t n = cod.dim();
  const CMatrix cup_dom = cup(dom);
  const CMatrix cap_cod = cap(cod);
  CMatrix u(m, m);
  for (std::size_t d = 0; d < m; ++d)
    for (std::size_t e = 0; e < m; ++e) u(e, d) = cup_dom(d * m + e, 0);
  CMatrix k(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t e = 0; e < n; ++e) k(e, c) = cap_cod(0, c * n + e);
  return u * transpose(f) * k;
}

bool check_self_conjugate(const CMatrix& f, const DaggerComonoid& dom, const DaggerComonoid& cod,
                          double tol) {
  return max_abs_diff(frobenius_transpose(f, dom, cod), dagger(f)) < tol;
}

CMatrix build_oracle_diagram(const CMatrix& f, const DaggerComonoid& black,
                             const DaggerComonoid& gray, const DaggerComonoid& white,
                             double tol) {
  if (f.cols() != black.dim() || f.rows() != gray.dim() || gray.dim() != white.dim()) {
    throw std::invalid_argument("oracle: structure dimensions do not match f");
  }
  if (!check_complementarity(white, gray, tol)) {
    throw std::invalid_argument("oracle: gray and white structures are not complementary");
  }
  if (!check_comonoid_hom(f, black, gray, tol)) {
    throw std::invalid_argument("oracle: f is not a comonoid homomorphism black -> gray");
  }
  if (!check_self_conjugate(f, black, gray, tol)) {
    throw std::invalid_argument("oracle: f is not self-conjugate");
  }
  const CMatrix id_a = CMatrix::identity(black.dim());
  const CMatrix id_b = CMatrix::identity(white.dim());
  const CMatrix body = tensor(id_a, white.mult()) * tensor({id_a, f, id_b}) *
                       tensor(black.comult(), id_b);
  return Complex(sqrt_dimension(white, tol)) * body;
}

CMatrix build_oracle_diagram(std::span<const Element> images, const groups::FiniteGroup& target,
                             double tol) {
  const DaggerComonoid black = classical_structure(images.size());
  const DaggerComonoid gray = classical_structure(target.order());
  const DaggerComonoid white = group_algebra_structure(target);
  return build_oracle_diagram(comonoid_hom_matrix(images, black, gray), black, gray, white, tol);
}

CMatrix build_oracle_operational(std::span<const Element> images,
                                 const groups::FiniteGroup& target) {
  const std::size_t n = images.size();
  const std::size_t m = target.order();
  CMatrix u(n * m, n * m);
  for (std::size_t x = 0; x < n; ++x) {
    if (images[x] >= m) throw std::out_of_range("oracle: image outside the target group");
    for (std::size_t y = 0; y < m; ++y) u(x * m + target.mul(y, images[x]), x * m + y) = 1.0;
  }
  return u;
}

CMatrix build_oracle_operational(const groups::GroupHom& f) {
  return build_oracle_operational(f.images(), f.codomain());
}

std::optional<double> positive_scale_between(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  // Scale from the largest entry of b, then verify every entry.
  std::size_t best = 0;
  for (std::size_t i = 0; i < b.entries().size(); ++i) {
    if (std::abs(b.entries()[i]) > std::abs(b.entries()[best])) best = i;
  }
  if (b.entries().empty() || std::abs(b.entries()[best]) < tol) return std::nullopt;
  const Complex ratio = a.entries()[best] / b.entries()[best];
  if (std::abs(ratio.imag()) >= tol || !(ratio.real() > 0.0)) return std::nullopt;
  if (max_abs_diff(a, Complex(ratio.real()) * b) >= tol) return std::nullopt;
  return ratio.real();
}

}  // namespace oracle_forge::frobenius
