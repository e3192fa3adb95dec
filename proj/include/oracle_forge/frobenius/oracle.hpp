#ifndef ORACLE_FORGE_FROBENIUS_ORACLE_HPP
#define ORACLE_FORGE_FROBENIUS_ORACLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "oracle_forge/frobenius/comonoid.hpp"
#include "oracle_forge/groups/homomorphism.hpp"

namespace oracle_forge::frobenius {

using groups::Element;

/// Matrix of a function between bases: column x is e_{f(x)}.
CMatrix function_matrix(std::span<const Element> images, std::size_t codomain_dim);

/// function_matrix between two classical structures; throws unless both
/// structures are classical and every image is in range.
CMatrix comonoid_hom_matrix(std::span<const Element> images, const DaggerComonoid& dom,
                            const DaggerComonoid& cod);
CMatrix comonoid_hom_matrix(const groups::GroupHom& f, const DaggerComonoid& dom,
                            const DaggerComonoid& cod);

/// cod-comult f = (f (x) f) dom-comult and cod-counit f = dom-counit.
bool check_comonoid_hom(const CMatrix& f, const DaggerComonoid& dom, const DaggerComonoid& cod,
                        double tol = numeric::kDefaultTol);

/// (cap_cod (x) 1)(1 (x) f (x) 1)(1 (x) cup_dom) : cod -> dom, the transpose of
/// f taken through the Frobenius cups and caps.
CMatrix frobenius_transpose(const CMatrix& f, const DaggerComonoid& dom,
                            const DaggerComonoid& cod);
/// frobenius_transpose(f) == f^dag.
bool check_self_conjugate(const CMatrix& f, const DaggerComonoid& dom, const DaggerComonoid& cod,
                          double tol = numeric::kDefaultTol);

/**
 * The oracle on A (x) B built from black copying on A, the comonoid
 * homomorphism f : black -> gray, and white multiplication on B:
 *
 *   sqrt(d_white) (1 (x) white-mult)(1 (x) f (x) 1)(black-comult (x) 1)
 *
 * f's output enters the left leg of the multiplication, so on basis states
 * |x, y> goes to |x, f(x) y>. Throws if the structures have the wrong
 * dimensions, gray and white are not complementary, or f is not a
 * self-conjugate comonoid homomorphism.
 */
CMatrix build_oracle_diagram(const CMatrix& f, const DaggerComonoid& black,
                             const DaggerComonoid& gray, const DaggerComonoid& white,
                             double tol = numeric::kDefaultTol);

/// Diagram oracle for a function G -> A with the standard choices: classical
/// structures on C^|G| and C^|A|, and the group algebra of `target`.
CMatrix build_oracle_diagram(std::span<const Element> images, const groups::FiniteGroup& target,
                             double tol = numeric::kDefaultTol);

/// Permutation matrix |x, y> -> |x, y f(x)> on C^n (x) C^|A|, n = images.size().
CMatrix build_oracle_operational(std::span<const Element> images,
                                 const groups::FiniteGroup& target);
CMatrix build_oracle_operational(const groups::GroupHom& f);

/// The positive real s with a = s * b entrywise (within tol), if one exists.
std::optional<double> positive_scale_between(const CMatrix& a, const CMatrix& b,
                                             double tol = numeric::kDefaultTol);

}  // namespace oracle_forge::frobenius

#endif  // ORACLE_FORGE_FROBENIUS_ORACLE_HPP
