#ifndef ORACLE_FORGE_FROBENIUS_LAWS_HPP
#define ORACLE_FORGE_FROBENIUS_LAWS_HPP

#include <array>

#include "oracle_forge/frobenius/comonoid.hpp"

namespace oracle_forge::frobenius {

using numeric::Complex;

struct LawCheck {
  bool holds = false;
  double residual = 0.0;
};

/// Each law is evaluated as two explicit matrix composites; residual is the
/// max-entry norm of their difference and holds == (residual < tol).
struct LawReport {
  LawCheck coassociative;  // (comult (x) 1) comult = (1 (x) comult) comult
  LawCheck counital;       // (counit (x) 1) comult = 1 = (1 (x) counit) comult
  LawCheck frobenius;      // (1 (x) mult)(comult (x) 1) = (mult (x) 1)(1 (x) comult)
  LawCheck special;        // mult comult = 1
  LawCheck symmetric;      // swap comult unit = comult unit
  LawCheck commutative;    // swap comult = comult

  /// Coassociative, counital, Frobenius, special and symmetric.
  bool special_symmetric_frobenius() const;
};

LawReport law_report(const DaggerComonoid& c, double tol = numeric::kDefaultTol);

/// comult unit : I -> A (x) A.
CMatrix cup(const DaggerComonoid& c);
/// counit mult : A (x) A -> I.
CMatrix cap(const DaggerComonoid& c);

/// counit . mult . swap . comult . unit, a 1 x 1 matrix.
Complex dimension_scalar(const DaggerComonoid& c);
/// Positive square root of a positive real dimension; throws
/// std::domain_error when the dimension is not a positive real.
double sqrt_dimension(const DaggerComonoid& c, double tol = numeric::kDefaultTol);

/// sqrt(d) (1 (x) white-mult)(gray-comult (x) 1), an endomorphism of A (x) A.
CMatrix complementarity_composite(const DaggerComonoid& white, const DaggerComonoid& gray);

/// Residuals of the four equivalent forms of the complementarity law:
/// the primary form, its colour-swapped flip, and the daggers of both.
std::array<double, 4> complementarity_residuals(const DaggerComonoid& white,
                                                const DaggerComonoid& gray);

/// d (white-mult)(S (x) 1)(gray-comult) == (white-unit)(gray-counit), where S
/// bends the left wire with the white cup and the gray cap.
bool check_complementarity(const DaggerComonoid& white, const DaggerComonoid& gray,
                           double tol = numeric::kDefaultTol);

}  // namespace oracle_forge::frobenius

#endif  // ORACLE_FORGE_FROBENIUS_LAWS_HPP
