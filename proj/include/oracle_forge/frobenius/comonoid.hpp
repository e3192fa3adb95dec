#ifndef ORACLE_FORGE_FROBENIUS_COMONOID_HPP
#define ORACLE_FORGE_FROBENIUS_COMONOID_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "oracle_forge/groups/finite_group.hpp"
#include "oracle_forge/numeric/cmatrix.hpp"

namespace oracle_forge::frobenius {

using numeric::CMatrix;

enum class StructureKind { kClassical, kGroupAlgebra, kCustom };

std::string to_string(StructureKind kind);

/**
 * A comonoid (A, comult, counit) in Hilb with comult: A -> A (x) A an
 * n^2 x n matrix and counit: A -> I a 1 x n matrix. The monoid half is
 * obtained by dagger: mult = comult^dag, unit = counit^dag.
 */
class DaggerComonoid {
 public:
  /// Validates coassociativity and counitality within `tol`.
  static DaggerComonoid create(CMatrix comult, CMatrix counit,
                               StructureKind kind = StructureKind::kCustom,
                               double norm_scale = 1.0, double tol = numeric::kDefaultTol);
  /// Shape checks only; for feeding deliberately broken data to law_report.
  static DaggerComonoid unvalidated(CMatrix comult, CMatrix counit);

  std::size_t dim() const { return dim_; }
  const CMatrix& comult() const { return comult_; }
  const CMatrix& counit() const { return counit_; }
  CMatrix mult() const { return numeric::dagger(comult_); }
  CMatrix unit() const { return numeric::dagger(counit_); }
  StructureKind kind() const { return kind_; }
  /// Scale carried by the multiplication relative to the bare basis map.
  double norm_scale() const { return norm_scale_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// The same structure transported along a unitary u: comult' = (u (x) u) comult u^dag.
  DaggerComonoid conjugated(const CMatrix& u) const;

 private:
  DaggerComonoid(CMatrix comult, CMatrix counit, StructureKind kind, double norm_scale);
  friend DaggerComonoid classical_structure(std::size_t, std::vector<std::string>);

  std::size_t dim_;
  CMatrix comult_;
  CMatrix counit_;
  StructureKind kind_;
  double norm_scale_;
  std::vector<std::string> labels_;
};

/// Copy/delete for the standard basis: comult e_i = e_i (x) e_i, counit e_i = 1.
DaggerComonoid classical_structure(std::size_t n, std::vector<std::string> labels = {});

/// C[G] with mult |g,h> = |gh> / sqrt|G| and unit sqrt|G| |e>, so that the
/// structure is special; comult and counit are the daggers.
DaggerComonoid group_algebra_structure(const groups::FiniteGroup& g);

}  // namespace oracle_forge::frobenius

#endif  // ORACLE_FORGE_FROBENIUS_COMONOID_HPP
