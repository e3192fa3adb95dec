#ifndef ORACLE_FORGE_LINREL_LAWS_HPP
#define ORACLE_FORGE_LINREL_LAWS_HPP

#include <string>
#include <vector>

#include "oracle_forge/linrel/linrel.hpp"

namespace oracle_forge::linrel {

struct NamedCheck {
  std::string name;
  bool holds;
};

struct LinRelLawReport {
  Residue prime;
  std::vector<NamedCheck> checks;
  bool all_hold() const;
};

inline constexpr Residue kLawSuiteMaxPrime = 13;

/// Every law of the additive and copying structures on k = GF(p), each an
/// exact equality of canonical relations. Requires a prime p <= 13.
LinRelLawReport law_report_linrel(Residue p);

/// Frobenius equations for comult and its converse as multiplication.
bool check_dagger_frobenius(const LinRel& comult);
/// Counit laws for comult against counit.
bool check_counital(const LinRel& comult, const LinRel& counit);

/// {(x, -x)}: the cup of the additive structure, zero then co-addition.
LinRel additive_cup(Residue p);
LinRel additive_cap(Residue p);
/// {(x, x)}: the cup of the copying structure.
LinRel copy_cup(Residue p);
LinRel copy_cap(Residue p);

/// Transpose of f : V ~> W through the given cap on W and cup on V.
LinRel relation_transpose(const LinRel& f, const LinRel& cap_cod, const LinRel& cup_dom);

/// The transpose (under additive cups, or copy cups) equals the converse.
bool check_self_conjugate_rel(const LinRel& f, bool additive = true);

/// Scalar eps . m . swap . comult . unit; always a {0} ~> {0} relation.
LinRel dimension_scalar_rel(const LinRel& comult, const LinRel& counit);

/// (a, b) ~> (a + b, b): co-copy into addition. Its converse is its inverse.
LinRel complementarity_composite_rel(Residue p);

}  // namespace oracle_forge::linrel

#endif  // ORACLE_FORGE_LINREL_LAWS_HPP
