#include "oracle_forge/linrel/laws.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle_forge::linrel {

namespace {

LinRel gen(GeneratorKind kind, Residue p, Residue param = 0) { return generator({kind, param}, p); }

}  // namespace

bool LinRelLawReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.holds; });
}

bool check_dagger_frobenius(const LinRel& comult) {
  if (comult.dom() != 1 || comult.cod() != 2) throw std::invalid_argument("comultiplication must be k ~> k+k");
  const LinRel mult = dagger(comult);
  const LinRel id = identity(comult.prime(), 1);
  const LinRel middle = compose(mult, comult);
  const LinRel left = compose(oplus(comult, id), oplus(id, mult));
  const LinRel right = compose(oplus(id, comult), oplus(mult, id));
  return left == middle && right == middle;
}

bool check_counital(const LinRel& comult, const LinRel& counit) {
  const LinRel id = identity(comult.prime(), 1);
  return compose(comult, oplus(counit, id)) == id && compose(comult, oplus(id, counit)) == id;
}

LinRel additive_cup(Residue p) { return compose(gen(GeneratorKind::kZero, p), dagger(gen(GeneratorKind::kAdd, p))); }
LinRel additive_cap(Residue p) { return dagger(additive_cup(p)); }
LinRel copy_cup(Residue p) { return compose(dagger(gen(GeneratorKind::kDelete, p)), gen(GeneratorKind::kCopy, p)); }
LinRel copy_cap(Residue p) { return dagger(copy_cup(p)); }

LinRel relation_transpose(const LinRel& f, const LinRel& cap_cod, const LinRel& cup_dom) {
  const Residue p = f.prime();
  const LinRel id_cod = identity(p, f.cod());
  const LinRel id_dom = identity(p, f.dom());
  return compose({oplus(id_cod, cup_dom), oplus({id_cod, f, id_dom}), oplus(cap_cod, id_dom)});
}

bool check_self_conjugate_rel(const LinRel& f, bool additive) {
  if (f.dom() != 1 || f.cod() != 1) throw std::invalid_argument("self-conjugacy check expects k ~> k");
  const Residue p = f.prime();
  const LinRel cup = additive ? additive_cup(p) : copy_cup(p);
  const LinRel cap = additive ? additive_cap(p) : copy_cap(p);
  return relation_transpose(f, cap, cup) == dagger(f);
}

LinRel dimension_scalar_rel(const LinRel& comult, const LinRel& counit) {
  const Residue p = comult.prime();
  return compose({dagger(counit), comult, swap(p, 1, 1), dagger(comult), counit});
}

LinRel complementarity_composite_rel(Residue p) {
  const LinRel id = identity(p, 1);
  return compose(oplus(id, gen(GeneratorKind::kCopy, p)), oplus(gen(GeneratorKind::kAdd, p), id));
}

LinRelLawReport law_report_linrel(Residue p) {
  if (!numeric::is_prime(p) || p > kLawSuiteMaxPrime) {
    throw std::invalid_argument("law suite requires a prime p <= 13");
  }
  const LinRel id = identity(p, 1);
  const LinRel id0 = identity(p, 0);
  const LinRel sw = swap(p, 1, 1);
  const LinRel add = gen(GeneratorKind::kAdd, p);
  const LinRel zero = gen(GeneratorKind::kZero, p);
  const LinRel copy = gen(GeneratorKind::kCopy, p);
  const LinRel del = gen(GeneratorKind::kDelete, p);
  const LinRel coadd = dagger(add);
  const LinRel cozero = dagger(zero);

  LinRelLawReport report{p, {}};
  auto record = [&](std::string name, bool holds) { report.checks.push_back({std::move(name), holds}); };

  record("add.associative", compose(oplus(add, id), add) == compose(oplus(id, add), add));
  record("add.unit_left", compose(oplus(zero, id), add) == id);
  record("add.unit_right", compose(oplus(id, zero), add) == id);
  record("add.commutative", compose(sw, add) == add);
  record("copy.coassociative", compose(copy, oplus(copy, id)) == compose(copy, oplus(id, copy)));
  record("copy.counit", check_counital(copy, del));
  record("copy.cocommutative", compose(copy, sw) == copy);

  record("add.frobenius", check_dagger_frobenius(coadd));
  {
    // (a, b) ~> (a + c, b - c) for all c
    const Residue minus_one = p - 1;
    const LinRel expected =
        LinRel::from_basis(p, 2, 2, {{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, minus_one}});
    record("add.frobenius_explicit", compose(add, coadd) == expected);
  }
  record("add.counit", check_counital(coadd, cozero));
  record("copy.frobenius", check_dagger_frobenius(copy));
  record("add.special", compose(coadd, add) == id);
  record("copy.special", compose(copy, dagger(copy)) == id);

  record("bialgebra.copy_add",
         compose(add, copy) == compose({oplus(copy, copy), oplus({id, sw, id}), oplus(add, add)}));
  record("bialgebra.copy_zero", compose(zero, copy) == oplus(zero, zero));
  record("bialgebra.delete_add", compose(add, del) == oplus(del, del));
  record("bialgebra.delete_zero", compose(zero, del) == id0);

  const LinRel k = complementarity_composite_rel(p);
  record("complementary.composite_unitary", is_unitary_rel(k));
  record("complementary.mirror_composite_unitary",
         is_unitary_rel(compose(oplus(copy, id), oplus(id, add))));
  record("scalar.add_trivial", dimension_scalar_rel(coadd, cozero) == id0);
  record("scalar.copy_trivial", dimension_scalar_rel(copy, del) == id0);

  bool self_conj_add = true, self_conj_copy = true, monoid_hom = true, comonoid_hom = true;
  for (Residue r = 0; r < p; ++r) {
    const LinRel m = gen(GeneratorKind::kMult, p, r);
    self_conj_add = self_conj_add && check_self_conjugate_rel(m, true);
    self_conj_copy = self_conj_copy && check_self_conjugate_rel(m, false);
    monoid_hom = monoid_hom && compose(add, m) == compose(oplus(m, m), add) && compose(zero, m) == zero;
    comonoid_hom = comonoid_hom && compose(m, copy) == compose(copy, oplus(m, m)) &&
                   compose(m, del) == del;
  }
  record("multiplier.self_conjugate", self_conj_add);
  record("multiplier.self_conjugate_copy_cups", self_conj_copy);
  record("multiplier.monoid_hom", monoid_hom);
  record("multiplier.comonoid_hom", comonoid_hom);
  return report;
}

}  // namespace oracle_forge::linrel
