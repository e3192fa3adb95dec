#include <gtest/gtest.h>

#include <set>

#include "oracle_forge/groups/abelian_factors.hpp"
#include "oracle_forge/groups/character.hpp"
#include "oracle_forge/groups/enumeration.hpp"
#include "oracle_forge/groups/finite_group.hpp"
#include "oracle_forge/groups/homomorphism.hpp"
#include "oracle_forge/groups/table_io.hpp"
#include "oracles.hpp"

namespace {

using namespace oracle_forge::groups;
namespace ref = oracle_forge::testing;

FiniteGroup z2xz2() { return direct_product(cyclic(2), cyclic(2)); }

std::vector<FiniteGroup> small_groups() {
  return {cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(6), z2xz2(), symmetric(3), dihedral(4),
          direct_product(cyclic(2), cyclic(4)), dihedral(3), symmetric(4)};
}

bool brute_force_abelian(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

TEST(FiniteGroup, CyclicOne) {
  const auto g = cyclic(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.mul(0, 0), 0u);
  EXPECT_EQ(g.exponent(), 1u);
}

TEST(FiniteGroup, KleinElementsSelfInverse) {
  const auto g = z2xz2();
  EXPECT_EQ(g.order(), 4u);
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(g.mul(x, x), 0u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(FiniteGroup, SymmetricThreeNonAbelian) {
  const auto g = symmetric(3);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(brute_force_abelian(g));
  EXPECT_FALSE(g.is_abelian());
}

TEST(FiniteGroup, Axioms) {
  for (const auto& g : small_groups()) {
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.mul(0, x), x);
      EXPECT_EQ(g.mul(x, 0), x);
      EXPECT_EQ(g.mul(x, g.inverse(x)), 0u);
      EXPECT_EQ(g.power(x, g.element_order(x)), 0u);
      EXPECT_EQ(g.exponent() % g.element_order(x), 0u);
    }
    EXPECT_EQ(g.is_abelian(), brute_force_abelian(g));
  }
}

TEST(FiniteGroup, Orders) {
  EXPECT_EQ(symmetric(4).order(), 24u);
  EXPECT_EQ(symmetric(5).order(), 120u);
  EXPECT_EQ(dihedral(4).order(), 8u);
  EXPECT_EQ(dihedral(12).order(), 24u);
  EXPECT_EQ(cyclic(4).element_order(1), 4u);
  EXPECT_EQ(cyclic(4).element_order(2), 2u);
  EXPECT_EQ(cyclic(6).exponent(), 6u);
  EXPECT_EQ(z2xz2().exponent(), 2u);
}

TEST(FiniteGroup, DirectProductIndexing) {
  const auto g = cyclic(2), h = cyclic(3);
  const auto p = direct_product(g, h);
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 3; ++b)
      for (Element c = 0; c < 2; ++c)
        for (Element d = 0; d < 3; ++d)
          EXPECT_EQ(p.mul(a * 3 + b, c * 3 + d), g.mul(a, c) * 3 + h.mul(b, d));
}

TEST(FiniteGroup, ConstructorRanges) {
  EXPECT_THROW(cyclic(0), std::invalid_argument);
  EXPECT_THROW(symmetric(6), std::invalid_argument);
  EXPECT_THROW(symmetric(0), std::invalid_argument);
  EXPECT_THROW(dihedral(13), std::invalid_argument);
}

TEST(FromTable, RejectsNonLatin) {
  try {
    FiniteGroup::from_table({{0, 1}, {1, 1}});
    FAIL();
  } catch (const GroupAxiomError& e) {
    EXPECT_NE(std::string(e.what()).find("Latin"), std::string::npos) << e.what();
  }
}

TEST(FromTable, RejectsNonAssociativeNamingTriple) {
  // A Latin square with identity 0 in which every element squares to 0;
  // no group of order 5 has that property.
  const Table loop = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(loop);
    FAIL();
  } catch (const GroupAxiomError& e) {
    EXPECT_NE(std::string(e.what()).find("not associative at triple ("), std::string::npos) << e.what();
  }
}

TEST(FromTable, RejectsBadIdentityAndShape) {
  EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {0, 1}}), GroupAxiomError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1}}), GroupAxiomError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 2}, {1, 0}}), GroupAxiomError);
  EXPECT_THROW(FiniteGroup::from_table({}), GroupAxiomError);
}

TEST(FromTable, AcceptsValidTable) {
  const auto g = FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(g, cyclic(3));
}

TEST(TableIo, ParsesCommentsAndBlankLines) {
  EXPECT_EQ(load_group_table(ORACLE_FORGE_TEST_DATA "/z3.table"), cyclic(3));
  EXPECT_EQ(load_group_table(ORACLE_FORGE_TEST_DATA "/klein.table"), z2xz2());
}

TEST(TableIo, RoundTrip) {
  for (const auto& g : small_groups()) EXPECT_EQ(parse_group_table(format_group_table(g)), g);
}

TEST(TableIo, ErrorsNameLineAndColumn) {
  try {
    parse_group_table("2\n0 1\n1 x\n");
    FAIL();
  } catch (const TableParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3, column 3"), std::string::npos) << e.what();
  }
  try {
    parse_group_table("# header\n2\n0 1\n1 5\n");
    FAIL();
  } catch (const TableParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_group_table("2\n0 1\n"), TableParseError);
  EXPECT_THROW(parse_group_table("2\n0 1\n1 0 1\n"), TableParseError);
  EXPECT_THROW(parse_group_table("# nothing\n"), TableParseError);
  EXPECT_THROW(parse_group_table("0\n"), TableParseError);
  EXPECT_THROW(load_group_table("/nonexistent/table"), std::runtime_error);
}

TEST(TableIo, AxiomErrorsPropagate) {
  EXPECT_THROW(parse_group_table("2\n1 0\n0 1\n"), GroupAxiomError);
}

TEST(AbelianFactors, Construction) {
  const AbelianFactors a({2, 3, 4});
  EXPECT_EQ(a.order(), 24u);
  EXPECT_EQ(a.count(), 3u);
  EXPECT_TRUE(a.group().is_abelian());
  EXPECT_EQ(a.components(a.compose({1, 2, 3})), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(a.project(a.compose({1, 2, 3}), 1), 2u);
  EXPECT_EQ(a.group(), direct_product(direct_product(cyclic(2), cyclic(3)), cyclic(4)));
  EXPECT_EQ(AbelianFactors({}).order(), 1u);
}

TEST(AbelianFactors, RejectsOrderOneAndNonPrimePowers) {
  EXPECT_THROW(AbelianFactors({1}), std::invalid_argument);
  EXPECT_THROW(AbelianFactors({6}), std::invalid_argument);
  EXPECT_THROW(AbelianFactors({2, 12}), std::invalid_argument);
  EXPECT_NO_THROW(AbelianFactors({8, 9, 5}));
}

TEST(AbelianFactors, PrimePowerBase) {
  EXPECT_EQ(prime_power_base(8), 2u);
  EXPECT_EQ(prime_power_base(27), 3u);
  EXPECT_EQ(prime_power_base(7), 7u);
  EXPECT_EQ(prime_power_base(6), 0u);
  EXPECT_EQ(prime_power_base(1), 0u);
}

TEST(GroupHom, Validation) {
  const auto g = cyclic(4), a = cyclic(2);
  EXPECT_NO_THROW(GroupHom::create(g, a, {0, 1, 0, 1}));
  EXPECT_THROW(GroupHom::create(g, a, {0, 1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(GroupHom::create(g, a, {1, 0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(GroupHom::create(g, a, {0, 1}), std::invalid_argument);
  EXPECT_THROW(GroupHom::create(g, a, {0, 2, 0, 2}), std::invalid_argument);
  EXPECT_TRUE(GroupHom::first_violation(g, a, {0, 1, 1, 0}).has_value());
}

TEST(GroupHom, Compose) {
  const auto id = GroupHom::identity(cyclic(4));
  const auto mod2 = GroupHom::create(cyclic(4), cyclic(2), {0, 1, 0, 1});
  EXPECT_EQ(compose(id, mod2), mod2);
  EXPECT_THROW(compose(mod2, id), std::invalid_argument);
}

TEST(Abelianization, AbelianInputIsItself) {
  const auto ab = abelianization(cyclic(6));
  EXPECT_EQ(ab.quotient.order(), 6u);
  EXPECT_EQ(ab.projection.images(), (std::vector<Element>{0, 1, 2, 3, 4, 5}));
}

std::set<Element> brute_force_derived_subgroup(const FiniteGroup& g) {
  std::set<Element> s{0};
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) s.insert(g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y))));
  bool grown = true;
  while (grown) {
    grown = false;
    for (Element x : std::set<Element>(s))
      for (Element y : std::set<Element>(s)) grown |= s.insert(g.mul(x, y)).second;
  }
  return s;
}

TEST(Abelianization, SymmetricThreeAndDihedralFour) {
  EXPECT_EQ(brute_force_derived_subgroup(symmetric(3)).size(), 3u);
  EXPECT_EQ(abelianization(symmetric(3)).quotient.order(), 2u);
  EXPECT_EQ(brute_force_derived_subgroup(dihedral(4)).size(), 2u);
  const auto d4 = abelianization(dihedral(4));
  EXPECT_EQ(d4.quotient.order(), 4u);
  EXPECT_TRUE(d4.quotient.is_abelian());
}

TEST(Abelianization, MatchesBruteForceDerivedSubgroup) {
  for (const auto& g : small_groups()) {
    const auto ab = abelianization(g);
    const auto derived = brute_force_derived_subgroup(g);
    EXPECT_EQ(ab.quotient.order() * derived.size(), g.order());
    EXPECT_TRUE(ab.quotient.is_abelian());
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(ab.derived_subgroup[x] != 0, derived.count(x) == 1);
      EXPECT_EQ(ab.projection(x) == 0, derived.count(x) == 1);
    }
  }
}

TEST(Characters, CyclicFour) {
  const auto chars = one_dim_characters(cyclic(4));
  ASSERT_EQ(chars.size(), 4u);
  std::set<std::vector<std::size_t>> arrays;
  for (const auto& c : chars) arrays.insert(c.with_modulus(4).exponents());
  std::set<std::vector<std::size_t>> expected;
  for (std::size_t k = 0; k < 4; ++k) expected.insert({0, k % 4, 2 * k % 4, 3 * k % 4});
  EXPECT_EQ(arrays, expected);
  for (const auto& c : chars) EXPECT_EQ(c.modulus(), 4u);
}

TEST(Characters, SymmetricThreeTrivialAndSign) {
  const auto chars = one_dim_characters(symmetric(3));
  ASSERT_EQ(chars.size(), 2u);
  EXPECT_TRUE(chars[0].is_trivial() || chars[1].is_trivial());
  const auto& sign = chars[0].is_trivial() ? chars[1] : chars[0];
  // transpositions are odd: element orders 2 carry the sign
  for (Element x = 0; x < 6; ++x) {
    EXPECT_EQ(sign.value(x).real() < 0, symmetric(3).element_order(x) == 2) << x;
  }
}

TEST(Characters, KleinFourCharacters) {
  const auto g = z2xz2();
  const auto chars = one_dim_characters(g);
  ASSERT_EQ(chars.size(), 4u);
  for (const auto& c : chars) EXPECT_EQ(c.modulus(), 2u);
  EXPECT_EQ(ref::brute_force_homs(g, cyclic(2)).size(), 4u);
}

TEST(Characters, CountAndDistinctness) {
  for (const auto& g : small_groups()) {
    const auto chars = one_dim_characters(g);
    EXPECT_EQ(chars.size(), abelianization(g).quotient.order());
    for (std::size_t i = 0; i < chars.size(); ++i) {
      EXPECT_EQ(chars[i].modulus(), abelianization(g).quotient.exponent());
      for (std::size_t j = i + 1; j < chars.size(); ++j) EXPECT_FALSE(chars[i] == chars[j]);
    }
  }
}

TEST(Characters, Orthogonality) {
  for (const auto& g : small_groups()) {
    const auto chars = one_dim_characters(g);
    for (const auto& chi : chars) {
      for (const auto& psi : chars) {
        const std::size_t exact = orthogonality_sum(chi, psi);
        EXPECT_EQ(exact, chi == psi ? g.order() : 0u);
        EXPECT_LT(std::abs(ref::float_orthogonality_sum(chi, psi) - double(exact)), 1e-9);
      }
    }
  }
}

TEST(Characters, ValidationAndReducedEquality) {
  const auto g = cyclic(4);
  EXPECT_THROW(CyclicCharacter::create(g, 4, {0, 1, 1, 3}), std::invalid_argument);
  EXPECT_THROW(CyclicCharacter::create(g, 4, {1, 2, 3, 0}), std::invalid_argument);
  const auto a = CyclicCharacter::create(g, 4, {0, 2, 0, 2});
  const auto b = CyclicCharacter::create(g, 2, {0, 1, 0, 1});
  EXPECT_TRUE(a == b);
  EXPECT_EQ(a.reduced().modulus(), 2u);
  EXPECT_EQ(a.conjugate(), a);
  const auto c = CyclicCharacter::create(g, 4, {0, 1, 2, 3});
  EXPECT_EQ(c.conjugate().exponents(), (std::vector<std::size_t>{0, 3, 2, 1}));
  EXPECT_THROW(c.with_modulus(2), std::invalid_argument);
}

TEST(Characters, PullbackIsCharacter) {
  const auto target = cyclic(4);
  const auto chi = fundamental_character(4);
  for (const auto& g : small_groups()) {
    for (const auto& images : ref::brute_force_homs(g, target)) {
      const auto f = GroupHom::create(g, target, images);
      const auto pulled = pullback(chi, f);
      for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(pulled.exponent(x), chi.exponent(f(x)));
      EXPECT_NO_THROW(CyclicCharacter::create(g, pulled.modulus(), pulled.exponents()));
    }
  }
}

TEST(FundamentalCharacter, Examples) {
  EXPECT_EQ(fundamental_character(2).exponents(), (std::vector<std::size_t>{0, 1}));
  const auto f4 = fundamental_character(4);
  EXPECT_EQ(f4.exponents(), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_TRUE(f4.is_faithful());
  const auto f9 = fundamental_character(9);
  EXPECT_EQ(f9.exponent(3), 3u);
  EXPECT_NE(f9.value(3), std::complex<double>(1.0, 0.0));
  EXPECT_TRUE(f9.is_faithful());
  const auto cube = CyclicCharacter::create(cyclic(9), 9, {0, 3, 6, 0, 3, 6, 0, 3, 6});
  EXPECT_FALSE(cube.is_faithful());
  EXPECT_THROW(fundamental_character(6), std::invalid_argument);
}

TEST(EnumerateHoms, SpecExamples) {
  EXPECT_EQ(enumerate_homs(z2xz2(), AbelianFactors({2})).size(), 4u);
  EXPECT_EQ(enumerate_homs(symmetric(3), AbelianFactors({2, 3})).size(), 2u);
  EXPECT_EQ(ref::brute_force_homs(symmetric(3), AbelianFactors({2, 3}).group()).size(), 2u);
  for (const auto& g : small_groups()) {
    const auto homs = enumerate_homs(g, AbelianFactors({}));
    ASSERT_EQ(homs.size(), 1u);
    EXPECT_EQ(homs[0], GroupHom::trivial(g, AbelianFactors({}).group()));
  }
}

TEST(EnumerateHoms, MatchesBruteForce) {
  const std::vector<std::vector<std::size_t>> targets = {{2}, {3}, {4}, {2, 2}, {2, 3}, {2, 4}, {8}};
  for (const auto& g : small_groups()) {
    for (const auto& factors : targets) {
      const AbelianFactors a(factors);
      if (g.order() * a.order() > 64) continue;
      const auto homs = enumerate_homs(g, a);
      std::vector<std::vector<Element>> got;
      for (const auto& f : homs) got.push_back(f.images());
      EXPECT_EQ(got, ref::brute_force_homs(g, a.group()));
    }
  }
}

TEST(EnumerateHoms, NonAbelianTargets) {
  const auto s3 = symmetric(3);
  const auto homs = enumerate_homs(cyclic(2), s3);
  EXPECT_EQ(homs.size(), 4u);  // trivial plus three transpositions
  std::vector<std::vector<Element>> got;
  for (const auto& f : homs) got.push_back(f.images());
  EXPECT_EQ(got, ref::brute_force_homs(cyclic(2), s3));
  std::vector<std::vector<Element>> got2;
  for (const auto& f : enumerate_homs(s3, s3)) got2.push_back(f.images());
  EXPECT_EQ(got2, ref::brute_force_homs(s3, s3));
}

TEST(EnumerateHoms, Deterministic) {
  const auto a = enumerate_homs(dihedral(4), AbelianFactors({2, 4}));
  const auto b = enumerate_homs(dihedral(4), AbelianFactors({2, 4}));
  EXPECT_EQ(a, b);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].images(), a[i].images());
}

TEST(GeneratingSequence, GeneratesGroup) {
  for (const auto& g : small_groups()) {
    const auto gens = generating_sequence(g);
    const auto sub = generated_subgroup(g, gens);
    for (Element x = 0; x < g.order(); ++x) EXPECT_TRUE(sub[x]);
  }
}

TEST(ClassicalBaseline, Examples) {
  EXPECT_EQ(classical_baseline_queries(cyclic(8)), 1u);
  EXPECT_EQ(classical_baseline_queries(z2xz2()), 2u);
  const auto z2_4 = direct_product(direct_product(z2xz2(), cyclic(2)), cyclic(2));
  EXPECT_EQ(classical_baseline_queries(z2_4), 4u);
  EXPECT_EQ(classical_baseline_queries(cyclic(1)), 0u);
  EXPECT_EQ(classical_baseline_queries(symmetric(3)), 2u);
  EXPECT_EQ(classical_baseline_queries(cyclic(6)), 1u);
  EXPECT_EQ(classical_baseline_queries(symmetric(4)), 2u);
  EXPECT_EQ(classical_baseline_queries(direct_product(cyclic(2), cyclic(4))), 2u);
}

TEST(ClassicalBaseline, MinimalByExhaustiveSearch) {
  for (const auto& g : small_groups()) {
    const std::size_t m = classical_baseline_queries(g);
    const auto set = small_generating_set(g);
    EXPECT_EQ(set.size(), m);
    const auto sub = generated_subgroup(g, set);
    for (Element x = 0; x < g.order(); ++x) EXPECT_TRUE(sub[x]);
    if (m == 0) continue;
    // no (m-1)-subset generates
    const auto subsets = ref::all_functions(m - 1, g.order());
    for (const auto& s : subsets) {
      const auto gen = generated_subgroup(g, s);
      std::size_t size = 0;
      for (char c : gen) size += c != 0;
      EXPECT_LT(size, g.order());
    }
  }
}

}  // namespace
