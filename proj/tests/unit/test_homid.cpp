#include <gtest/gtest.h>

#include "oracle_forge/frobenius/oracle.hpp"
#include "oracle_forge/groups/enumeration.hpp"
#include "oracle_forge/homid/algorithm.hpp"
#include "oracle_forge/homid/oracle_access.hpp"
#include "oracles.hpp"

namespace {

using namespace oracle_forge::homid;
using oracle_forge::frobenius::build_oracle_operational;
using oracle_forge::groups::abelianization;
using oracle_forge::groups::cyclic;
using oracle_forge::groups::dihedral;
using oracle_forge::groups::direct_product;
using oracle_forge::groups::Element;
using oracle_forge::groups::enumerate_homs;
using oracle_forge::groups::fundamental_character;
using oracle_forge::groups::one_dim_characters;
using oracle_forge::groups::pullback;
using oracle_forge::groups::symmetric;
using oracle_forge::numeric::max_schmidt_coefficient;
namespace ref = oracle_forge::testing;

FiniteGroup z2xz2() { return direct_product(cyclic(2), cyclic(2)); }

RunOptions exact() { return {SimulationMode::kExact}; }
RunOptions floating() { return {SimulationMode::kFloat}; }
RunOptions direct(SimulationMode mode = SimulationMode::kFloat) {
  return {mode, oracle_forge::numeric::kDefaultTol, FourierConvention::kDirect};
}

OracleAccess oracle_for(const std::vector<Element>& f, const FiniteGroup& target, std::size_t domain) {
  return OracleAccess(build_oracle_operational(f, target), domain, target.order());
}

// Probability that the left register of `state` is found in character chi.
double reference_probability(const std::vector<Complex>& state, const CyclicCharacter& chi,
                             std::size_t left, std::size_t right) {
  double total = 0.0;
  for (std::size_t a = 0; a < right; ++a) {
    Complex amp = 0.0;
    for (std::size_t x = 0; x < left; ++x) amp += std::conj(chi.value(x)) * state[x * right + a];
    total += std::norm(amp) / double(left);
  }
  return total;
}

TEST(SingleQuery, TrivialHomGivesTrivialCharacter) {
  for (const auto& options : {floating(), exact()}) {
    auto oracle = oracle_for({0, 0, 0, 0, 0, 0}, cyclic(3), 6);
    const auto out = run_single_query(symmetric(3), oracle, fundamental_character(3), options);
    EXPECT_TRUE(out.measured.is_trivial());
    EXPECT_NEAR(out.probability, 1.0, 1e-9);
    EXPECT_EQ(oracle.ledger().count, 1u);
  }
}

TEST(SingleQuery, DoublingOnZ3DirectConvention) {
  const std::vector<Element> f{0, 2, 1};
  const auto rho = fundamental_character(3);
  auto oracle = oracle_for(f, cyclic(3), 3);
  const auto out = run_single_query(cyclic(3), oracle, rho, direct());
  const auto f_hom = GroupHom::create(cyclic(3), cyclic(3), f);
  EXPECT_EQ(out.measured, pullback(rho, f_hom).conjugate());
  EXPECT_NEAR(out.probability, 1.0, 1e-9);
  // independent 9-dimensional state-vector reference
  const auto state = ref::reference_final_state(cyclic(3), cyclic(3), f, rho, true);
  EXPECT_NEAR(reference_probability(state, out.measured, 3, 3), 1.0, 1e-9);
}

TEST(SingleQuery, DefaultConventionMeasuresPullback) {
  const std::vector<Element> f{0, 2, 1};
  const auto rho = fundamental_character(3);
  auto oracle = oracle_for(f, cyclic(3), 3);
  const auto out = run_single_query(cyclic(3), oracle, rho);
  const auto pulled = pullback(rho, GroupHom::create(cyclic(3), cyclic(3), f));
  EXPECT_EQ(out.measured, pulled);
  const auto state = ref::reference_final_state(cyclic(3), cyclic(3), f, rho, false);
  EXPECT_NEAR(reference_probability(state, pulled, 3, 3), 1.0, 1e-9);
  EXPECT_NEAR(reference_probability(state, pulled.conjugate(), 3, 3), 0.0, 1e-9);
}

TEST(SingleQuery, KleinProjection) {
  const auto g = z2xz2();
  const std::vector<Element> f{0, 0, 1, 1};  // (x, y) -> x, index x*2 + y
  for (const auto& options : {floating(), exact()}) {
    auto oracle = oracle_for(f, cyclic(2), 4);
    const auto out = run_single_query(g, oracle, fundamental_character(2), options);
    for (Element e = 0; e < 4; ++e) EXPECT_NEAR(out.measured.value(e).real(), (e / 2) ? -1.0 : 1.0, 1e-12);
    const auto state = ref::reference_final_state(g, cyclic(2), f, fundamental_character(2), false);
    EXPECT_NEAR(reference_probability(state, out.measured, 4, 2), 1.0, 1e-9);
  }
}

TEST(SingleQuery, DistributionIsDeterministic) {
  const auto g = dihedral(4);
  const AbelianFactors a({4});
  const auto chars = one_dim_characters(g);
  for (const auto& f : enumerate_homs(g, a)) {
    auto oracle = make_oracle(f);
    const auto rho = fundamental_character(4);
    const auto out = run_single_query(g, oracle, rho, floating());
    ASSERT_EQ(out.distribution.size(), chars.size());
    std::size_t hits = 0;
    for (std::size_t k = 0; k < chars.size(); ++k) {
      if (chars[k] == out.measured) {
        EXPECT_GE(out.distribution[k], 1.0 - 1e-9);
        ++hits;
      } else {
        EXPECT_LE(out.distribution[k], 1e-9);
      }
    }
    EXPECT_EQ(hits, 1u);
  }
}

TEST(SingleQuery, DimensionMismatch) {
  auto oracle = oracle_for({0, 1}, cyclic(2), 2);
  EXPECT_THROW(run_single_query(cyclic(4), oracle, fundamental_character(2)), std::invalid_argument);
  EXPECT_THROW(run_single_query(cyclic(2), oracle, fundamental_character(4)), std::invalid_argument);
  EXPECT_EQ(oracle.ledger().count, 0u);
}

TEST(SingleQuery, NonHomomorphismOracleIsNonDeterministic) {
  // x -> 1 only at x = 1 is not a homomorphism Z4 -> Z2
  const std::vector<Element> f{0, 1, 0, 0};
  for (const auto& options : {floating(), exact()}) {
    auto oracle = oracle_for(f, cyclic(2), 4);
    EXPECT_THROW(run_single_query(cyclic(4), oracle, fundamental_character(2), options),
                 NonDeterministicOutcome);
  }
}

TEST(OracleAccess, LedgerAndPermutationDetection) {
  auto oracle = oracle_for({0, 1}, cyclic(2), 2);
  EXPECT_TRUE(oracle.is_permutation());
  const std::vector<Complex> state(4, 0.5);
  oracle.apply(state);
  oracle.apply(PhaseState{2, {0, 1, 0, 1}});
  EXPECT_EQ(oracle.ledger().count, 2u);
  EXPECT_THROW(OracleAccess(CMatrix::identity(5), 2, 2), std::invalid_argument);
  const std::vector<Complex> short_state(3, 0.0);
  EXPECT_THROW(oracle.apply(short_state), std::invalid_argument);
}

TEST(OracleAccess, ExactModeNeedsPermutation) {
  const double h = 1.0 / std::sqrt(2.0);
  OracleAccess oracle(oracle_forge::numeric::tensor(CMatrix::from_rows({{h, h}, {h, -h}}), CMatrix::identity(2)), 2, 2);
  EXPECT_FALSE(oracle.is_permutation());
  try {
    oracle.apply(PhaseState{1, {0, 0, 0, 0}});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "exact mode requires a permutation oracle");
  }
}

TEST(OracleAccess, PhaseStatePermutes) {
  auto oracle = oracle_for({0, 2, 1}, cyclic(3), 3);
  // |x, y> -> |x, y + 2x>; exponent of |x, y> moves to |x, y + 2x>
  const auto out = oracle.apply(PhaseState{9, {0, 1, 2, 3, 4, 5, 6, 7, 8}});
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) EXPECT_EQ(out.exponents[x * 3 + (y + 2 * x) % 3], x * 3 + y);
}

TEST(RecoverCyclicHom, TrivialMeasurement) {
  const auto f = recover_cyclic_hom(CyclicCharacter::trivial(symmetric(3)), fundamental_character(2));
  EXPECT_EQ(f, GroupHom::trivial(symmetric(3), cyclic(2)));
}

TEST(RecoverCyclicHom, Z4IdentityUnderDirectConvention) {
  const auto measured = CyclicCharacter::create(cyclic(4), 4, {0, 3, 2, 1});
  const auto f = recover_cyclic_hom(measured, fundamental_character(4), FourierConvention::kDirect);
  EXPECT_EQ(f.images(), (std::vector<Element>{0, 1, 2, 3}));
  // and against the simulated measurement for f = id
  auto oracle = oracle_for({0, 1, 2, 3}, cyclic(4), 4);
  EXPECT_EQ(run_single_query(cyclic(4), oracle, fundamental_character(4), direct()).measured, measured);
  // the default convention reads the same array as x -> -x
  EXPECT_EQ(recover_cyclic_hom(measured, fundamental_character(4)).images(),
            (std::vector<Element>{0, 3, 2, 1}));
}

TEST(RecoverCyclicHom, SignCharacterOfS3) {
  const auto s3 = symmetric(3);
  const auto chars = one_dim_characters(s3);
  const auto& sign = chars[0].is_trivial() ? chars[1] : chars[0];
  const auto f = recover_cyclic_hom(sign, fundamental_character(2));
  const auto homs = enumerate_homs(s3, AbelianFactors({2}));
  ASSERT_EQ(homs.size(), 2u);
  const auto& sign_hom = homs[0].images() == std::vector<Element>(6, 0) ? homs[1] : homs[0];
  EXPECT_EQ(f.images(), sign_hom.images());
}

TEST(RecoverCyclicHom, Errors) {
  const auto measured = CyclicCharacter::create(cyclic(4), 4, {0, 1, 2, 3});
  EXPECT_THROW(recover_cyclic_hom(measured, fundamental_character(2)), InconsistentMeasurement);
  const auto not_faithful = CyclicCharacter::create(cyclic(4), 2, {0, 1, 0, 1});
  EXPECT_THROW(recover_cyclic_hom(measured, not_faithful), std::invalid_argument);
}

TEST(IdentifyHom, SingleFactorSingleQuery) {
  for (const auto& g : {cyclic(2), cyclic(4), symmetric(3), dihedral(4)}) {
    for (const auto& f : enumerate_homs(g, AbelianFactors({4}))) {
      auto oracle = make_oracle(f);
      const auto run = identify_hom(g, AbelianFactors({4}), oracle);
      EXPECT_EQ(run.queries.count, 1u);
      EXPECT_EQ(run.recovered, f);
    }
  }
}

TEST(IdentifyHom, SymmetricThreeIntoZ6) {
  const AbelianFactors a({2, 3});
  const auto homs = enumerate_homs(symmetric(3), a);
  ASSERT_EQ(homs.size(), 2u);
  for (const auto& f : homs) {
    for (const auto& options : {floating(), exact()}) {
      auto oracle = make_oracle(f);
      const auto run = identify_hom(symmetric(3), a, oracle, options);
      EXPECT_EQ(run.queries.count, 2u);
      EXPECT_EQ(run.recovered, f);
      EXPECT_EQ(run.mode, options.mode);
      ASSERT_EQ(run.per_factor.size(), 2u);
      EXPECT_EQ(run.per_factor[1].factor, 1u);
    }
  }
}

TEST(IdentifyHom, KleinIntoZ2) {
  const auto homs = enumerate_homs(z2xz2(), AbelianFactors({2}));
  ASSERT_EQ(homs.size(), 4u);
  for (const auto& f : homs) {
    auto oracle = make_oracle(f);
    const auto run = identify_hom(z2xz2(), AbelianFactors({2}), oracle);
    EXPECT_EQ(run.recovered, f);
    EXPECT_EQ(oracle.ledger().count, 1u);
  }
}

TEST(IdentifyHom, DiagramOracleAndDirectConvention) {
  const AbelianFactors a({2, 4});
  for (const auto& f : enumerate_homs(direct_product(cyclic(2), cyclic(4)), a)) {
    for (const auto& options : {floating(), exact(), direct(), direct(SimulationMode::kExact)}) {
      auto oracle = make_oracle(f, OracleKind::kDiagram);
      const auto run = identify_hom(f.domain(), a, oracle, options);
      EXPECT_EQ(run.recovered, f);
      EXPECT_EQ(run.queries.count, 2u);
    }
  }
}

TEST(IdentifyHom, ExactAndFloatAgree) {
  const std::vector<FiniteGroup> groups = {cyclic(2), cyclic(4), z2xz2(), symmetric(3), dihedral(4), cyclic(6)};
  const std::vector<std::vector<std::size_t>> targets = {{2}, {3}, {4}, {2, 3}, {2, 4}, {8}};
  for (const auto& g : groups) {
    for (const auto& factors : targets) {
      const AbelianFactors a(factors);
      if (g.order() * a.order() > 64) continue;
      for (const auto& f : enumerate_homs(g, a)) {
        auto o1 = make_oracle(f);
        auto o2 = make_oracle(f);
        const auto r1 = identify_hom(g, a, o1, exact());
        const auto r2 = identify_hom(g, a, o2, floating());
        ASSERT_EQ(r1.per_factor.size(), r2.per_factor.size());
        for (std::size_t i = 0; i < r1.per_factor.size(); ++i) {
          EXPECT_EQ(r1.per_factor[i].measured, r2.per_factor[i].measured);
          EXPECT_EQ(r1.per_factor[i].probability, 1.0);
          EXPECT_GE(r2.per_factor[i].probability, 1.0 - 1e-9);
        }
        EXPECT_EQ(r1.recovered, f);
        EXPECT_EQ(r2.recovered, f);
      }
    }
  }
}

TEST(IdentifyHom, NonHomOracleErrors) {
  auto oracle = oracle_for({0, 1, 1, 1}, cyclic(2), 4);
  EXPECT_THROW(identify_hom(z2xz2(), AbelianFactors({2}), oracle), NonDeterministicOutcome);
}

TEST(IdentifyAll, SweepsInEnumerationOrder) {
  const AbelianFactors a({2, 2, 3});
  const auto sweep = identify_all(dihedral(4), a);
  const auto homs = enumerate_homs(dihedral(4), a);
  ASSERT_EQ(sweep.size(), homs.size());
  for (std::size_t i = 0; i < homs.size(); ++i) {
    EXPECT_EQ(sweep[i].hidden, homs[i]);
    ASSERT_TRUE(sweep[i].result.has_value()) << sweep[i].error;
    EXPECT_TRUE(sweep[i].correct);
    EXPECT_EQ(sweep[i].result->queries.count, 3u);
  }
}

TEST(FinalState, TrivialIsProductState) {
  const auto rho = fundamental_character(3);
  const auto f = GroupHom::trivial(cyclic(4), cyclic(3));
  const auto state = final_state(f, rho);
  EXPECT_NEAR(max_schmidt_coefficient(state, 4, 3), 1.0, 1e-9);
  const auto expected = ref::reference_final_state(cyclic(4), cyclic(3), f.images(), rho, false);
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_LT(std::abs(state(i, 0) - expected[i]), 1e-12);
  // left register uniform
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t a = 0; a < 3; ++a) EXPECT_LT(std::abs(state(x * 3 + a, 0) - state(a, 0)), 1e-12);
}

TEST(FinalState, Z3IdentityLeftFactor) {
  const auto rho = fundamental_character(3);
  const auto f = GroupHom::identity(cyclic(3));
  const auto state = final_state(f, rho, FourierConvention::kDirect);
  EXPECT_NEAR(max_schmidt_coefficient(state, 3, 3), 1.0, 1e-9);
  // left factor proportional to conj(rho): amplitude ratio between |x, a> and |0, a>
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t a = 0; a < 3; ++a) {
      const Complex ratio = state(x * 3 + a, 0) / state(a, 0);
      EXPECT_LT(std::abs(ratio - std::conj(rho.value(x))), 1e-12);
    }
  }
}

TEST(FinalState, ProductForAllHomsZ4) {
  const auto rho = fundamental_character(4);
  for (const auto& f : enumerate_homs(cyclic(4), AbelianFactors({4}))) {
    for (auto c : {FourierConvention::kConjugate, FourierConvention::kDirect}) {
      const auto state = final_state(f, rho, c);
      EXPECT_NEAR(max_schmidt_coefficient(state, 4, 4), 1.0, 1e-9);
      const auto expected =
          ref::reference_final_state(cyclic(4), cyclic(4), f.images(), rho, c == FourierConvention::kDirect);
      for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_LT(std::abs(state(i, 0) - expected[i]), 1e-12);
    }
  }
}

TEST(FinalState, Errors) {
  EXPECT_THROW(final_state(GroupHom::identity(cyclic(3)), fundamental_character(2)), std::invalid_argument);
}

TEST(QueryComparison, Examples) {
  const auto z2_4 = direct_product(direct_product(z2xz2(), cyclic(2)), cyclic(2));
  const auto r1 = classical_vs_quantum_report(z2_4, AbelianFactors({2}));
  EXPECT_EQ(r1.quantum, 1u);
  EXPECT_EQ(r1.classical, 4u);
  const auto r2 = classical_vs_quantum_report(cyclic(6), AbelianFactors({2, 3}));
  EXPECT_EQ(r2.quantum, 2u);
  EXPECT_EQ(r2.classical, 1u);
  const auto r3 = classical_vs_quantum_report(cyclic(2), AbelianFactors({2}));
  EXPECT_EQ(r3.quantum, 1u);
  EXPECT_EQ(r3.classical, 1u);
}

TEST(Strings, Names) {
  EXPECT_EQ(to_string(SimulationMode::kExact), "exact");
  EXPECT_EQ(to_string(SimulationMode::kFloat), "float");
  EXPECT_EQ(to_string(OracleKind::kDiagram), "diagram");
  EXPECT_EQ(abelianization(symmetric(3)).quotient.order(), 2u);
}

}  // namespace
