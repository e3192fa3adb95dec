#ifndef ORACLE_FORGE_GROUPS_ENUMERATION_HPP
#define ORACLE_FORGE_GROUPS_ENUMERATION_HPP

#include <cstddef>
#include <vector>

#include "oracle_forge/groups/abelian_factors.hpp"
#include "oracle_forge/groups/character.hpp"
#include "oracle_forge/groups/finite_group.hpp"
#include "oracle_forge/groups/homomorphism.hpp"

namespace oracle_forge::groups {

struct Abelianization {
  FiniteGroup quotient;
  GroupHom projection;
  std::vector<char> derived_subgroup;  // indicator of [G, G]
};

/// G / [G, G]. Cosets are numbered in order of their smallest element.
Abelianization abelianization(const FiniteGroup& g);

/// Every one-dimensional representation of g, each written modulo the
/// exponent of the abelianization, sorted by exponent array (trivial first).
std::vector<CyclicCharacter> one_dim_characters(const FiniteGroup& g);

/// Irredundant generating sequence: each element is outside the subgroup
/// generated by its predecessors. Scans elements in index order.
std::vector<Element> generating_sequence(const FiniteGroup& g);

/// Every homomorphism g -> target, sorted by image array. DFS over a
/// generating sequence, images restricted to orders dividing the
/// generator's order, pruned as soon as the partial map is inconsistent.
std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& target);
std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const AbelianFactors& target);

/// Size of a smallest generating set. Exact for |G| <= kExactGeneratorLimit;
/// above that, a greedy upper bound.
std::size_t classical_baseline_queries(const FiniteGroup& g);
inline constexpr std::size_t kExactGeneratorLimit = 64;

/// A generating set of size classical_baseline_queries(g).
std::vector<Element> small_generating_set(const FiniteGroup& g);

}  // namespace oracle_forge::groups

#endif  // ORACLE_FORGE_GROUPS_ENUMERATION_HPP
