#ifndef ORACLE_FORGE_GROUPS_ABELIAN_FACTORS_HPP
#define ORACLE_FORGE_GROUPS_ABELIAN_FACTORS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "oracle_forge/groups/finite_group.hpp"

namespace oracle_forge::groups {

/// Returns the prime p if q = p^k with k >= 1, otherwise 0.
std::size_t prime_power_base(std::size_t q);

/**
 * A finite abelian group Z_{q_1} x ... x Z_{q_n} with each q_i a prime
 * power greater than 1. Element (a_1, ..., a_n) has mixed-radix index
 * ((a_1 q_2 + a_2) q_3 + ...) so that the induced table agrees with a
 * left-associated direct_product of the cyclic factors.
 */
class AbelianFactors {
 public:
  /// Throws std::invalid_argument for factors that are 1 or not prime powers.
  explicit AbelianFactors(std::vector<std::size_t> factors);

  const std::vector<std::size_t>& factors() const { return factors_; }
  std::size_t count() const { return factors_.size(); }
  std::size_t order() const { return order_; }
  const FiniteGroup& group() const { return group_; }

  std::vector<std::size_t> components(Element a) const;
  Element compose(const std::vector<std::size_t>& components) const;
  /// Projection homomorphism onto factor i, as an element map.
  std::size_t project(Element a, std::size_t factor) const;

  std::string str() const;

 private:
  std::vector<std::size_t> factors_;
  std::size_t order_ = 1;
  FiniteGroup group_;
};

}  // namespace oracle_forge::groups

#endif  // ORACLE_FORGE_GROUPS_ABELIAN_FACTORS_HPP
