#ifndef ORACLE_FORGE_GROUPS_CHARACTER_HPP
#define ORACLE_FORGE_GROUPS_CHARACTER_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "oracle_forge/groups/finite_group.hpp"
#include "oracle_forge/groups/homomorphism.hpp"

namespace oracle_forge::groups {

/**
 * One-dimensional representation g -> exp(2 pi i e(g) / m), stored exactly
 * as exponents mod m.
 *
 * Two characters are equal when they take the same values, so comparison
 * is on the reduced form (smallest modulus expressing the same fractions).
 */
class CyclicCharacter {
 public:
  /// Throws std::invalid_argument unless e is a homomorphism G -> Z_m.
  static CyclicCharacter create(FiniteGroup group, std::size_t modulus,
                                std::vector<std::size_t> exponents);
  static CyclicCharacter trivial(FiniteGroup group);

  const FiniteGroup& group() const { return group_; }
  std::size_t modulus() const { return modulus_; }
  const std::vector<std::size_t>& exponents() const { return exponents_; }
  std::size_t exponent(Element g) const { return exponents_[g]; }

  std::complex<double> value(Element g) const;
  CyclicCharacter conjugate() const;
  CyclicCharacter reduced() const;
  /// Same values expressed over modulus m; throws if m cannot express them.
  CyclicCharacter with_modulus(std::size_t m) const;
  bool is_faithful() const;
  bool is_trivial() const;

  friend bool operator==(const CyclicCharacter& a, const CyclicCharacter& b);

 private:
  CyclicCharacter(FiniteGroup g, std::size_t m, std::vector<std::size_t> e)
      : group_(std::move(g)), modulus_(m), exponents_(std::move(e)) {}
  FiniteGroup group_;
  std::size_t modulus_;
  std::vector<std::size_t> exponents_;
};

/// chi o f, a character of f's domain.
CyclicCharacter pullback(const CyclicCharacter& chi, const GroupHom& f);

/// Faithful character x -> exp(2 pi i x / q) of Z_q; q must be a prime power.
CyclicCharacter fundamental_character(std::size_t q);

/// Character orthogonality sum  sum_g chi(g) conj(psi(g)), evaluated
/// exactly: returns |G| when chi == psi and 0 otherwise.
std::size_t orthogonality_sum(const CyclicCharacter& chi, const CyclicCharacter& psi);

}  // namespace oracle_forge::groups

#endif  // ORACLE_FORGE_GROUPS_CHARACTER_HPP
