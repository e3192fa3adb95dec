#ifndef ORACLE_FORGE_NUMERIC_SUBSPACE_HPP
#define ORACLE_FORGE_NUMERIC_SUBSPACE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "oracle_forge/numeric/ffmatrix.hpp"

namespace oracle_forge::numeric {

/**
 * Linear subspace of GF(p)^ambient held in canonical form: the basis rows
 * are the nonzero rows of the RREF of any spanning set. Equality as sets is
 * entrywise equality of the canonical bases.
 */
class Subspace {
 public:
  static Subspace span(Residue prime, std::size_t ambient,
                       const std::vector<std::vector<Residue>>& vectors);
  static Subspace span(const FFMatrix& generators);
  static Subspace zero(Residue prime, std::size_t ambient);
  static Subspace full(Residue prime, std::size_t ambient);

  Residue prime() const { return basis_.prime(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FFMatrix& basis() const { return basis_; }

  bool contains(std::span<const Residue> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(FFMatrix canonical) : basis_(std::move(canonical)) {}
  FFMatrix basis_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// Image under the coordinate projection onto `coords` (in the listed order).
Subspace project(const Subspace& s, std::span<const std::size_t> coords);
/// Embeds s into GF(p)^ambient, coordinate i of s landing at placement[i];
/// coordinates not in `placement` are unconstrained.
Subspace embed(const Subspace& s, std::size_t ambient, std::span<const std::size_t> placement);
/// Vectors orthogonal to s under the standard bilinear form.
Subspace annihilator(const Subspace& s);
bool membership(std::span<const Residue> v, const Subspace& s);

}  // namespace oracle_forge::numeric

#endif  // ORACLE_FORGE_NUMERIC_SUBSPACE_HPP
