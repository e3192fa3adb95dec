#ifndef ORACLE_FORGE_LINREL_LINREL_HPP
#define ORACLE_FORGE_LINREL_LINREL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oracle_forge/numeric/subspace.hpp"

namespace oracle_forge::linrel {

using numeric::Residue;
using numeric::Subspace;
using Vector = std::vector<Residue>;

/**
 * A linear relation k^dom ~> k^cod over k = GF(p): a subspace of
 * k^(dom + cod), domain coordinates first. Always contains (0, 0).
 */
class LinRel {
 public:
  static LinRel from_subspace(std::size_t dom, std::size_t cod, Subspace space);
  static LinRel from_basis(Residue prime, std::size_t dom, std::size_t cod,
                           const std::vector<Vector>& basis);
  /// Graph {(u, M u)} of the linear map given by the cod x dom matrix rows.
  static LinRel graph(Residue prime, std::size_t dom, std::size_t cod,
                      const std::vector<Vector>& matrix_rows);

  Residue prime() const { return space_.prime(); }
  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const Subspace& space() const { return space_; }
  bool relates(const Vector& u, const Vector& w) const;

  friend bool operator==(const LinRel&, const LinRel&) = default;

 private:
  LinRel(std::size_t dom, std::size_t cod, Subspace space)
      : dom_(dom), cod_(cod), space_(std::move(space)) {}
  std::size_t dom_;
  std::size_t cod_;
  Subspace space_;
};

LinRel identity(Residue prime, std::size_t n);
/// k^m (+) k^n ~> k^n (+) k^m.
LinRel swap(Residue prime, std::size_t m, std::size_t n);

/// f : U ~> V then g : V ~> W, i.e. {(u, w) | exists v, (u, v) in f, (v, w) in g}.
LinRel compose(const LinRel& f, const LinRel& g);
/// Composite of a chain, applied left to right.
LinRel compose(std::initializer_list<LinRel> chain);
/// Converse: the same subspace with the coordinate blocks swapped.
LinRel dagger(const LinRel& f);
/// Direct sum; the result orders coordinates (dom f, dom g, cod f, cod g).
LinRel oplus(const LinRel& f, const LinRel& g);
LinRel oplus(std::initializer_list<LinRel> parts);
bool equals(const LinRel& f, const LinRel& g);

enum class GeneratorKind { kAdd, kZero, kCopy, kDelete, kMult, kIdentity, kSwap };

struct GeneratorTag {
  GeneratorKind kind;
  /// Multiplier r for kMult, width n for kIdentity; unused otherwise.
  Residue param = 0;
};

/// add: k+k ~> k, (a, b, a+b);  zero: {0} ~> k, (0, 0);  copy: k ~> k+k, (a, a, a);
/// delete: k ~> {0}, (a, 0);  mult(r): k ~> k, (a, ra).
LinRel generator(GeneratorTag tag, Residue prime);

/// (1 (+) add)(1 (+) mult(r) (+) 1)(copy (+) 1): (i, v) ~> (i, v + r i).
LinRel resistor(Residue r, Residue prime);

/// f dagger(f) and dagger(f) f are both identities. Throws for non-endomorphisms.
bool is_unitary_rel(const LinRel& f);

using PairSet = std::vector<std::pair<Vector, Vector>>;

inline constexpr std::size_t kPairsOracleLimit = 65536;

/// Every (u, w) in f, sorted. Requires p^(dom+cod) <= kPairsOracleLimit.
PairSet pairs_oracle(const LinRel& f);

std::string to_string(GeneratorKind kind);

}  // namespace oracle_forge::linrel

#endif  // ORACLE_FORGE_LINREL_LINREL_HPP
