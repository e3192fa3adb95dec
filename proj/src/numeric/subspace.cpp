#include "oracle_forge/numeric/subspace.hpp"

#include <stdexcept>

namespace oracle_forge::numeric {

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* op) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument(std::string(op) + ": subspaces live over different fields");
  }
  if (a.ambient() != b.ambient()) {
    throw std::invalid_argument(std::string(op) + ": ambient dimensions differ");
  }
}

FFMatrix stack(const FFMatrix& a, const FFMatrix& b) {
  auto rows = a.to_rows();
  auto more = b.to_rows();
  rows.insert(rows.end(), more.begin(), more.end());
  return FFMatrix::from_rows(a.prime(), a.cols(), rows);
}

}  // namespace

Subspace Subspace::span(Residue prime, std::size_t ambient,
                        const std::vector<std::vector<Residue>>& vectors) {
  return Subspace(rref(FFMatrix::from_rows(prime, ambient, vectors)));
}

Subspace Subspace::span(const FFMatrix& generators) { return Subspace(rref(generators)); }

Subspace Subspace::zero(Residue prime, std::size_t ambient) {
  return Subspace(FFMatrix(prime, 0, ambient));
}

Subspace Subspace::full(Residue prime, std::size_t ambient) {
  return Subspace(FFMatrix::identity(prime, ambient));
}

bool Subspace::contains(std::span<const Residue> v) const {
  if (v.size() != ambient()) throw std::invalid_argument("membership: vector length mismatch");
  // Reduce v against the RREF basis; v is a member iff it reduces to zero.
  const PrimeField& f = basis_.field();
  std::vector<Residue> rest(v.begin(), v.end());
  for (auto& x : rest) x %= f.prime();
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t pivot = 0;
    while (basis_(i, pivot) == 0) ++pivot;
    const Residue factor = rest[pivot];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < ambient(); ++c) {
      rest[c] = f.sub(rest[c], f.mul(factor, basis_(i, c)));
    }
  }
  for (Residue x : rest) {
    if (x != 0) return false;
  }
  return true;
}

bool membership(std::span<const Residue> v, const Subspace& s) { return s.contains(v); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "sum");
  return Subspace::span(stack(a.basis(), b.basis()));
}

Subspace annihilator(const Subspace& s) { return Subspace::span(nullspace(s.basis())); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "intersect");
  // a n b = ann(ann(a) + ann(b)).
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace project(const Subspace& s, std::span<const std::size_t> coords) {
  for (std::size_t c : coords) {
    if (c >= s.ambient()) throw std::invalid_argument("project: coordinate out of range");
  }
  FFMatrix image(s.prime(), s.dim(), coords.size());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t j = 0; j < coords.size(); ++j) image.set(r, j, s.basis()(r, coords[j]));
  }
  return Subspace::span(image);
}

Subspace embed(const Subspace& s, std::size_t ambient, std::span<const std::size_t> placement) {
  if (placement.size() != s.ambient()) {
    throw std::invalid_argument("embed: placement must list every source coordinate");
  }
  std::vector<bool> used(ambient, false);
  for (std::size_t c : placement) {
    if (c >= ambient || used[c]) throw std::invalid_argument("embed: invalid placement");
    used[c] = true;
  }
  std::vector<std::vector<Residue>> gens;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    std::vector<Residue> v(ambient, 0);
    for (std::size_t i = 0; i < placement.size(); ++i) v[placement[i]] = s.basis()(r, i);
    gens.push_back(std::move(v));
  }
  for (std::size_t c = 0; c < ambient; ++c) {
    if (used[c]) continue;
    std::vector<Residue> v(ambient, 0);
    v[c] = 1;
    gens.push_back(std::move(v));
  }
  return Subspace::span(s.prime(), ambient, gens);
}

}  // namespace oracle_forge::numeric
