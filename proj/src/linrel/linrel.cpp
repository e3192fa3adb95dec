#include "oracle_forge/linrel/linrel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle_forge::linrel {

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out(to - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

void require_same_prime(const LinRel& f, const LinRel& g, const char* op) {
  if (f.prime() != g.prime()) {
    throw std::invalid_argument(std::string(op) + ": relations over different fields");
  }
}

}  // namespace

LinRel LinRel::from_subspace(std::size_t dom, std::size_t cod, Subspace space) {
  if (space.ambient() != dom + cod) {
    throw std::invalid_argument("relation subspace must live in k^(dom+cod)");
  }
  return LinRel(dom, cod, std::move(space));
}

LinRel LinRel::from_basis(Residue prime, std::size_t dom, std::size_t cod,
                          const std::vector<Vector>& basis) {
  return from_subspace(dom, cod, Subspace::span(prime, dom + cod, basis));
}

LinRel LinRel::graph(Residue prime, std::size_t dom, std::size_t cod,
                     const std::vector<Vector>& matrix_rows) {
  if (matrix_rows.size() != cod) throw std::invalid_argument("graph: need cod matrix rows");
  const numeric::PrimeField field(prime);
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < dom; ++j) {
    Vector v(dom + cod, 0);
    v[j] = 1;
    for (std::size_t i = 0; i < cod; ++i) {
      if (matrix_rows[i].size() != dom) throw std::invalid_argument("graph: ragged matrix");
      v[dom + i] = field.reduce(matrix_rows[i][j]);
    }
    basis.push_back(std::move(v));
  }
  return from_basis(prime, dom, cod, basis);
}

bool LinRel::relates(const Vector& u, const Vector& w) const {
  if (u.size() != dom_ || w.size() != cod_) throw std::invalid_argument("relates: wrong sizes");
  Vector v = u;
  v.insert(v.end(), w.begin(), w.end());
  return space_.contains(v);
}

LinRel identity(Residue prime, std::size_t n) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v(2 * n, 0);
    v[i] = 1;
    v[n + i] = 1;
    basis.push_back(std::move(v));
  }
  return LinRel::from_basis(prime, n, n, basis);
}

LinRel swap(Residue prime, std::size_t m, std::size_t n) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < m + n; ++i) {
    Vector v(2 * (m + n), 0);
    v[i] = 1;
    // input (a, b) with a in k^m, b in k^n goes to (b, a)
    v[m + n + (i < m ? n + i : i - m)] = 1;
    basis.push_back(std::move(v));
  }
  return LinRel::from_basis(prime, m + n, m + n, basis);
}

LinRel compose(const LinRel& f, const LinRel& g) {
  require_same_prime(f, g, "compose");
  if (f.cod() != g.dom()) throw std::invalid_argument("compose: codomain/domain mismatch");
  const std::size_t u = f.dom(), v = f.cod(), w = g.cod();
  const std::size_t ambient = u + v + w;
  const auto f_place = range(0, u + v);
  const auto g_place = range(u, u + v + w);
  const Subspace joint = numeric::intersect(numeric::embed(f.space(), ambient, f_place),
                                            numeric::embed(g.space(), ambient, g_place));
  std::vector<std::size_t> keep = range(0, u);
  const auto tail = range(u + v, ambient);
  keep.insert(keep.end(), tail.begin(), tail.end());
  return LinRel::from_subspace(u, w, numeric::project(joint, keep));
}

LinRel compose(std::initializer_list<LinRel> chain) {
  if (chain.size() == 0) throw std::invalid_argument("compose: empty chain");
  auto it = chain.begin();
  LinRel acc = *it++;
  for (; it != chain.end(); ++it) acc = compose(acc, *it);
  return acc;
}

LinRel dagger(const LinRel& f) {
  std::vector<std::size_t> order = range(f.dom(), f.dom() + f.cod());
  const auto front = range(0, f.dom());
  order.insert(order.end(), front.begin(), front.end());
  return LinRel::from_subspace(f.cod(), f.dom(), numeric::project(f.space(), order));
}

LinRel oplus(const LinRel& f, const LinRel& g) {
  require_same_prime(f, g, "oplus");
  const std::size_t fd = f.dom(), gd = g.dom(), fc = f.cod(), gc = g.cod();
  const std::size_t ambient = fd + gd + fc + gc;
  std::vector<std::size_t> f_place = range(0, fd);
  const auto fc_place = range(fd + gd, fd + gd + fc);
  f_place.insert(f_place.end(), fc_place.begin(), fc_place.end());
  std::vector<std::size_t> g_place = range(fd, fd + gd);
  const auto gc_place = range(fd + gd + fc, ambient);
  g_place.insert(g_place.end(), gc_place.begin(), gc_place.end());

  std::vector<Vector> basis;
  auto place_rows = [&](const Subspace& s, const std::vector<std::size_t>& placement) {
    for (std::size_t r = 0; r < s.dim(); ++r) {
      Vector v(ambient, 0);
      for (std::size_t i = 0; i < placement.size(); ++i) v[placement[i]] = s.basis()(r, i);
      basis.push_back(std::move(v));
    }
  };
  place_rows(f.space(), f_place);
  place_rows(g.space(), g_place);
  return LinRel::from_basis(f.prime(), fd + gd, fc + gc, basis);
}

LinRel oplus(std::initializer_list<LinRel> parts) {
  if (parts.size() == 0) throw std::invalid_argument("oplus: empty list");
  auto it = parts.begin();
  LinRel acc = *it++;
  for (; it != parts.end(); ++it) acc = oplus(acc, *it);
  return acc;
}

bool equals(const LinRel& f, const LinRel& g) { return f == g; }

LinRel generator(GeneratorTag tag, Residue prime) {
  const numeric::PrimeField field(prime);
  switch (tag.kind) {
    case GeneratorKind::kAdd:
      return LinRel::from_basis(prime, 2, 1, {{1, 0, 1}, {0, 1, 1}});
    case GeneratorKind::kZero:
      return LinRel::from_basis(prime, 0, 1, {});
    case GeneratorKind::kCopy:
      return LinRel::from_basis(prime, 1, 2, {{1, 1, 1}});
    case GeneratorKind::kDelete:
      return LinRel::from_basis(prime, 1, 0, {{1}});
    case GeneratorKind::kMult:
      if (tag.param >= prime) throw std::invalid_argument("multiplier must lie in [0, p)");
      return LinRel::from_basis(prime, 1, 1, {{1, tag.param}});
    case GeneratorKind::kIdentity:
      return identity(prime, tag.param);
    case GeneratorKind::kSwap:
      return swap(prime, 1, 1);
  }
  throw std::invalid_argument("unknown generator");
}

LinRel resistor(Residue r, Residue prime) {
  const LinRel id = identity(prime, 1);
  const LinRel copy = generator({GeneratorKind::kCopy}, prime);
  const LinRel add = generator({GeneratorKind::kAdd}, prime);
  const LinRel mult = generator({GeneratorKind::kMult, r}, prime);
  return compose({oplus(copy, id), oplus({id, mult, id}), oplus(id, add)});
}

bool is_unitary_rel(const LinRel& f) {
  if (f.dom() != f.cod()) throw std::invalid_argument("not an endomorphism");
  const LinRel id = identity(f.prime(), f.dom());
  const LinRel fd = dagger(f);
  return compose(f, fd) == id && compose(fd, f) == id;
}

PairSet pairs_oracle(const LinRel& f) {
  const std::size_t n = f.dom() + f.cod();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= f.prime();
    if (total > kPairsOracleLimit) throw std::length_error("pairs_oracle: size bound exceeded");
  }
  const numeric::PrimeField field(f.prime());
  const auto& basis = f.space().basis();
  const std::size_t dim = basis.rows();
  PairSet out;
  std::vector<Residue> coeff(dim, 0);
  while (true) {
    Vector v(n, 0);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < n; ++c) v[c] = field.add(v[c], field.mul(coeff[r], basis(r, c)));
    }
    out.emplace_back(Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(f.dom())),
                     Vector(v.begin() + static_cast<std::ptrdiff_t>(f.dom()), v.end()));
    std::size_t i = 0;
    while (i < dim && ++coeff[i] == f.prime()) coeff[i++] = 0;
    if (i == dim) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kAdd:
      return "add";
    case GeneratorKind::kZero:
      return "zero";
    case GeneratorKind::kCopy:
      return "copy";
    case GeneratorKind::kDelete:
      return "delete";
    case GeneratorKind::kMult:
      return "mult";
    case GeneratorKind::kIdentity:
      return "identity";
    case GeneratorKind::kSwap:
      return "swap";
  }
  return "unknown";
}

}  // namespace oracle_forge::linrel
