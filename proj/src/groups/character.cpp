#include "oracle_forge/groups/character.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>

#include "oracle_forge/groups/abelian_factors.hpp"

namespace oracle_forge::groups {

CyclicCharacter CyclicCharacter::create(FiniteGroup group, std::size_t modulus,
                                        std::vector<std::size_t> exponents) {
  if (modulus == 0) throw std::invalid_argument("character modulus must be positive");
  if (exponents.size() != group.order()) {
    throw std::invalid_argument("character needs one exponent per group element");
  }
  for (auto& e : exponents) e %= modulus;
  if (exponents[0] != 0) throw std::invalid_argument("character must send identity to 1");
  const std::size_t n = group.order();
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (exponents[group.mul(g, h)] != (exponents[g] + exponents[h]) % modulus) {
        throw std::invalid_argument("exponents are not additive at (" + std::to_string(g) +
                                    ", " + std::to_string(h) + ")");
      }
    }
  }
  return CyclicCharacter(std::move(group), modulus, std::move(exponents));
}

CyclicCharacter CyclicCharacter::trivial(FiniteGroup group) {
  std::vector<std::size_t> e(group.order(), 0);
  return CyclicCharacter(std::move(group), 1, std::move(e));
}

std::complex<double> CyclicCharacter::value(Element g) const {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(exponents_[g]) /
                       static_cast<double>(modulus_);
  return std::polar(1.0, angle);
}

CyclicCharacter CyclicCharacter::conjugate() const {
  std::vector<std::size_t> e(exponents_.size());
  for (std::size_t g = 0; g < e.size(); ++g) e[g] = (modulus_ - exponents_[g]) % modulus_;
  return CyclicCharacter(group_, modulus_, std::move(e));
}

CyclicCharacter CyclicCharacter::reduced() const {
  std::size_t d = modulus_;
  for (std::size_t e : exponents_) d = std::gcd(d, e);
  std::vector<std::size_t> e(exponents_.size());
  for (std::size_t g = 0; g < e.size(); ++g) e[g] = exponents_[g] / d;
  return CyclicCharacter(group_, modulus_ / d, std::move(e));
}

CyclicCharacter CyclicCharacter::with_modulus(std::size_t m) const {
  const CyclicCharacter r = reduced();
  if (m == 0 || m % r.modulus_ != 0) {
    throw std::invalid_argument("character of order " + std::to_string(r.modulus_) +
                                " cannot be written mod " + std::to_string(m));
  }
  const std::size_t k = m / r.modulus_;
  std::vector<std::size_t> e(exponents_.size());
  for (std::size_t g = 0; g < e.size(); ++g) e[g] = r.exponents_[g] * k;
  return CyclicCharacter(group_, m, std::move(e));
}

bool CyclicCharacter::is_faithful() const {
  std::vector<char> seen(modulus_, 0);
  for (std::size_t e : exponents_) {
    if (seen[e]++) return false;
  }
  return true;
}

bool CyclicCharacter::is_trivial() const {
  for (std::size_t e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

bool operator==(const CyclicCharacter& a, const CyclicCharacter& b) {
  if (!(a.group_ == b.group_)) return false;
  const CyclicCharacter ra = a.reduced();
  const CyclicCharacter rb = b.reduced();
  return ra.modulus_ == rb.modulus_ && ra.exponents_ == rb.exponents_;
}

CyclicCharacter pullback(const CyclicCharacter& chi, const GroupHom& f) {
  if (!(f.codomain() == chi.group())) {
    throw std::invalid_argument("pullback: character is not on the homomorphism's codomain");
  }
  std::vector<std::size_t> e(f.domain().order());
  for (std::size_t g = 0; g < e.size(); ++g) e[g] = chi.exponent(f(g));
  return CyclicCharacter::create(f.domain(), chi.modulus(), std::move(e));
}

CyclicCharacter fundamental_character(std::size_t q) {
  if (prime_power_base(q) == 0) {
    throw std::invalid_argument("fundamental character needs a prime power, got " +
                                std::to_string(q));
  }
  std::vector<std::size_t> e(q);
  std::iota(e.begin(), e.end(), std::size_t{0});
  return CyclicCharacter::create(cyclic(q), q, std::move(e));
}

std::size_t orthogonality_sum(const CyclicCharacter& chi, const CyclicCharacter& psi) {
  if (!(chi.group() == psi.group())) {
    throw std::invalid_argument("orthogonality_sum: characters on different groups");
  }
  // The exponents of chi * conj(psi) form a homomorphism G -> Z_m whose image
  // is the subgroup of order k = m / gcd. Each value is hit |G|/k times, so the
  // sum is (|G|/k) * (sum of the k-th roots of unity).
  const std::size_t m = std::lcm(chi.modulus(), psi.modulus());
  const CyclicCharacter a = chi.with_modulus(m);
  const CyclicCharacter b = psi.with_modulus(m);
  const std::size_t n = chi.group().order();
  std::vector<std::size_t> counts(m, 0);
  for (std::size_t g = 0; g < n; ++g) ++counts[(a.exponent(g) + m - b.exponent(g)) % m];
  std::size_t step = m;
  for (std::size_t r = 0; r < m; ++r) {
    if (counts[r] != 0) step = std::gcd(step, r);
  }
  const std::size_t k = m / step;
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t expected = (r % step == 0) ? n / k : 0;
    if (counts[r] != expected) throw std::logic_error("orthogonality_sum: uneven fibres");
  }
  return k == 1 ? n : 0;
}

}  // namespace oracle_forge::groups
