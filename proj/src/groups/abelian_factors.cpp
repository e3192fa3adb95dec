#include "oracle_forge/groups/abelian_factors.hpp"

#include <stdexcept>

namespace oracle_forge::groups {

std::size_t prime_power_base(std::size_t q) {
  if (q < 2) return 0;
  std::size_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1 ? p : 0;
}

namespace {

FiniteGroup product_of_cyclics(const std::vector<std::size_t>& factors) {
  FiniteGroup acc = cyclic(1);
  bool first = true;
  for (std::size_t q : factors) {
    acc = first ? cyclic(q) : direct_product(acc, cyclic(q));
    first = false;
  }
  return acc;
}

}  // namespace

AbelianFactors::AbelianFactors(std::vector<std::size_t> factors)
    : factors_(std::move(factors)), group_(product_of_cyclics(factors_)) {
  for (std::size_t q : factors_) {
    if (q == 1) throw std::invalid_argument("abelian factor of order 1 is not allowed");
    if (prime_power_base(q) == 0) {
      throw std::invalid_argument("abelian factor " + std::to_string(q) +
                                  " is not a prime power");
    }
    order_ *= q;
  }
  if (!group_.is_abelian()) throw std::logic_error("product of cyclic groups is not abelian");
}

std::vector<std::size_t> AbelianFactors::components(Element a) const {
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    out[i] = a % factors_[i];
    a /= factors_[i];
  }
  return out;
}

Element AbelianFactors::compose(const std::vector<std::size_t>& components) const {
  if (components.size() != factors_.size()) {
    throw std::invalid_argument("component count does not match factor count");
  }
  Element a = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (components[i] >= factors_[i]) {
      throw std::invalid_argument("component " + std::to_string(components[i]) +
                                  " out of range for factor Z" + std::to_string(factors_[i]));
    }
    a = a * factors_[i] + components[i];
  }
  return a;
}

std::size_t AbelianFactors::project(Element a, std::size_t factor) const {
  return components(a).at(factor);
}

std::string AbelianFactors::str() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    s += (i ? "x" : "") + std::string("Z") + std::to_string(factors_[i]);
  }
  return s.empty() ? "Z1" : s;
}

}  // namespace oracle_forge::groups
