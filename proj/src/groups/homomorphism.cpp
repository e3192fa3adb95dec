#include "oracle_forge/groups/homomorphism.hpp"

#include <stdexcept>

namespace oracle_forge::groups {

std::optional<std::pair<Element, Element>> GroupHom::first_violation(
    const FiniteGroup& domain, const FiniteGroup& codomain, const std::vector<Element>& images) {
  const std::size_t n = domain.order();
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (images[domain.mul(g, h)] != codomain.mul(images[g], images[h])) {
        return std::make_pair(g, h);
      }
    }
  }
  return std::nullopt;
}

GroupHom GroupHom::create(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> images) {
  if (images.size() != domain.order()) {
    throw std::invalid_argument("homomorphism needs " + std::to_string(domain.order()) +
                                " images, got " + std::to_string(images.size()));
  }
  for (Element x : images) {
    if (x >= codomain.order()) {
      throw std::invalid_argument("image " + std::to_string(x) + " outside codomain");
    }
  }
  if (images[0] != 0) throw std::invalid_argument("identity must map to identity");
  if (auto bad = first_violation(domain, codomain, images)) {
    throw std::invalid_argument("not a homomorphism: f(" + std::to_string(bad->first) + "*" +
                                std::to_string(bad->second) + ") != f(" +
                                std::to_string(bad->first) + ")*f(" +
                                std::to_string(bad->second) + ")");
  }
  return GroupHom(std::move(domain), std::move(codomain), std::move(images));
}

GroupHom GroupHom::trivial(FiniteGroup domain, FiniteGroup codomain) {
  std::vector<Element> images(domain.order(), 0);
  return GroupHom(std::move(domain), std::move(codomain), std::move(images));
}

GroupHom GroupHom::identity(FiniteGroup g) {
  std::vector<Element> images(g.order());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return GroupHom(g, g, std::move(images));
}

GroupHom compose(const GroupHom& first, const GroupHom& second) {
  if (!(first.codomain() == second.domain())) {
    throw std::invalid_argument("compose: codomain/domain mismatch");
  }
  std::vector<Element> images(first.domain().order());
  for (std::size_t g = 0; g < images.size(); ++g) images[g] = second(first(g));
  return GroupHom::create(first.domain(), second.codomain(), std::move(images));
}

}  // namespace oracle_forge::groups
