#ifndef ORACLE_FORGE_GROUPS_HOMOMORPHISM_HPP
#define ORACLE_FORGE_GROUPS_HOMOMORPHISM_HPP

#include <optional>
#include <string>
#include <vector>

#include "oracle_forge/groups/finite_group.hpp"

namespace oracle_forge::groups {

/// A validated group homomorphism domain -> codomain.
class GroupHom {
 public:
  /// Throws std::invalid_argument if `images` is not a homomorphism.
  static GroupHom create(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> images);
  static GroupHom trivial(FiniteGroup domain, FiniteGroup codomain);
  static GroupHom identity(FiniteGroup g);

  /// First pair (g, h) with f(gh) != f(g) f(h), if any.
  static std::optional<std::pair<Element, Element>> first_violation(
      const FiniteGroup& domain, const FiniteGroup& codomain, const std::vector<Element>& images);

  const FiniteGroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  const std::vector<Element>& images() const { return images_; }
  Element operator()(Element g) const { return images_[g]; }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.images_ == b.images_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_;
  }

 private:
  GroupHom(FiniteGroup d, FiniteGroup c, std::vector<Element> images)
      : domain_(std::move(d)), codomain_(std::move(c)), images_(std::move(images)) {}
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Element> images_;
};

/// g then f.
GroupHom compose(const GroupHom& first, const GroupHom& second);

}  // namespace oracle_forge::groups

#endif  // ORACLE_FORGE_GROUPS_HOMOMORPHISM_HPP
