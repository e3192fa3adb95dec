#ifndef ORACLE_FORGE_GROUPS_FINITE_GROUP_HPP
#define ORACLE_FORGE_GROUPS_FINITE_GROUP_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle_forge::groups {

using Element = std::size_t;
using Table = std::vector<std::vector<Element>>;

/// Raised when a multiplication table violates a group axiom.
class GroupAxiomError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A finite group given by its multiplication table. Element 0 is the
 * identity; row g of the table lists g*h for h = 0..n-1.
 *
 * Copies share the immutable table.
 */
class FiniteGroup {
 public:
  /// Validates the Latin-square property, the identity row/column and
  /// associativity (for n <= kAssociativityCheckLimit). Throws GroupAxiomError
  /// naming the first violation found.
  static FiniteGroup from_table(Table table, std::vector<std::string> labels = {});

  static constexpr std::size_t kAssociativityCheckLimit = 256;

  std::size_t order() const { return data_->table.size(); }
  static constexpr Element identity() { return 0; }
  Element mul(Element g, Element h) const { return data_->table[g][h]; }
  Element inverse(Element g) const { return data_->inverses[g]; }
  Element commutator(Element g, Element h) const;
  Element power(Element g, std::size_t k) const;
  std::size_t element_order(Element g) const { return data_->orders[g]; }
  /// lcm of element orders.
  std::size_t exponent() const;
  bool is_abelian() const;

  const Table& table() const { return data_->table; }
  /// Display label; falls back to the index.
  std::string label(Element g) const;
  const std::vector<std::string>& labels() const { return data_->labels; }

  /// Table equality (labels ignored).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_ || a.data_->table == b.data_->table;
  }

 private:
  struct Data {
    Table table;
    std::vector<Element> inverses;
    std::vector<std::size_t> orders;
    std::vector<std::string> labels;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

FiniteGroup cyclic(std::size_t n);
/// Elements (a, b) at index a * |h| + b, componentwise product.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Permutations of {0..n-1} in lexicographic order; (s*t)(i) = s(t(i)). n <= 5.
FiniteGroup symmetric(std::size_t n);
/// Symmetries of the n-gon, order 2n: r^k s^j at index k + n*j. 1 <= n <= 12.
FiniteGroup dihedral(std::size_t n);

/// Elements generated by `generators` (indicator vector).
std::vector<char> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& generators);

}  // namespace oracle_forge::groups

#endif  // ORACLE_FORGE_GROUPS_FINITE_GROUP_HPP
