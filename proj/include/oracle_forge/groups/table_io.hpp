#ifndef ORACLE_FORGE_GROUPS_TABLE_IO_HPP
#define ORACLE_FORGE_GROUPS_TABLE_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "oracle_forge/groups/finite_group.hpp"

namespace oracle_forge::groups {

class TableParseError : public std::runtime_error {
 public:
  TableParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Plain-text table format:
//   # comment lines anywhere
//   n
//   n lines of n space-separated indices; row g lists g*h for h = 0..n-1
// Element 0 must be the identity. Axiom violations surface as
// GroupAxiomError after a syntactically valid parse.
FiniteGroup parse_group_table(std::istream& in);
FiniteGroup parse_group_table(const std::string& text);
FiniteGroup load_group_table(const std::string& path);
std::string format_group_table(const FiniteGroup& g);

}  // namespace oracle_forge::groups

#endif  // ORACLE_FORGE_GROUPS_TABLE_IO_HPP
