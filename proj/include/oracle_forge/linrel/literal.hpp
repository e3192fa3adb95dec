#ifndef ORACLE_FORGE_LINREL_LITERAL_HPP
#define ORACLE_FORGE_LINREL_LITERAL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "oracle_forge/linrel/linrel.hpp"

namespace oracle_forge::linrel {

class RelationParseError : public std::invalid_argument {
 public:
  RelationParseError(std::string token, std::size_t offset, const std::string& what);
  const std::string& token() const { return token_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string token_;
  std::size_t offset_;
};

/// Parses `p=5 dom=2 cod=2 basis=[[1,0,1,3],[0,1,0,1]]`. Keys may come in
/// any order; whitespace is ignored between tokens.
LinRel parse_relation(std::string_view text);

/// Canonical literal: canonical basis rows, least nonnegative residues.
std::string format_relation(const LinRel& f);

}  // namespace oracle_forge::linrel

#endif  // ORACLE_FORGE_LINREL_LITERAL_HPP
