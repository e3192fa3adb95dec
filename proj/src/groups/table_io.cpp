#include "oracle_forge/groups/table_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace oracle_forge::groups {

TableParseError::TableParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::size_t value;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& text, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    std::size_t value = 0;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw TableParseError(line_no, i + 1,
                              std::string("expected a non-negative integer, found '") + text[i] +
                                  "'");
      }
      value = value * 10 + static_cast<std::size_t>(text[i] - '0');
      if (value > (std::size_t{1} << 24)) throw TableParseError(line_no, start + 1, "too large");
      ++i;
    }
    out.push_back({value, start + 1});
  }
  return out;
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

FiniteGroup parse_group_table(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_order = false;
  Table table;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = tokenize(line, line_no);
    if (!have_order) {
      if (tokens.size() != 1) {
        throw TableParseError(line_no, tokens.size() > 1 ? tokens[1].column : 1,
                              "first line must hold only the group order");
      }
      n = tokens[0].value;
      if (n == 0) throw TableParseError(line_no, tokens[0].column, "group order must be positive");
      have_order = true;
      continue;
    }
    if (table.size() == n) throw TableParseError(line_no, 1, "more rows than the group order");
    if (tokens.size() != n) {
      const std::size_t col = tokens.size() > n ? tokens[n].column : line.size() + 1;
      throw TableParseError(line_no, col,
                            "expected " + std::to_string(n) + " entries, found " +
                                std::to_string(tokens.size()));
    }
    std::vector<Element> row;
    for (const auto& t : tokens) {
      if (t.value >= n) {
        throw TableParseError(line_no, t.column,
                              "entry " + std::to_string(t.value) + " is not below " +
                                  std::to_string(n));
      }
      row.push_back(t.value);
    }
    table.push_back(std::move(row));
  }
  if (!have_order) throw TableParseError(line_no + 1, 1, "missing group order");
  if (table.size() != n) {
    throw TableParseError(line_no + 1, 1,
                          "expected " + std::to_string(n) + " rows, found " +
                              std::to_string(table.size()));
  }
  return FiniteGroup::from_table(std::move(table));
}

FiniteGroup parse_group_table(const std::string& text) {
  std::istringstream in(text);
  return parse_group_table(in);
}

FiniteGroup load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group table file '" + path + "'");
  return parse_group_table(in);
}

std::string format_group_table(const FiniteGroup& g) {
  std::ostringstream os;
  os << g.order() << "\n";
  for (const auto& row : g.table()) {
    for (std::size_t h = 0; h < row.size(); ++h) os << (h ? " " : "") << row[h];
    os << "\n";
  }
  return os.str();
}

}  // namespace oracle_forge::groups
