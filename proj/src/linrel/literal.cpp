#include "oracle_forge/linrel/literal.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace oracle_forge::linrel {

RelationParseError::RelationParseError(std::string token, std::size_t offset, const std::string& what)
    : std::invalid_argument("relation literal: " + what + " at offset " + std::to_string(offset) +
                            " (token '" + token + "')"),
      token_(std::move(token)),
      offset_(offset) {}

namespace {

struct Token {
  enum Kind { kWord, kNumber, kSymbol, kEnd } kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::kWord, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isdigit(c) || c == '-') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::kNumber, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (c == '=' || c == '[' || c == ']' || c == ',') {
      out.push_back({Token::kSymbol, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw RelationParseError(std::string(1, static_cast<char>(c)), i, "unexpected character");
    }
  }
  out.push_back({Token::kEnd, "<end>", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  void expect(const char* symbol) {
    const Token& t = next();
    if (t.kind != Token::kSymbol || t.text != symbol) {
      throw RelationParseError(t.text, t.offset, std::string("expected '") + symbol + "'");
    }
  }

  std::uint64_t number() {
    const Token& t = next();
    std::uint64_t value = 0;
    if (t.kind != Token::kNumber) throw RelationParseError(t.text, t.offset, "expected a number");
    const auto* end = t.text.data() + t.text.size();
    const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw RelationParseError(t.text, t.offset, "expected a nonnegative integer");
    }
    last_ = &t;
    return value;
  }

  const Token& last() const { return *last_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Token* last_ = nullptr;
};

struct RawRow {
  std::vector<std::uint64_t> values;
  std::vector<const Token*> tokens;
  const Token* open;
};

}  // namespace

LinRel parse_relation(std::string_view text) {
  Parser parser(tokenize(text));
  std::optional<std::uint64_t> p, dom, cod;
  std::optional<std::vector<RawRow>> rows;
  const Token* basis_token = nullptr;

  while (parser.peek().kind != Token::kEnd) {
    const Token& key = parser.next();
    if (key.kind != Token::kWord) throw RelationParseError(key.text, key.offset, "expected a key");
    parser.expect("=");
    auto scalar = [&](std::optional<std::uint64_t>& slot) {
      if (slot) throw RelationParseError(key.text, key.offset, "duplicate key");
      slot = parser.number();
    };
    if (key.text == "p") {
      scalar(p);
      if (!numeric::is_prime(*p) || *p > numeric::kMaxPrime) {
        throw RelationParseError(parser.last().text, parser.last().offset, "p must be a prime <= 97");
      }
    } else if (key.text == "dom") {
      scalar(dom);
    } else if (key.text == "cod") {
      scalar(cod);
    } else if (key.text == "basis") {
      if (rows) throw RelationParseError(key.text, key.offset, "duplicate key");
      basis_token = &key;
      rows.emplace();
      parser.expect("[");
      if (!(parser.peek().kind == Token::kSymbol && parser.peek().text == "]")) {
        while (true) {
          RawRow row;
          row.open = &parser.peek();
          parser.expect("[");
          while (true) {
            row.values.push_back(parser.number());
            row.tokens.push_back(&parser.last());
            const Token& sep = parser.next();
            if (sep.kind == Token::kSymbol && sep.text == "]") break;
            if (sep.kind != Token::kSymbol || sep.text != ",") {
              throw RelationParseError(sep.text, sep.offset, "expected ',' or ']'");
            }
          }
          rows->push_back(std::move(row));
          const Token& sep = parser.next();
          if (sep.kind == Token::kSymbol && sep.text == "]") break;
          if (sep.kind != Token::kSymbol || sep.text != ",") {
            throw RelationParseError(sep.text, sep.offset, "expected ',' or ']'");
          }
        }
      } else {
        parser.next();
      }
    } else {
      throw RelationParseError(key.text, key.offset, "unknown key");
    }
  }

  const std::size_t end = text.size();
  if (!p) throw RelationParseError("<end>", end, "missing key 'p'");
  if (!dom) throw RelationParseError("<end>", end, "missing key 'dom'");
  if (!cod) throw RelationParseError("<end>", end, "missing key 'cod'");
  if (!rows) throw RelationParseError("<end>", end, "missing key 'basis'");
  if (*dom + *cod > 64) throw RelationParseError(basis_token->text, basis_token->offset, "dom+cod too large");

  const auto prime = static_cast<Residue>(*p);
  std::vector<Vector> basis;
  for (const RawRow& row : *rows) {
    if (row.values.size() != *dom + *cod) {
      throw RelationParseError(row.open->text, row.open->offset, "row length must equal dom+cod");
    }
    Vector v;
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      if (row.values[i] >= prime) {
        throw RelationParseError(row.tokens[i]->text, row.tokens[i]->offset, "entry must lie in [0, p)");
      }
      v.push_back(static_cast<Residue>(row.values[i]));
    }
    basis.push_back(std::move(v));
  }
  return LinRel::from_basis(prime, *dom, *cod, basis);
}

std::string format_relation(const LinRel& f) {
  std::ostringstream out;
  out << "p=" << f.prime() << " dom=" << f.dom() << " cod=" << f.cod() << " basis=[";
  const auto& basis = f.space().basis();
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    if (r) out << ',';
    out << '[';
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      if (c) out << ',';
      out << basis(r, c);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace oracle_forge::linrel
