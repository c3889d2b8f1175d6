#include "omega/expr.hpp"

#include <cctype>
#include <charconv>

namespace omega {

namespace {

enum class Tok { Ident, Int, LParen, RParen, Slash, Star, Caret, Minus, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += i + 1 == xs.size() ? " or " : ", ";
    out += xs[i];
  }
  return out;
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t c = 0; c < count; ++c, ++i) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, std::string(1, c), line, column};
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(src.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    switch (c) {
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '/': t.kind = Tok::Slash; break;
      case '*': t.kind = Tok::Star; break;
      case '^': t.kind = Tok::Caret; break;
      case '-': t.kind = Tok::Minus; break;
      case ',': t.kind = Tok::Comma; break;
      default:
        throw ParseError(line, column, {"variable", "integer", "operator"},
                         "'" + std::string(1, c) + "'");
    }
    out.push_back(t);
    advance(1);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }

  const Token& expect(Tok kind, std::string expected) {
    if (!at(kind)) fail({std::move(expected)});
    return tokens_[pos_++];
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected), describe(t));
  }

  [[noreturn]] void structure(const Token& at, const std::string& message) const {
    throw Error(ErrorCode::StructureError,
                "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) +
                    ": " + message +
                    "; supported factors are (1 - m*LAMBDA) and (1 - m/LAMBDA) for a "
                    "monomial m, with numerator 1 or LAMBDA^k");
  }

  int integer(const Token& t) const {
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{})
      throw ParseError(t.line, t.column, {"integer that fits in 32 bits"}, describe(t));
    return value;
  }

  // VAR [ "^" ["-"] INT ] { "*" VAR [ "^" ["-"] INT ] }
  std::vector<std::pair<Token, int>> power_product() {
    std::vector<std::pair<Token, int>> out;
    do {
      const Token& v = expect(Tok::Ident, "variable");
      int exp = 1;
      if (at(Tok::Caret)) {
        ++pos_;
        bool negative = false;
        if (at(Tok::Minus)) {
          ++pos_;
          negative = true;
        }
        exp = integer(expect(Tok::Int, "integer exponent"));
        if (negative) exp = -exp;
      }
      out.emplace_back(v, exp);
    } while (at(Tok::Star) && (++pos_, true));
    return out;
  }

  static Monomial to_monomial(const std::vector<std::pair<Token, int>>& powers) {
    std::vector<VarPower> fs;
    for (const auto& [tok, exp] : powers) fs.push_back({Var::intern(tok.text), exp});
    return Monomial(std::move(fs));
  }

  LambdaFactor factor(const std::string& lambda) {
    const Token& start = peek();
    const Token& one = expect(Tok::Int, "'1'");
    if (one.text != "1") {
      --pos_;
      fail({"'1'"});
    }
    expect(Tok::Minus, "'-'");
    auto powers = power_product();
    int lambda_exp = 0;
    std::vector<std::pair<Token, int>> rest;
    for (auto& p : powers) {
      if (p.first.text == lambda)
        lambda_exp += p.second;
      else
        rest.push_back(std::move(p));
    }
    if (at(Tok::Slash)) {
      ++pos_;
      const Token& d = expect(Tok::Ident, "'" + lambda + "'");
      if (d.text != lambda) structure(d, "division by '" + d.text + "' instead of '" + lambda + "'");
      lambda_exp -= 1;
    }
    if (lambda_exp != 1 && lambda_exp != -1)
      structure(start, "factor has " + lambda + "^" + std::to_string(lambda_exp));
    Monomial letter = to_monomial(rest);
    if (letter.is_one()) structure(start, "factor has no letter besides " + lambda);
    return {std::move(letter), lambda_exp};
  }

  std::vector<LambdaFactor> product(const std::string& lambda) {
    std::vector<LambdaFactor> out;
    do {
      expect(Tok::LParen, "'('");
      out.push_back(factor(lambda));
      expect(Tok::RParen, "')'");
    } while (at(Tok::Star) && (++pos_, true));
    return out;
  }

  OmegaExpression expression(std::optional<std::string_view> lambda_name) {
    const Token& head = expect(Tok::Ident, "'omega'");
    if (head.text != "omega") {
      --pos_;
      fail({"'omega'"});
    }
    expect(Tok::LParen, "'('");

    OmegaExpression e;
    std::string lambda(lambda_name.value_or("lambda"));
    if (at(Tok::Int)) {
      const Token& t = peek();
      if (t.text != "1") fail({"'1'", "variable"});
      ++pos_;
      e.k = 0;
    } else if (at(Tok::Ident)) {
      const Token& t = tokens_[pos_++];
      if (lambda_name && t.text != *lambda_name)
        structure(t, "numerator variable '" + t.text + "' is not '" + lambda + "'");
      lambda = t.text;
      e.k = 1;
      if (at(Tok::Caret)) {
        ++pos_;
        if (at(Tok::Minus)) structure(peek(), "negative power of " + lambda + " in numerator");
        e.k = integer(expect(Tok::Int, "integer exponent"));
      }
    } else {
      fail({"'1'", "variable"});
    }
    e.lambda = Var::intern(lambda);

    expect(Tok::Slash, "'/'");
    expect(Tok::LParen, "'('");
    if (at(Tok::LParen)) {
      e.factors = product(lambda);
      expect(Tok::RParen, "')'");
    } else {
      e.factors.push_back(factor(lambda));
      expect(Tok::RParen, "')'");
      // "(f1)*(f2)" without an enclosing pair of parentheses.
      if (at(Tok::Star)) {
        ++pos_;
        auto more = product(lambda);
        e.factors.insert(e.factors.end(), more.begin(), more.end());
      }
    }
    expect(Tok::RParen, "')'");
    expect(Tok::End, "end of input");
    return e;
  }

  std::vector<Monomial> letter_list() {
    std::vector<Monomial> out;
    if (at(Tok::End)) return out;
    do {
      out.push_back(to_monomial(power_product()));
    } while (at(Tok::Comma) && (++pos_, true));
    expect(Tok::End, "',' or end of input");
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string render_letter(const Monomial& m) {
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += f.var.name();
    if (f.exp != 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, std::string found)
    : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                       std::to_string(column) + ": expected " + join(expected) +
                                       ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

OmegaExpression parse_expression(std::string_view src,
                                 std::optional<std::string_view> lambda_name) {
  return Parser(src).expression(lambda_name);
}

Monomial parse_letter(std::string_view src) {
  auto letters = parse_letter_list(src);
  if (letters.size() != 1)
    throw Error(ErrorCode::ParseError, "expected exactly one letter in '" + std::string(src) + "'");
  return letters.front();
}

std::vector<Monomial> parse_letter_list(std::string_view src) {
  return Parser(src).letter_list();
}

std::string render_expression(const OmegaExpression& e) {
  const std::string& lambda = e.lambda.name();
  std::string out = "omega(";
  if (e.k == 0)
    out += "1";
  else if (e.k == 1)
    out += lambda;
  else
    out += lambda + "^" + std::to_string(e.k);
  out += " / ";
  std::string product;
  for (const auto& f : e.factors) {
    if (!product.empty()) product += '*';
    product += "(1-" + render_letter(f.letter) + (f.sign > 0 ? "*" : "/") + lambda + ")";
  }
  out += e.factors.size() == 1 ? product : "(" + product + ")";
  return out + ")";
}

OmegaProblem to_problem(const OmegaExpression& e) {
  std::vector<Monomial> xs, ys;
  for (const auto& f : e.factors) (f.sign > 0 ? xs : ys).push_back(f.letter);
  if (xs.empty())
    throw Error(ErrorCode::StructureError,
                "expression has no factor of the form (1 - x*" + e.lambda.name() + ")");
  return make_problem(e.k, Alphabet(std::move(xs)), Alphabet(std::move(ys)));
}

}  // namespace omega
