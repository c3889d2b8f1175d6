#ifndef OMEGA_EXPR_HPP
#define OMEGA_EXPR_HPP

// Concrete syntax for Omega problems:
//
//   expr   := "omega" "(" num "/" denom ")"
//   num    := "1" | LVAR [ "^" INT ]
//   denom  := product | "(" product ")"
//   product:= "(" factor ")" { "*" "(" factor ")" }
//   factor := "1" "-" letter                    (letter contains LVAR or LVAR^-1)
//           | "1" "-" letter "/" LVAR
//   letter := VAR [ "^" ["-"] INT ] { "*" VAR [ "^" ["-"] INT ] }
//
// LVAR is the distinguished variable: the numerator's variable if it has
// one, otherwise the configured name ("lambda" by default).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/algebra.hpp"
#include "omega/omega.hpp"

namespace omega {

struct LambdaFactor {
  Monomial letter;
  // +1 for 1 - letter*lambda, -1 for 1 - letter/lambda.
  int sign = 1;
  friend bool operator==(const LambdaFactor&, const LambdaFactor&) = default;
};

struct OmegaExpression {
  int k = 0;
  Var lambda = Var::intern("lambda");
  std::vector<LambdaFactor> factors;
  friend bool operator==(const OmegaExpression&, const OmegaExpression&) = default;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, std::string found);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

OmegaExpression parse_expression(std::string_view src,
                                 std::optional<std::string_view> lambda_name = std::nullopt);

// One letter such as "q^2*t"; the whole input must be consumed.
Monomial parse_letter(std::string_view src);

// Comma-separated letters; an empty or blank string gives no letters.
std::vector<Monomial> parse_letter_list(std::string_view src);

std::string render_expression(const OmegaExpression& e);

// Throws StructureError when there is no (1 - x*lambda) factor.
OmegaProblem to_problem(const OmegaExpression& e);

}  // namespace omega

#endif  // OMEGA_EXPR_HPP
