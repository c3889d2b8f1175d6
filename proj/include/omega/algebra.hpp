#ifndef OMEGA_ALGEBRA_HPP
#define OMEGA_ALGEBRA_HPP

// Exact sparse Laurent polynomials with arbitrary-precision integer
// coefficients over a process-wide registry of named variables.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/error.hpp"

namespace omega {

using Integer = mpz_class;

// Handle to an interned variable name. Variables compare by registration
// order: the first variable ever interned is the most significant one in
// the graded-lex term order.
class Var {
 public:
  static Var intern(std::string_view name);
  static std::optional<Var> find(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const noexcept { return id_; }

  friend bool operator==(Var, Var) = default;
  friend auto operator<=>(Var, Var) = default;

 private:
  explicit Var(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

struct VarPower {
  Var var;
  int exp;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

// A Laurent monomial. Factors are kept sorted by variable and never carry a
// zero exponent, so equal monomials are structurally equal.
class Monomial {
 public:
  Monomial() = default;
  Monomial(Var v, int exp);
  explicit Monomial(std::vector<VarPower> factors);

  static Monomial variable(std::string_view name, int exp = 1) {
    return Monomial(Var::intern(name), exp);
  }

  std::span<const VarPower> factors() const noexcept { return factors_; }
  int exponent(Var v) const noexcept;
  int total_degree() const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }
  // True for x^1 with a single variable x.
  std::optional<Var> as_variable() const noexcept;
  // True when no exponent is negative.
  bool is_polynomial() const noexcept;

  Monomial inverse() const;
  Monomial pow(int e) const;
  Monomial without(Var v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const noexcept;

 private:
  std::vector<VarPower> factors_;
};

// Graded lexicographic comparison: total degree first, then exponents in
// variable registration order.
std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return graded_lex(a, b) > 0;
  }
};

struct Term {
  Monomial mono;
  Integer coeff;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c);  // NOLINT(google-explicit-constructor)
  Polynomial(Monomial m, Integer c = 1);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::string_view name, int exp = 1) {
    return Polynomial(Monomial::variable(name, exp));
  }
  // Builds a polynomial from arbitrary terms; duplicates are merged.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Terms in descending graded-lex order.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }
  Integer coefficient(const Monomial& m) const;
  std::optional<Integer> as_constant() const;
  // Single term with coefficient +1 or -1.
  bool is_unit() const;
  int min_degree() const;
  int max_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  // Keeps only terms of total degree <= max_degree.
  Polynomial truncated(int max_degree) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
// Product with every term of total degree above max_degree discarded.
Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int max_degree);

// Quotient q with q*b == a in the Laurent ring. Throws NotDivisible or
// DivisionByZero.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Exact determinant by Laplace expansion memoized over column subsets.
Polynomial det(const PolyMatrix& m);

using Bindings = std::map<Var, Polynomial>;

// Simultaneous substitution. A variable occurring with a negative exponent
// may only be bound to a unit monomial.
Polynomial substitute(const Polynomial& p, const Bindings& bindings);

// Renames variables simultaneously; every target must be a distinct variable
// so no coefficients merge except through genuine collisions.
Polynomial rename(const Polynomial& p, const std::map<Var, Var>& mapping);

// Entry i is the coefficient of v^(lo+i), free of v.
std::vector<Polynomial> laurent_coefficients(const Polynomial& p, Var v, int lo,
                                             int hi);

// numerator / prod(factor^multiplicity). Identical factors are merged on
// construction; the zero polynomial is rejected as a factor.
class FactoredRational {
 public:
  struct Factor {
    Polynomial poly;
    int multiplicity = 1;
  };

  FactoredRational() = default;
  FactoredRational(Polynomial numerator,  // NOLINT(google-explicit-constructor)
                   std::vector<Factor> factors = {});

  const Polynomial& numerator() const noexcept { return numerator_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_polynomial() const noexcept { return factors_.empty(); }
  Polynomial denominator() const;

  // Removes factor occurrences that divide the numerator exactly. No
  // factorization is attempted.
  FactoredRational cancelled() const;

 private:
  Polynomial numerator_;
  std::vector<Factor> factors_;
};

// a.num * (b's factors not shared with a) and b.num * (a's factors not shared
// with b); equal exactly when a == b as rational functions.
std::pair<Polynomial, Polynomial> cross_multiply(const FactoredRational& a,
                                                 const FactoredRational& b);
bool rational_equal(const FactoredRational& a, const FactoredRational& b);

// Power-series expansion up to total degree max_degree. Every denominator
// factor needs constant term +1 or -1 and no other term of degree <= 0.
Polynomial series_expand(const FactoredRational& r, int max_degree);

}  // namespace omega

#endif  // OMEGA_ALGEBRA_HPP
