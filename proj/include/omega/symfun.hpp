#ifndef OMEGA_SYMFUN_HPP
#define OMEGA_SYMFUN_HPP

// Symmetric functions over finite alphabets of monomials: complete and
// elementary functions, Schur functions (Jacobi-Trudi and bialternant), the
// isobaric symmetrizer pi_omega, the Lagrange operator and the Cauchy kernel.

#include <compare>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "omega/algebra.hpp"

namespace omega {

// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  // Part i (0-based), zero beyond the length.
  int operator[](int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  // Parts padded with zeros to the given length.
  std::vector<int> padded(int length) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Arbitrary integer index for a generalized Schur determinant.
using IntVector = std::vector<int>;

Partition conjugate(const Partition& mu);

// Partitions with at most max_length parts, each at most max_part, ordered by
// weight and lexicographically within a weight.
std::vector<Partition> partitions_in_box(int max_length, int max_part);

// Partitions of exactly `weight`, at most max_length parts, same ordering.
std::vector<Partition> partitions_of(int weight, int max_length);

// Ordered list of monomial letters. Repetitions and the constant letter 1
// are allowed; `+` concatenates.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Monomial> letters) : letters_(std::move(letters)) {}

  static Alphabet of_variables(std::initializer_list<std::string_view> names);
  static Alphabet of_variables(std::span<const Var> vars);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Monomial& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Monomial>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // The generators as variables if every letter is a plain, pairwise
  // distinct variable.
  std::optional<std::vector<Var>> as_distinct_variables() const;
  bool has_repeats() const;

  friend Alphabet operator+(const Alphabet& a, const Alphabet& b);
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Monomial> letters_;
};

// Coefficient of t^j in prod 1/(1 - a t); zero for j < 0.
Polynomial complete_h(int j, const Alphabet& a);
// [S^0, ..., S^max_j] computed together.
std::vector<Polynomial> complete_h_table(int max_j, const Alphabet& a);

Polynomial elementary_e(int i, const Alphabet& a);

// det(S^(v_i - i + j)) of size v.size(), for any integer vector and any
// alphabet size.
Polynomial jacobi_trudi(std::span<const int> v, const Alphabet& a);

// Jacobi-Trudi determinant of size |A|; throws LengthMismatch otherwise.
Polynomial schur_jt(std::span<const int> v, const Alphabet& a);
inline Polynomial schur_jt(const IntVector& v, const Alphabet& a) {
  return schur_jt(std::span<const int>(v), a);
}

// S_mu(A) through Jacobi-Trudi; partitions longer than |A| give the larger
// determinant, which vanishes.
Polynomial schur(const Partition& mu, const Alphabet& a);

// det(a_i^(mu_j + n - j)) / vandermonde(A).
Polynomial schur_bialternant(const Partition& mu, const Alphabet& a);

// prod_{i<j} (a_i - a_j).
Polynomial vandermonde(const Alphabet& a);

// sum over permutations sigma of sigma(f * x1^(n-1) ... xn^0 / vandermonde).
// Requires distinct variable generators and every exponent of x_i (1-based)
// strictly above i - n - 1.
Polynomial pi_omega(const Polynomial& f, const Alphabet& a);

// sum over x in A of f(x, A\x) / prod_{x' != x} (x - x'). f must be symmetric
// in the last n-1 generators.
FactoredRational lagrange_op(const Polynomial& f, const Alphabet& a);

// prod_{a, b} (1 - a b), expanded.
Polynomial cauchy_kernel(const Alphabet& a, const Alphabet& b);

// Applies the variable permutation x_i -> x_{perm[i]} to p.
Polynomial permute(const Polynomial& p, std::span<const Var> vars, std::span<const int> perm);

}  // namespace omega

#endif  // OMEGA_SYMFUN_HPP
