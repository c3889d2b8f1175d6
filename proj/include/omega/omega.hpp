#ifndef OMEGA_OMEGA_HPP
#define OMEGA_OMEGA_HPP

// Elimination of one Omega variable from
//
//     lambda^k / prod_{x in X} (1 - x lambda) prod_{y in Y} (1 - y / lambda)
//
// by three independent routes: a truncated series, the Schur-function closed
// form with denominator R(1, X(1+Y)), and Lagrange interpolation.

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/algebra.hpp"
#include "omega/symfun.hpp"

namespace omega {

struct OmegaProblem {
  int k = 0;
  Alphabet x;
  Alphabet y;
  // Letters of x appended by zero_pad; they are specialized to 0 by
  // specialize_padding.
  std::vector<Var> padding;

  int n() const noexcept { return static_cast<int>(x.size()); }
  int m() const noexcept { return static_cast<int>(y.size()); }
};

// Checks n >= 1 and k >= 0.
OmegaProblem make_problem(int k, Alphabet x, Alphabet y);

enum class Method { series, schur, lagrange };

std::string_view to_string(Method m) noexcept;
std::optional<Method> method_from_string(std::string_view s) noexcept;

struct OmegaResult {
  FactoredRational value;
  Method method = Method::schur;
  // Total-degree cutoff in the letters; series only.
  std::optional<int> truncation;
};

// sum over i, j >= 0 with i - j + k >= 0 and i + j <= D of S^i(X) S^j(Y).
OmegaResult omega_series_oracle(const OmegaProblem& p, int max_degree);

// Schur closed form; requires k < n.
OmegaResult omega_closed_form(const OmegaProblem& p);

// Lagrange-interpolation form; requires k < n and pairwise distinct X letters.
OmegaResult omega_lagrange(const OmegaProblem& p);

// Partitions indexing the nonzero terms of the closed-form numerator:
// length <= n - 1 and first part <= m + 1.
std::vector<Partition> closed_form_index_set(const OmegaProblem& p);

// (-1)^|mu| S_mu'(1 + Y) S_{-k, mu}(X). Defined for any partition; the
// determinants grow with the partition's length so out-of-range terms are
// genuinely evaluated.
Polynomial closed_form_term(const OmegaProblem& p, const Partition& mu);

// Appends r fresh letters to X.
OmegaProblem zero_pad(const OmegaProblem& p, int r);

// Sets the padding letters of `padded` to 0 in a result computed on it.
OmegaResult specialize_padding(const OmegaResult& r, const OmegaProblem& padded);

// Runs one method and specializes any padding.
OmegaResult evaluate(const OmegaProblem& p, Method method, int max_degree = 8);

struct Disagreement {
  std::string comparison;  // "schur/lagrange" or "schur/series"
  Polynomial monomial;     // in the problem's letters
  Integer left;
  Integer right;
};

struct CrossCheckReport {
  int k = 0;
  int n = 0;
  int m = 0;
  int truncation = 0;
  bool schur_vs_lagrange = false;
  bool schur_vs_series = false;
  std::size_t schur_terms = 0;
  std::size_t lagrange_terms = 0;
  std::size_t series_terms = 0;
  std::chrono::duration<double, std::milli> schur_time{};
  std::chrono::duration<double, std::milli> lagrange_time{};
  std::chrono::duration<double, std::milli> series_time{};
  std::optional<Disagreement> first_disagreement;

  bool passed() const noexcept { return schur_vs_lagrange && schur_vs_series; }
};

struct CrossCheckOptions {
  // Negative control: adds 1 to the closed-form numerator before comparing.
  bool corrupt_numerator = false;
};

// Runs all three methods and compares them; never throws on disagreement.
CrossCheckReport cross_check_report(const OmegaProblem& p, int max_degree,
                                    const CrossCheckOptions& options = {});

class MethodDisagreementError : public Error {
 public:
  explicit MethodDisagreementError(CrossCheckReport report);
  const CrossCheckReport& report() const noexcept { return report_; }

 private:
  CrossCheckReport report_;
};

// As cross_check_report, but throws MethodDisagreementError on any mismatch.
CrossCheckReport cross_check(const OmegaProblem& p, int max_degree,
                             const CrossCheckOptions& options = {});

}  // namespace omega

#endif  // OMEGA_OMEGA_HPP
