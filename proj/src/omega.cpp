#include "omega/omega.hpp"

#include <set>

namespace omega {

namespace {

using Clock = std::chrono::steady_clock;

// The problem rewritten over fresh distinct variables when its letters are
// not already distinct variables, with the substitution that maps back.
struct Formal {
  OmegaProblem problem;
  Bindings back;
};

Formal formalize(const OmegaProblem& p) {
  if ((p.x + p.y).as_distinct_variables()) return {p, {}};
  Formal f;
  f.problem.k = p.k;
  std::vector<Monomial> xs, ys;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    Var v = Var::intern("#x" + std::to_string(i + 1));
    xs.emplace_back(v, 1);
    f.back.emplace(v, Polynomial(p.x[i]));
  }
  for (std::size_t j = 0; j < p.y.size(); ++j) {
    Var v = Var::intern("#y" + std::to_string(j + 1));
    ys.emplace_back(v, 1);
    f.back.emplace(v, Polynomial(p.y[j]));
  }
  f.problem.x = Alphabet(std::move(xs));
  f.problem.y = Alphabet(std::move(ys));
  return f;
}

FactoredRational substitute(const FactoredRational& r, const Bindings& b) {
  if (b.empty()) return r;
  std::vector<FactoredRational::Factor> factors;
  for (const auto& f : r.factors()) factors.push_back({omega::substitute(f.poly, b), f.multiplicity});
  return FactoredRational(omega::substitute(r.numerator(), b), std::move(factors));
}

// R(1, X(1+Y)), ordered (1 - x_i) first, then (1 - x_i y_j) by j.
std::vector<FactoredRational::Factor> closed_form_denominator(const OmegaProblem& p) {
  std::vector<FactoredRational::Factor> factors;
  Alphabet b = Alphabet({Monomial{}}) + p.y;
  for (const auto& yb : b)
    for (const auto& x : p.x) factors.push_back({Polynomial(1) - Polynomial(x * yb), 1});
  return factors;
}

void require_k_below_n(const OmegaProblem& p, std::string_view op) {
  if (p.k >= p.n())
    throw Error(ErrorCode::KTooLarge,
                std::string(op) + ": requires k < n (k = " + std::to_string(p.k) +
                    ", n = " + std::to_string(p.n()) + "); zero-pad X first");
}

}  // namespace

OmegaProblem make_problem(int k, Alphabet x, Alphabet y) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "omega problem: k must be >= 0");
  if (x.empty())
    throw Error(ErrorCode::InvalidArgument, "omega problem: X needs at least one letter");
  return OmegaProblem{k, std::move(x), std::move(y), {}};
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::series: return "series";
    case Method::schur: return "schur";
    case Method::lagrange: return "lagrange";
  }
  return "?";
}

std::optional<Method> method_from_string(std::string_view s) noexcept {
  if (s == "series") return Method::series;
  if (s == "schur") return Method::schur;
  if (s == "lagrange") return Method::lagrange;
  return std::nullopt;
}

OmegaResult omega_series_oracle(const OmegaProblem& p, int max_degree) {
  if (max_degree < 0)
    throw Error(ErrorCode::InvalidArgument, "omega_series_oracle: truncation must be >= 0");
  Formal f = formalize(p);
  auto hx = complete_h_table(max_degree, f.problem.x);
  auto hy = complete_h_table(max_degree, f.problem.y);
  Polynomial sum;
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree && j <= i + p.k; ++j)
      sum += hx[static_cast<std::size_t>(i)] * hy[static_cast<std::size_t>(j)];
  return {FactoredRational(omega::substitute(sum, f.back)), Method::series, max_degree};
}

std::vector<Partition> closed_form_index_set(const OmegaProblem& p) {
  return partitions_in_box(p.n() - 1, p.m() + 1);
}

Polynomial closed_form_term(const OmegaProblem& p, const Partition& mu) {
  Alphabet b = Alphabet({Monomial{}}) + p.y;
  Polynomial over_b = schur(conjugate(mu), b);
  if (over_b.is_zero()) return {};
  std::vector<int> v{-p.k};
  for (int part : mu.padded(std::max(p.n() - 1, mu.length()))) v.push_back(part);
  Polynomial over_x = jacobi_trudi(v, p.x);
  Polynomial term = over_b * over_x;
  return mu.weight() % 2 ? -term : term;
}

OmegaResult omega_closed_form(const OmegaProblem& p) {
  require_k_below_n(p, "omega_closed_form");
  Formal f = formalize(p);
  Polynomial numerator;
  for (const auto& mu : closed_form_index_set(f.problem))
    numerator += closed_form_term(f.problem, mu);
  FactoredRational value(std::move(numerator), closed_form_denominator(f.problem));
  return {substitute(value, f.back), Method::schur, std::nullopt};
}

OmegaResult omega_lagrange(const OmegaProblem& p) {
  require_k_below_n(p, "omega_lagrange");
  if (p.x.has_repeats())
    throw Error(ErrorCode::RepeatedGenerators,
                "omega_lagrange: X has repeated letters; interpolation would need derivatives");
  Formal f = formalize(p);
  const Alphabet& xs = f.problem.x;
  const std::size_t n = xs.size();

  // Per-letter denominators (1 - x_l) B(x_l) with B(t) = prod (1 - y t).
  std::vector<Polynomial> local(n);
  for (std::size_t l = 0; l < n; ++l) {
    Polynomial x(xs[l]);
    Polynomial d = Polynomial(1) - x;
    for (const auto& y : f.problem.y) d *= Polynomial(1) - x * Polynomial(y);
    local[l] = std::move(d);
  }
  // Over the common denominator prod_l local[l] * vandermonde(X), term i
  // contributes (-1)^i x_i^(n-1-k) prod_{l != i} local[l] vandermonde(X \ x_i).
  Polynomial numerator;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial term(xs[i].pow(static_cast<int>(n) - 1 - p.k));
    std::vector<Monomial> rest;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == i) continue;
      term *= local[l];
      rest.push_back(xs[l]);
    }
    term *= vandermonde(Alphabet(std::move(rest)));
    if (i % 2)
      numerator -= term;
    else
      numerator += term;
  }
  Polynomial reduced = exact_div(numerator, vandermonde(xs));
  FactoredRational value(std::move(reduced), closed_form_denominator(f.problem));
  return {substitute(value, f.back), Method::lagrange, std::nullopt};
}

OmegaProblem zero_pad(const OmegaProblem& p, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "zero_pad: r must be >= 0");
  OmegaProblem out = p;
  std::set<Var> used;
  for (const auto& letter : p.x + p.y)
    for (const auto& f : letter.factors()) used.insert(f.var);
  std::vector<Monomial> extra;
  int next = static_cast<int>(p.padding.size()) + 1;
  for (int added = 0; added < r; ++next) {
    Var v = Var::intern("#pad" + std::to_string(next));
    if (used.count(v)) continue;
    extra.emplace_back(v, 1);
    out.padding.push_back(v);
    ++added;
  }
  out.x = out.x + Alphabet(std::move(extra));
  return out;
}

OmegaResult specialize_padding(const OmegaResult& r, const OmegaProblem& padded) {
  if (padded.padding.empty()) return r;
  Bindings zeros;
  for (Var v : padded.padding) zeros.emplace(v, Polynomial{});
  return {substitute(r.value, zeros), r.method, r.truncation};
}

OmegaResult evaluate(const OmegaProblem& p, Method method, int max_degree) {
  OmegaResult r;
  switch (method) {
    case Method::series: r = omega_series_oracle(p, max_degree); break;
    case Method::schur: r = omega_closed_form(p); break;
    case Method::lagrange: r = omega_lagrange(p); break;
  }
  return specialize_padding(r, p);
}

// ---------------------------------------------------------------------------
// Cross-checking

namespace {

template <typename F>
auto timed(std::chrono::duration<double, std::milli>& elapsed, F&& fn) {
  auto start = Clock::now();
  auto result = fn();
  elapsed = Clock::now() - start;
  return result;
}

Disagreement describe(std::string comparison, const Polynomial& left, const Polynomial& right,
                      const Monomial& where, const Bindings& back) {
  return {std::move(comparison), omega::substitute(Polynomial(where), back),
          left.coefficient(where), right.coefficient(where)};
}

}  // namespace

CrossCheckReport cross_check_report(const OmegaProblem& p, int max_degree,
                                    const CrossCheckOptions& options) {
  require_k_below_n(p, "cross_check");
  if (max_degree < 0)
    throw Error(ErrorCode::InvalidArgument, "cross_check: truncation must be >= 0");
  Formal f = formalize(p);
  const OmegaProblem& fp = f.problem;

  CrossCheckReport report;
  report.k = p.k;
  report.n = p.n();
  report.m = p.m();
  report.truncation = max_degree;

  OmegaResult closed = timed(report.schur_time, [&] { return omega_closed_form(fp); });
  if (options.corrupt_numerator)
    closed.value = FactoredRational(closed.value.numerator() + Polynomial(1),
                                    closed.value.factors());
  OmegaResult lagrange = timed(report.lagrange_time, [&] { return omega_lagrange(fp); });
  OmegaResult series =
      timed(report.series_time, [&] { return omega_series_oracle(fp, max_degree); });

  report.schur_terms = closed.value.numerator().size();
  report.lagrange_terms = lagrange.value.numerator().size();
  report.series_terms = series.value.numerator().size();

  auto [lhs, rhs] = cross_multiply(closed.value, lagrange.value);
  Polynomial diff = lhs - rhs;
  report.schur_vs_lagrange = diff.is_zero();
  if (!diff.is_zero())
    report.first_disagreement =
        describe("schur/lagrange", lhs, rhs, diff.leading().mono, f.back);

  Polynomial expanded = series_expand(closed.value, max_degree);
  const Polynomial& oracle = series.value.numerator();
  Polynomial series_diff = expanded - oracle;
  report.schur_vs_series = series_diff.is_zero();
  if (!series_diff.is_zero() && !report.first_disagreement)
    // Lowest-degree discrepancy first, as the series is read.
    report.first_disagreement =
        describe("schur/series", expanded, oracle, series_diff.terms().back().mono, f.back);
  return report;
}

MethodDisagreementError::MethodDisagreementError(CrossCheckReport report)
    : Error(ErrorCode::MethodDisagreement,
            report.first_disagreement
                ? "methods disagree (" + report.first_disagreement->comparison +
                      ") at " + report.first_disagreement->monomial.to_string() + ": " +
                      report.first_disagreement->left.get_str() + " vs " +
                      report.first_disagreement->right.get_str()
                : std::string("methods disagree")),
      report_(std::move(report)) {}

CrossCheckReport cross_check(const OmegaProblem& p, int max_degree,
                             const CrossCheckOptions& options) {
  CrossCheckReport report = cross_check_report(p, max_degree, options);
  if (!report.passed()) throw MethodDisagreementError(std::move(report));
  return report;
}

}  // namespace omega
