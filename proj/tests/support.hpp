#ifndef OMEGA_TESTS_SUPPORT_HPP
#define OMEGA_TESTS_SUPPORT_HPP

// Test-only helpers: random generators and independent oracles. Nothing here
// calls the code paths it is used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "omega/algebra.hpp"
#include "omega/symfun.hpp"

namespace omega::testing {

inline Polynomial P(std::string_view name, int exp = 1) { return Polynomial::variable(name, exp); }

inline std::vector<Var> make_vars(const std::string& prefix, int count) {
  std::vector<Var> out;
  for (int i = 1; i <= count; ++i) out.push_back(Var::intern(prefix + std::to_string(i)));
  return out;
}

// Random Laurent polynomial: up to max_terms terms, exponents in [lo, hi],
// coefficients in [-9, 9].
inline Polynomial random_polynomial(std::mt19937& rng, const std::vector<Var>& vars,
                                    int max_terms = 6, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(lo, hi);
  std::uniform_int_distribution<int> coeffd(-9, 9);
  std::vector<Term> terms;
  int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<VarPower> fs;
    for (Var v : vars) fs.push_back({v, expd(rng)});
    terms.push_back({Monomial(std::move(fs)), Integer(coeffd(rng))});
  }
  return Polynomial::from_terms(std::move(terms));
}

inline Polynomial random_nonzero(std::mt19937& rng, const std::vector<Var>& vars,
                                 int max_terms = 6, int lo = -3, int hi = 3) {
  for (;;) {
    Polynomial p = random_polynomial(rng, vars, max_terms, lo, hi);
    if (!p.is_zero()) return p;
  }
}

// Exact rational evaluation at a point.
inline mpq_class evaluate(const Polynomial& p, const std::map<Var, mpq_class>& point) {
  mpq_class sum = 0;
  for (const auto& t : p.terms()) {
    mpq_class value = t.coeff;
    for (const auto& f : t.mono.factors()) {
      mpq_class base = point.at(f.var);
      mpq_class power = 1;
      for (int i = 0; i < std::abs(f.exp); ++i) power *= base;
      value *= f.exp >= 0 ? power : mpq_class(1) / power;
    }
    sum += value;
  }
  return sum;
}

// Determinant as the signed sum over all permutations.
inline Polynomial permutation_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial sum;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    Polynomial term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    if (inversions % 2)
      sum -= term;
    else
      sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

// Omega of lambda^k / prod(1 - x lambda) prod(1 - y / lambda) read directly
// off the definition: every exponent tuple (a, b) of total degree <= D whose
// lambda exponent k + |a| - |b| is nonnegative contributes x^a y^b once.
inline Polynomial brute_force_omega(int k, const std::vector<Var>& xs, const std::vector<Var>& ys,
                                    int max_degree) {
  std::vector<Var> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  std::vector<int> e(all.size(), 0);
  std::vector<Term> terms;
  auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
    if (idx == all.size()) {
      int lambda_exp = k;
      std::vector<VarPower> fs;
      for (std::size_t i = 0; i < all.size(); ++i) {
        lambda_exp += i < xs.size() ? e[i] : -e[i];
        fs.push_back({all[i], e[i]});
      }
      if (lambda_exp >= 0) terms.push_back({Monomial(std::move(fs)), Integer(1)});
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[idx] = a;
      self(self, idx + 1, left - a);
    }
    e[idx] = 0;
  };
  rec(rec, 0, max_degree);
  return Polynomial::from_terms(std::move(terms));
}

// All distinct rearrangements of exponents over vars, summed.
inline Polynomial monomial_symmetric(std::vector<int> exponents, const std::vector<Var>& vars) {
  exponents.resize(vars.size(), 0);
  std::sort(exponents.begin(), exponents.end());
  std::vector<Term> terms;
  do {
    std::vector<VarPower> fs;
    for (std::size_t i = 0; i < vars.size(); ++i) fs.push_back({vars[i], exponents[i]});
    terms.push_back({Monomial(std::move(fs)), Integer(1)});
  } while (std::next_permutation(exponents.begin(), exponents.end()));
  return Polynomial::from_terms(std::move(terms));
}

// Straightens v + staircase: zero when two entries coincide, otherwise
// sign * partition after sorting.
struct Straightened {
  int sign = 0;
  Partition partition;
};

inline Straightened straighten(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> shifted(v.size());
  for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] + n - 1 - i;
  std::set<int> distinct(shifted.begin(), shifted.end());
  if (distinct.size() != shifted.size()) return {};
  for (int s : shifted)
    if (s < 0) return {};
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inversions += shifted[static_cast<std::size_t>(i)] < shifted[static_cast<std::size_t>(j)] ? 1 : 0;
  std::sort(shifted.rbegin(), shifted.rend());
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) parts.push_back(shifted[static_cast<std::size_t>(i)] - (n - 1 - i));
  return {inversions % 2 ? -1 : 1, Partition(parts)};
}

inline Polynomial monomial_of(const std::vector<Var>& vars, const std::vector<int>& exps) {
  std::vector<VarPower> fs;
  for (std::size_t i = 0; i < vars.size(); ++i) fs.push_back({vars[i], exps[i]});
  return Polynomial(Monomial(std::move(fs)));
}

// Every integer vector of length n with entry i (0-based) in [lo(i), hi].
template <typename Lo, typename F>
inline void for_each_vector(int n, Lo lo, int hi, F&& fn) {
  std::vector<int> v(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      fn(v);
      return;
    }
    for (int e = lo(i); e <= hi; ++e) {
      v[static_cast<std::size_t>(i)] = e;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

// S^j over the variables, enumerated monomial by monomial.
inline Polynomial complete_oracle(int j, const std::vector<Var>& vars) {
  if (j < 0) return {};
  std::vector<Term> terms;
  std::vector<int> e(vars.size(), 0);
  auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
    if (idx + 1 >= vars.size()) {
      if (vars.empty()) {
        if (left == 0) terms.push_back({Monomial(), Integer(1)});
        return;
      }
      e[idx] = left;
      std::vector<VarPower> fs;
      for (std::size_t i = 0; i < vars.size(); ++i) fs.push_back({vars[i], e[i]});
      terms.push_back({Monomial(std::move(fs)), Integer(1)});
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[idx] = a;
      self(self, idx + 1, left - a);
    }
  };
  rec(rec, 0, j);
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace omega::testing

#endif  // OMEGA_TESTS_SUPPORT_HPP
