#include "omega/symfun.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace omega {

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw Error(ErrorCode::InvalidArgument,
                  "partition parts must be positive and weakly decreasing");
  }
}

int Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int length) const {
  std::vector<int> v = parts_;
  if (static_cast<int>(v.size()) < length) v.resize(static_cast<std::size_t>(length), 0);
  return v;
}

Partition conjugate(const Partition& mu) {
  std::vector<int> parts;
  for (int j = 1; j <= mu[0]; ++j) {
    int count = 0;
    for (int p : mu.parts()) count += p >= j ? 1 : 0;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

namespace {

void generate(std::vector<int>& prefix, int max_length, int max_part,
              std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == max_length) return;
  int cap = prefix.empty() ? max_part : prefix.back();
  for (int p = 1; p <= cap; ++p) {
    prefix.push_back(p);
    generate(prefix, max_length, max_part, out);
    prefix.pop_back();
  }
}

void sort_by_weight_then_lex(std::vector<Partition>& ps) {
  std::sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() < b.parts();
  });
}

}  // namespace

std::vector<Partition> partitions_in_box(int max_length, int max_part) {
  std::vector<Partition> out;
  if (max_length < 0 || max_part < 0) return out;
  std::vector<int> prefix;
  generate(prefix, max_length, max_part, out);
  sort_by_weight_then_lex(out);
  return out;
}

std::vector<Partition> partitions_of(int weight, int max_length) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  for (auto& p : partitions_in_box(max_length, weight))
    if (p.weight() == weight) out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Alphabets

Alphabet Alphabet::of_variables(std::initializer_list<std::string_view> names) {
  std::vector<Monomial> letters;
  for (auto n : names) letters.push_back(Monomial::variable(n));
  return Alphabet(std::move(letters));
}

Alphabet Alphabet::of_variables(std::span<const Var> vars) {
  std::vector<Monomial> letters;
  for (Var v : vars) letters.emplace_back(v, 1);
  return Alphabet(std::move(letters));
}

std::optional<std::vector<Var>> Alphabet::as_distinct_variables() const {
  std::vector<Var> vars;
  std::set<Var> seen;
  for (const auto& m : letters_) {
    auto v = m.as_variable();
    if (!v || !seen.insert(*v).second) return std::nullopt;
    vars.push_back(*v);
  }
  return vars;
}

bool Alphabet::has_repeats() const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    for (std::size_t j = i + 1; j < letters_.size(); ++j)
      if (letters_[i] == letters_[j]) return true;
  return false;
}

Alphabet operator+(const Alphabet& a, const Alphabet& b) {
  std::vector<Monomial> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Alphabet(std::move(letters));
}

// ---------------------------------------------------------------------------
// Complete and elementary functions

std::vector<Polynomial> complete_h_table(int max_j, const Alphabet& a) {
  if (max_j < 0) return {};
  std::vector<Polynomial> h(static_cast<std::size_t>(max_j) + 1);
  h[0] = 1;
  // Adding one letter: S^j(A + a) = sum_t a^t S^(j-t)(A) = S^j(A) + a S^(j-1)(A + a).
  for (const auto& letter : a) {
    Polynomial lp(letter);
    for (std::size_t j = 1; j < h.size(); ++j) h[j] += lp * h[j - 1];
  }
  return h;
}

Polynomial complete_h(int j, const Alphabet& a) {
  if (j < 0) return {};
  return complete_h_table(j, a)[static_cast<std::size_t>(j)];
}

Polynomial elementary_e(int i, const Alphabet& a) {
  if (i < 0 || i > static_cast<int>(a.size())) return {};
  std::vector<Polynomial> e(static_cast<std::size_t>(i) + 1);
  e[0] = 1;
  for (const auto& letter : a) {
    Polynomial lp(letter);
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += lp * e[j - 1];
  }
  return e[static_cast<std::size_t>(i)];
}

// ---------------------------------------------------------------------------
// Schur functions

Polynomial jacobi_trudi(std::span<const int> v, const Alphabet& a) {
  const int n = static_cast<int>(v.size());
  int max_index = 0;
  for (int i = 0; i < n; ++i) max_index = std::max(max_index, v[static_cast<std::size_t>(i)] - i + n - 1);
  auto h = complete_h_table(max_index, a);
  PolyMatrix m(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int idx = v[static_cast<std::size_t>(i)] - i + j;
      if (idx >= 0) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(idx)];
    }
  }
  return det(m);
}

Polynomial schur_jt(std::span<const int> v, const Alphabet& a) {
  if (v.size() != a.size())
    throw Error(ErrorCode::LengthMismatch,
                "schur_jt: index of length " + std::to_string(v.size()) +
                    " for an alphabet of " + std::to_string(a.size()) + " letters");
  return jacobi_trudi(v, a);
}

Polynomial schur(const Partition& mu, const Alphabet& a) {
  int len = std::max(mu.length(), static_cast<int>(a.size()));
  auto v = mu.padded(len);
  return jacobi_trudi(v, a);
}

Polynomial vandermonde(const Alphabet& a) {
  Polynomial d(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      d *= Polynomial(a[i]) - Polynomial(a[j]);
  return d;
}

Polynomial schur_bialternant(const Partition& mu, const Alphabet& a) {
  const int n = static_cast<int>(a.size());
  if (mu.length() > n)
    throw Error(ErrorCode::LengthMismatch, "schur_bialternant: partition longer than alphabet");
  if (a.has_repeats())
    throw Error(ErrorCode::RepeatedGenerators,
                "schur_bialternant: repeated letters make the Vandermonde vanish");
  PolyMatrix m(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Polynomial(a[static_cast<std::size_t>(i)].pow(mu[j] + n - 1 - j));
  return exact_div(det(m), vandermonde(a));
}

// ---------------------------------------------------------------------------
// Symmetrizers

namespace {

int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::vector<Var> require_distinct_variables(const Alphabet& a, std::string_view op) {
  if (a.has_repeats())
    throw Error(ErrorCode::RepeatedGenerators, std::string(op) + ": repeated generators");
  auto vars = a.as_distinct_variables();
  if (!vars)
    throw Error(ErrorCode::PreconditionViolated,
                std::string(op) + ": generators must be plain variables");
  return *vars;
}

}  // namespace

Polynomial permute(const Polynomial& p, std::span<const Var> vars, std::span<const int> perm) {
  std::map<Var, Var> mapping;
  for (std::size_t i = 0; i < vars.size(); ++i)
    mapping.emplace(vars[i], vars[static_cast<std::size_t>(perm[i])]);
  return rename(p, mapping);
}

Polynomial pi_omega(const Polynomial& f, const Alphabet& a) {
  const auto vars = require_distinct_variables(a, "pi_omega");
  const int n = static_cast<int>(vars.size());
  // Below x_i^(i-n) (0-based i) the straightening identity is not established.
  for (const auto& t : f.terms()) {
    for (int i = 0; i < n; ++i) {
      int e = t.mono.exponent(vars[static_cast<std::size_t>(i)]);
      if (e <= i - n)
        throw Error(ErrorCode::PreconditionViolated,
                    "pi_omega: exponent " + std::to_string(e) + " of " +
                        vars[static_cast<std::size_t>(i)].name() + " must exceed " +
                        std::to_string(i - n));
    }
  }
  std::vector<VarPower> staircase;
  for (int i = 0; i < n; ++i) staircase.push_back({vars[static_cast<std::size_t>(i)], n - 1 - i});
  Polynomial g = f * Polynomial(Monomial(std::move(staircase)));

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial antisym;
  do {
    Polynomial term = permute(g, vars, perm);
    if (permutation_sign(perm) < 0)
      antisym -= term;
    else
      antisym += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return exact_div(antisym, vandermonde(a));
}

FactoredRational lagrange_op(const Polynomial& f, const Alphabet& a) {
  const auto vars = require_distinct_variables(a, "lagrange_op");
  const std::size_t n = vars.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    std::map<Var, Var> swap{{vars[i], vars[i + 1]}, {vars[i + 1], vars[i]}};
    if (rename(f, swap) != f)
      throw Error(ErrorCode::NotSymmetric,
                  "lagrange_op: argument is not symmetric in " + vars[i].name() +
                      " and " + vars[i + 1].name());
  }
  // 1 / prod_{j != i}(x_i - x_j) = (-1)^i vandermonde(A \ x_i) / vandermonde(A).
  Polynomial numerator;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> perm;
    perm.push_back(static_cast<int>(i));
    std::vector<Monomial> rest;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      perm.push_back(static_cast<int>(j));
      rest.emplace_back(vars[j], 1);
    }
    Polynomial term = permute(f, vars, perm) * vandermonde(Alphabet(std::move(rest)));
    if (i % 2)
      numerator -= term;
    else
      numerator += term;
  }
  Polynomial delta = vandermonde(a);
  if (auto q = try_exact_div(numerator, delta)) return FactoredRational(*std::move(q));
  std::vector<FactoredRational::Factor> factors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      factors.push_back({Polynomial(a[i]) - Polynomial(a[j]), 1});
  return FactoredRational(std::move(numerator), std::move(factors)).cancelled();
}

Polynomial cauchy_kernel(const Alphabet& a, const Alphabet& b) {
  Polynomial r(1);
  for (const auto& x : a)
    for (const auto& y : b) r *= Polynomial(1) - Polynomial(x * y);
  return r;
}

}  // namespace omega
