#include "omega/algebra.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace omega {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonInvertibleSubstitution:
      return "NonInvertibleSubstitutionIntoNegativePower";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::RepeatedGenerators: return "RepeatedGenerators";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::MethodDisagreement: return "MethodDisagreement";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StructureError: return "StructureError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Variable registry

namespace {

class VarRegistry {
 public:
  static VarRegistry& instance() {
    static VarRegistry registry;
    return registry;
  }

  std::uint32_t intern(std::string_view name) {
    if (name.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] =
        ids_.try_emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  std::optional<std::uint32_t> find(std::string_view name) const {
    std::shared_lock lock(mutex_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    return std::nullopt;
  }

  const std::string& name(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return names_.at(id);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> names_;  // deque keeps references stable
  std::unordered_map<std::string, std::uint32_t> ids_;
};

}  // namespace

Var Var::intern(std::string_view name) { return Var(VarRegistry::instance().intern(name)); }

std::optional<Var> Var::find(std::string_view name) {
  if (auto id = VarRegistry::instance().find(name)) return Var(*id);
  return std::nullopt;
}

const std::string& Var::name() const { return VarRegistry::instance().name(id_); }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Var v, int exp) {
  if (exp != 0) factors_.push_back({v, exp});
}

Monomial::Monomial(std::vector<VarPower> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  std::vector<VarPower> merged;
  merged.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (!merged.empty() && merged.back().var == f.var)
      merged.back().exp += f.exp;
    else
      merged.push_back(f);
  }
  std::erase_if(merged, [](const VarPower& f) { return f.exp == 0; });
  factors_ = std::move(merged);
}

int Monomial::exponent(Var v) const noexcept {
  for (const auto& f : factors_)
    if (f.var == v) return f.exp;
  return 0;
}

int Monomial::total_degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

std::optional<Var> Monomial::as_variable() const noexcept {
  if (factors_.size() == 1 && factors_[0].exp == 1) return factors_[0].var;
  return std::nullopt;
}

bool Monomial::is_polynomial() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const VarPower& f) { return f.exp >= 0; });
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial r;
  if (e == 0) return r;
  r.factors_ = factors_;
  for (auto& f : r.factors_) f.exp *= e;
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (const auto& f : factors_)
    if (f.var != v) r.factors_.push_back(f);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->var < j->var)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->var < i->var) {
      r.factors_.push_back(*j++);
    } else {
      int e = i->exp + j->exp;
      if (e != 0) r.factors_.push_back({i->var, e});
      ++i;
      ++j;
    }
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& f : factors_) {
    std::size_t x = (static_cast<std::size_t>(f.var.id()) << 32) ^
                    static_cast<std::uint32_t>(f.exp);
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].var < fb[j].var)) {
      return fa[i].exp <=> 0;
    }
    if (i == fa.size() || fb[j].var < fa[i].var) {
      return 0 <=> fb[j].exp;
    }
    if (auto c = fa[i].exp <=> fb[j].exp; c != 0) return c;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

using Accumulator = std::unordered_map<Monomial, Integer, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return graded_lex(a.mono, b.mono) > 0;
  });
  return out;
}

}  // namespace

Polynomial::Polynomial(int c) {
  if (c != 0) terms_.push_back({Monomial{}, Integer(c)});
}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial::Polynomial(Monomial m, Integer c) {
  if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) acc[t.mono] += t.coeff;
  Polynomial p;
  p.terms_ = drain(acc);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return graded_lex(t.mono, key) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

std::optional<Integer> Polynomial::as_constant() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

bool Polynomial::is_unit() const {
  return terms_.size() == 1 && abs(terms_[0].coeff) == 1;
}

int Polynomial::min_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.front().mono.total_degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.total_degree());
  return d;
}

int Polynomial::max_degree() const {
  if (terms_.empty()) return 0;
  return terms_.front().mono.total_degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == terms_.end())
      c = std::strong_ordering::less;
    else if (j == b.terms_.end())
      c = std::strong_ordering::greater;
    else
      c = graded_lex(i->mono, j->mono);
    if (c > 0) {
      out.push_back(std::move(*i++));
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      Integer s = i->coeff + j->coeff;
      if (s != 0) out.push_back({std::move(i->mono), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) { return *this += -b; }

Polynomial& Polynomial::operator*=(const Polynomial& b) {
  *this = *this * b;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (auto c = b.as_constant(); c && *c == 1) return a;
  if (auto c = a.as_constant(); c && *c == 1) return b;
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  Polynomial p;
  p.terms_ = drain(acc);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial r;
  for (const auto& t : terms_)
    if (t.mono.total_degree() <= max_degree) r.terms_.push_back(t);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = sgn(t.coeff) < 0;
    Integer mag = abs(t.coeff);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool need_star = false;
    // A lone leading "+1" is dropped; negative coefficients stay explicit.
    if (t.mono.is_one() || mag != 1 || negative) {
      os << mag.get_str();
      need_star = true;
    }
    for (const auto& f : t.mono.factors()) {
      if (need_star) os << '*';
      os << f.var.name();
      if (f.exp != 1) os << '^' << f.exp;
      need_star = true;
    }
  }
  return os.str();
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int max_degree) {
  Accumulator acc;
  for (const auto& s : a.terms()) {
    int ds = s.mono.total_degree();
    for (const auto& t : b.terms()) {
      if (ds + t.mono.total_degree() > max_degree) continue;
      acc[s.mono * t.mono] += s.coeff * t.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Exact division

namespace {

// Monomial whose exponent in each variable is the minimum over all terms.
Monomial monomial_content(const Polynomial& p) {
  std::map<Var, int> lows;
  for (const auto& t : p.terms())
    for (const auto& f : t.mono.factors()) lows.try_emplace(f.var, 0);
  for (auto& [v, low] : lows) {
    bool first = true;
    for (const auto& t : p.terms()) {
      int e = t.mono.exponent(v);
      low = first ? e : std::min(low, e);
      first = false;
    }
  }
  std::vector<VarPower> fs;
  for (const auto& [v, low] : lows) fs.push_back({v, low});
  return Monomial(std::move(fs));
}

Polynomial shift(const Polynomial& p, const Monomial& m) {
  if (m.is_one()) return p;
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono * m, t.coeff});
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace

std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact_div: division by zero");
  if (a.is_zero()) return Polynomial{};
  if (b.size() == 1) {
    const Term& t = b.leading();
    std::vector<Term> q;
    q.reserve(a.size());
    Monomial inv = t.mono.inverse();
    for (const auto& s : a.terms()) {
      if (!mpz_divisible_p(s.coeff.get_mpz_t(), t.coeff.get_mpz_t())) return std::nullopt;
      q.push_back({s.mono * inv, Integer(s.coeff / t.coeff)});
    }
    return Polynomial::from_terms(std::move(q));
  }

  // Move both operands into the ordinary polynomial ring with no monomial
  // content; divisibility there is equivalent to Laurent divisibility.
  Monomial ca = monomial_content(a);
  Monomial cb = monomial_content(b);
  Polynomial a0 = shift(a, ca.inverse());
  Polynomial b0 = shift(b, cb.inverse());

  const Term& lead = b0.leading();
  std::map<Monomial, Integer, GradedLexGreater> rem;
  for (const auto& t : a0.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    Monomial qm = top->first * lead.mono.inverse();
    if (!qm.is_polynomial()) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    Integer qc = top->second / lead.coeff;
    for (const auto& t : b0.terms()) {
      Monomial m = qm * t.mono;
      auto [it, inserted] = rem.try_emplace(std::move(m), 0);
      it->second -= qc * t.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  return shift(Polynomial::from_terms(std::move(quotient)), ca * cb.inverse());
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto q = try_exact_div(a, b);
  if (!q)
    throw Error(ErrorCode::NotDivisible,
                "exact_div: " + b.to_string() + " does not divide " + a.to_string());
  return *std::move(q);
}

// ---------------------------------------------------------------------------
// Determinant

Polynomial det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw Error(ErrorCode::NonSquare, "det: matrix is not square");
  if (n == 0) return 1;
  if (n > 24) throw Error(ErrorCode::InvalidArgument, "det: matrix larger than 24x24");

  // memo[mask] = minor on the rows below the ones consumed, over the columns
  // not in mask. Row index is popcount(mask).
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto minor = [&](auto&& self, std::uint32_t used) -> Polynomial {
    std::size_t row = static_cast<std::size_t>(__builtin_popcount(used));
    if (row == n) return 1;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial sum;
    int free_before = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (used & (1U << col)) continue;
      const Polynomial& entry = m[row][col];
      if (!entry.is_zero()) {
        Polynomial sub = self(self, used | (1U << col));
        if (!sub.is_zero()) {
          Polynomial term = entry * sub;
          if (free_before % 2) sum -= term;
          else sum += term;
        }
      }
      ++free_before;
    }
    memo.emplace(used, sum);
    return sum;
  };
  return minor(minor, 0U);
}

// ---------------------------------------------------------------------------
// Substitution

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  std::map<std::pair<Var, int>, Polynomial> powers;
  auto power_of = [&](Var v, int e, const Polynomial& value) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    if (auto it = powers.find(key); it != powers.end()) return it->second;
    Polynomial r;
    if (e >= 0) {
      r = value.pow(static_cast<unsigned>(e));
    } else {
      if (!value.is_unit())
        throw Error(ErrorCode::NonInvertibleSubstitution,
                    "substitute: " + v.name() + " occurs with exponent " +
                        std::to_string(e) + " but is bound to non-unit " +
                        value.to_string());
      const Term& t = value.leading();
      Integer c = (-e) % 2 ? t.coeff : Integer(1);
      r = Polynomial(t.mono.pow(e), c);
    }
    return powers.emplace(key, std::move(r)).first->second;
  };

  Accumulator acc;
  for (const auto& t : p.terms()) {
    std::vector<VarPower> kept;
    Polynomial factor(1);
    for (const auto& f : t.mono.factors()) {
      auto it = bindings.find(f.var);
      if (it == bindings.end())
        kept.push_back(f);
      else
        factor = factor * power_of(f.var, f.exp, it->second);
    }
    Monomial rest(std::move(kept));
    for (const auto& s : factor.terms()) acc[s.mono * rest] += s.coeff * t.coeff;
  }
  Polynomial r;
  std::vector<Term> terms;
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(std::move(terms));
}

Polynomial rename(const Polynomial& p, const std::map<Var, Var>& mapping) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<VarPower> fs(t.mono.factors().begin(), t.mono.factors().end());
    for (auto& f : fs)
      if (auto it = mapping.find(f.var); it != mapping.end()) f.var = it->second;
    terms.push_back({Monomial(std::move(fs)), t.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

std::vector<Polynomial> laurent_coefficients(const Polynomial& p, Var v, int lo, int hi) {
  if (lo > hi)
    throw Error(ErrorCode::InvalidArgument, "laurent_coefficients: lo > hi");
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(hi - lo) + 1);
  for (const auto& t : p.terms()) {
    int e = t.mono.exponent(v);
    if (e < lo || e > hi) continue;
    buckets[static_cast<std::size_t>(e - lo)].push_back({t.mono.without(v), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(std::move(b)));
  return out;
}

// ---------------------------------------------------------------------------
// FactoredRational

FactoredRational::FactoredRational(Polynomial numerator, std::vector<Factor> factors)
    : numerator_(std::move(numerator)) {
  for (auto& f : factors) {
    if (f.poly.is_zero())
      throw Error(ErrorCode::DivisionByZero, "denominator factor is the zero polynomial");
    if (f.multiplicity <= 0)
      throw Error(ErrorCode::InvalidArgument, "denominator multiplicity must be positive");
    if (auto c = f.poly.as_constant(); c && *c == 1) continue;
    auto same = std::find_if(factors_.begin(), factors_.end(),
                             [&](const Factor& g) { return g.poly == f.poly; });
    if (same != factors_.end())
      same->multiplicity += f.multiplicity;
    else
      factors_.push_back(std::move(f));
  }
}

Polynomial FactoredRational::denominator() const {
  Polynomial d(1);
  for (const auto& f : factors_) d *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return d;
}

FactoredRational FactoredRational::cancelled() const {
  Polynomial num = numerator_;
  std::vector<Factor> kept;
  for (const auto& f : factors_) {
    int left = f.multiplicity;
    while (left > 0 && !num.is_zero()) {
      auto q = try_exact_div(num, f.poly);
      if (!q) break;
      num = *std::move(q);
      --left;
    }
    if (num.is_zero()) return FactoredRational{};
    if (left > 0) kept.push_back({f.poly, left});
  }
  return FactoredRational(std::move(num), std::move(kept));
}

std::pair<Polynomial, Polynomial> cross_multiply(const FactoredRational& a,
                                                 const FactoredRational& b) {
  // Only the factors not shared by both sides are multiplied out.
  Polynomial left = a.numerator();
  Polynomial right = b.numerator();
  std::vector<int> used(b.factors().size(), 0);
  for (const auto& fa : a.factors()) {
    int rest = fa.multiplicity;
    for (std::size_t j = 0; j < b.factors().size() && rest > 0; ++j) {
      const auto& fb = b.factors()[j];
      if (!(fb.poly == fa.poly)) continue;
      int common = std::min(rest, fb.multiplicity - used[j]);
      used[j] += common;
      rest -= common;
    }
    if (rest > 0) right *= fa.poly.pow(static_cast<unsigned>(rest));
  }
  for (std::size_t j = 0; j < b.factors().size(); ++j) {
    int rest = b.factors()[j].multiplicity - used[j];
    if (rest > 0) left *= b.factors()[j].poly.pow(static_cast<unsigned>(rest));
  }
  return {std::move(left), std::move(right)};
}

bool rational_equal(const FactoredRational& a, const FactoredRational& b) {
  auto [left, right] = cross_multiply(a, b);
  return left == right;
}

Polynomial series_expand(const FactoredRational& r, int max_degree) {
  const Polynomial& num = r.numerator();
  // Negative-degree numerator terms need deeper denominator series.
  int depth = max_degree - std::min(0, num.min_degree());
  Polynomial result = num.truncated(depth);
  for (const auto& f : r.factors()) {
    Integer c = f.poly.coefficient(Monomial{});
    if (abs(c) != 1)
      throw Error(ErrorCode::InvalidArgument,
                  "series_expand: factor " + f.poly.to_string() +
                      " has no unit constant term");
    // 1/f = c * 1/(1 - g) with g = 1 - c*f, since c^2 = 1.
    Polynomial g = Polynomial(1) - Polynomial(c) * f.poly;
    if (!g.is_zero() && g.min_degree() <= 0)
      throw Error(ErrorCode::InvalidArgument,
                  "series_expand: factor " + f.poly.to_string() +
                      " has a non-constant term of degree <= 0");
    Polynomial inverse(1);
    Polynomial g_power(1);
    int min_g = g.is_zero() ? depth + 1 : g.min_degree();
    for (int t = 1; t * min_g <= depth; ++t) {
      g_power = mul_truncated(g_power, g, depth);
      if (g_power.is_zero()) break;
      inverse += g_power;
    }
    inverse *= Polynomial(c);
    for (int i = 0; i < f.multiplicity; ++i) result = mul_truncated(result, inverse, depth);
  }
  return result.truncated(max_degree);
}

}  // namespace omega
