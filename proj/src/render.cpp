#include "omega/render.hpp"

#include <iomanip>
#include <sstream>

namespace omega {

std::string render_text(const Polynomial& p) { return p.to_string(); }

std::string render_factor(const Polynomial& factor) {
  // 1 - m is by far the common shape; print it the way it is written.
  if (factor.size() == 2) {
    const auto& ts = factor.terms();
    for (std::size_t i = 0; i < 2; ++i) {
      const Term& one = ts[i];
      const Term& other = ts[1 - i];
      if (one.mono.is_one() && one.coeff == 1 && other.coeff == -1)
        return "(1 - " + Polynomial(other.mono).to_string() + ")";
    }
  }
  return "(" + factor.to_string() + ")";
}

std::string render_text(const FactoredRational& r) {
  if (r.is_polynomial()) return r.numerator().to_string();
  std::string den;
  for (const auto& f : r.factors()) {
    if (!den.empty()) den += '*';
    den += render_factor(f.poly);
    if (f.multiplicity != 1) den += '^' + std::to_string(f.multiplicity);
  }
  return "(" + r.numerator().to_string() + ") / (" + den + ")";
}

nlohmann::json to_json(const Polynomial& p) {
  auto terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& f : t.mono.factors()) exps[f.var.name()] = f.exp;
    terms.push_back({{"coeff", t.coeff.get_str()}, {"exps", std::move(exps)}});
  }
  return terms;
}

nlohmann::json to_json(const FactoredRational& r) {
  auto factors = nlohmann::json::array();
  for (const auto& f : r.factors())
    factors.push_back({{"factor", to_json(f.poly)}, {"multiplicity", f.multiplicity}});
  return {{"numerator", to_json(r.numerator())}, {"denominator_factors", std::move(factors)}};
}

std::string render_text(const OmegaResult& r) { return render_text(r.value); }

nlohmann::json to_json(const OmegaResult& r) {
  nlohmann::json j = to_json(r.value);
  j["method"] = std::string(to_string(r.method));
  j["truncation"] = r.truncation ? nlohmann::json(*r.truncation) : nlohmann::json(nullptr);
  return j;
}

namespace {

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::string render_text(const CrossCheckReport& r) {
  std::ostringstream os;
  os << "cross-check k=" << r.k << " n=" << r.n << " m=" << r.m
     << " truncation=" << r.truncation << '\n';
  os << "schur vs lagrange: " << verdict(r.schur_vs_lagrange) << " (exact rational equality)\n";
  os << "schur vs series:   " << verdict(r.schur_vs_series)
     << " (coefficients through total degree " << r.truncation << ")\n";
  if (r.first_disagreement) {
    const auto& d = *r.first_disagreement;
    os << "first disagreement (" << d.comparison << "): coefficient of "
       << d.monomial.to_string() << " is " << d.left.get_str() << " vs "
       << d.right.get_str() << '\n';
  }
  os << "terms: schur " << r.schur_terms << ", lagrange " << r.lagrange_terms << ", series "
     << r.series_terms << '\n';
  os << std::fixed << std::setprecision(3) << "time: schur " << r.schur_time.count()
     << " ms, lagrange " << r.lagrange_time.count() << " ms, series "
     << r.series_time.count() << " ms\n";
  os << "result: " << (r.passed() ? "ALL PASS" : "DISAGREEMENT") << '\n';
  return os.str();
}

nlohmann::json to_json(const CrossCheckReport& r) {
  nlohmann::json j = {
      {"k", r.k},
      {"n", r.n},
      {"m", r.m},
      {"truncation", r.truncation},
      {"schur_vs_lagrange", r.schur_vs_lagrange},
      {"schur_vs_series", r.schur_vs_series},
      {"terms", {{"schur", r.schur_terms}, {"lagrange", r.lagrange_terms}, {"series", r.series_terms}}},
      {"passed", r.passed()},
  };
  if (r.first_disagreement) {
    const auto& d = *r.first_disagreement;
    j["first_disagreement"] = {{"comparison", d.comparison},
                               {"monomial", to_json(d.monomial)},
                               {"left", d.left.get_str()},
                               {"right", d.right.get_str()}};
  } else {
    j["first_disagreement"] = nullptr;
  }
  return j;
}

}  // namespace omega
