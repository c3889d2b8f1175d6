#ifndef OMEGA_RENDER_HPP
#define OMEGA_RENDER_HPP

#include <string>

#include "json.hpp"
#include "omega/algebra.hpp"
#include "omega/omega.hpp"

namespace omega {

// Canonical text: terms in descending graded-lex order, explicit `^` and `*`,
// e.g. "-1*x1^2*y + 3".
std::string render_text(const Polynomial& p);

// "(num) / ((1 - x1)*(1 - x2)^2)", or just the numerator when the
// denominator is trivial.
std::string render_text(const FactoredRational& r);
std::string render_factor(const Polynomial& factor);

// [{"coeff": "-1", "exps": {"x1": 2, "y": 1}}, ...] in canonical term order.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const FactoredRational& r);

// One line per method result; json adds "method" and "truncation" keys.
std::string render_text(const OmegaResult& r);
nlohmann::json to_json(const OmegaResult& r);

// Human-readable report with timings. The json form leaves timings out so
// identical inputs give identical bytes.
std::string render_text(const CrossCheckReport& r);
nlohmann::json to_json(const CrossCheckReport& r);

}  // namespace omega

#endif  // OMEGA_RENDER_HPP
