#include "omega/omega.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "omega/expr.hpp"
#include "omega/omega.hpp"
#include "omega/render.hpp"

struct omega_problem {
  omega::OmegaProblem problem;
  std::optional<omega::OmegaExpression> expression;
};

struct omega_result {
  omega::OmegaResult result;
};

struct omega_report {
  omega::CrossCheckReport report;
};

namespace {

thread_local std::string last_error;

omega_status status_for(omega::ErrorCode code) {
  using omega::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return OMEGA_ERR_PARSE;
    case ErrorCode::StructureError: return OMEGA_ERR_STRUCTURE;
    case ErrorCode::KTooLarge: return OMEGA_ERR_K_TOO_LARGE;
    case ErrorCode::RepeatedGenerators: return OMEGA_ERR_REPEATED_GENERATORS;
    case ErrorCode::PreconditionViolated:
    case ErrorCode::NotSymmetric: return OMEGA_ERR_PRECONDITION;
    case ErrorCode::MethodDisagreement: return OMEGA_ERR_DISAGREEMENT;
    case ErrorCode::InvalidArgument:
    case ErrorCode::LengthMismatch: return OMEGA_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotDivisible:
    case ErrorCode::DivisionByZero:
    case ErrorCode::NonSquare:
    case ErrorCode::NonInvertibleSubstitution: return OMEGA_ERR_ALGEBRA;
  }
  return OMEGA_ERR_INTERNAL;
}

template <typename F>
omega_status guarded(F&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return OMEGA_OK;
  } catch (const omega::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OMEGA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OMEGA_ERR_INTERNAL;
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

omega_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return OMEGA_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* omega_status_name(omega_status status) {
  switch (status) {
    case OMEGA_OK: return "ok";
    case OMEGA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OMEGA_ERR_PARSE: return "parse error";
    case OMEGA_ERR_STRUCTURE: return "structure error";
    case OMEGA_ERR_K_TOO_LARGE: return "k too large";
    case OMEGA_ERR_REPEATED_GENERATORS: return "repeated generators";
    case OMEGA_ERR_PRECONDITION: return "precondition violated";
    case OMEGA_ERR_DISAGREEMENT: return "method disagreement";
    case OMEGA_ERR_ALGEBRA: return "algebra error";
    case OMEGA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* omega_last_error(void) { return last_error.c_str(); }

void omega_string_free(char* s) { std::free(s); }

omega_status omega_problem_parse(const char* expr, const char* lambda_name, omega_problem** out) {
  if (!expr || !out) return null_argument("expr/out");
  return guarded([&] {
    std::optional<std::string_view> lambda;
    if (lambda_name) lambda = lambda_name;
    auto e = omega::parse_expression(expr, lambda);
    auto problem = omega::to_problem(e);
    *out = new omega_problem{std::move(problem), std::move(e)};
  });
}

omega_status omega_problem_from_letters(int k, const char* x_list, const char* y_list,
                                        omega_problem** out) {
  if (!x_list || !out) return null_argument("x_list/out");
  return guarded([&] {
    omega::Alphabet x(omega::parse_letter_list(x_list));
    omega::Alphabet y(y_list ? omega::parse_letter_list(y_list) : std::vector<omega::Monomial>{});
    *out = new omega_problem{omega::make_problem(k, std::move(x), std::move(y)), std::nullopt};
  });
}

omega_status omega_problem_pad(const omega_problem* p, int r, omega_problem** out) {
  if (!p || !out) return null_argument("problem/out");
  return guarded([&] { *out = new omega_problem{omega::zero_pad(p->problem, r), std::nullopt}; });
}

omega_status omega_problem_render(const omega_problem* p, char** out) {
  if (!p || !out) return null_argument("problem/out");
  return guarded([&] {
    omega::OmegaExpression e;
    e.k = p->problem.k;
    if (p->expression) e.lambda = p->expression->lambda;
    for (const auto& x : p->problem.x) e.factors.push_back({x, 1});
    for (const auto& y : p->problem.y) e.factors.push_back({y, -1});
    *out = duplicate(omega::render_expression(e));
  });
}

int omega_problem_k(const omega_problem* p) { return p ? p->problem.k : -1; }
int omega_problem_n(const omega_problem* p) { return p ? p->problem.n() : -1; }
int omega_problem_m(const omega_problem* p) { return p ? p->problem.m() : -1; }

void omega_problem_free(omega_problem* p) { delete p; }

omega_status omega_evaluate(const omega_problem* p, omega_method method, int truncation,
                            omega_result** out) {
  if (!p || !out) return null_argument("problem/out");
  return guarded([&] {
    omega::Method m = omega::Method::schur;
    switch (method) {
      case OMEGA_METHOD_SCHUR: m = omega::Method::schur; break;
      case OMEGA_METHOD_LAGRANGE: m = omega::Method::lagrange; break;
      case OMEGA_METHOD_SERIES: m = omega::Method::series; break;
      default: throw omega::Error(omega::ErrorCode::InvalidArgument, "unknown method");
    }
    *out = new omega_result{omega::evaluate(p->problem, m, truncation)};
  });
}

omega_status omega_result_render(const omega_result* r, omega_format format, char** out) {
  if (!r || !out) return null_argument("result/out");
  return guarded([&] {
    *out = duplicate(format == OMEGA_FORMAT_JSON ? omega::to_json(r->result).dump()
                                                 : omega::render_text(r->result));
  });
}

void omega_result_free(omega_result* r) { delete r; }

omega_status omega_cross_check(const omega_problem* p, int truncation, unsigned flags,
                               omega_report** out) {
  if (!p || !out) return null_argument("problem/out");
  return guarded([&] {
    omega::CrossCheckOptions options;
    options.corrupt_numerator = (flags & OMEGA_CHECK_CORRUPT_NUMERATOR) != 0;
    *out = new omega_report{omega::cross_check_report(p->problem, truncation, options)};
  });
}

int omega_report_passed(const omega_report* r) { return r && r->report.passed() ? 1 : 0; }

omega_status omega_report_render(const omega_report* r, omega_format format, char** out) {
  if (!r || !out) return null_argument("report/out");
  return guarded([&] {
    *out = duplicate(format == OMEGA_FORMAT_JSON ? omega::to_json(r->report).dump()
                                                 : omega::render_text(r->report));
  });
}

void omega_report_free(omega_report* r) { delete r; }

}  // extern "C"
