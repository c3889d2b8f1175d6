// omega: command-line front end to the Omega elimination engine.
//
//   omega --expr "omega(lambda / ((1-x1*lambda)*(1-x2*lambda)*(1-y/lambda)))"
//   omega --k 0 --x x --method series --truncate 3 --format json
//   omega --expr "..." --check --truncate 5
//
// Exit codes: 0 ok, 1 input error, 2 method disagreement, 3 precondition
// violation.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "omega/omega.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitPrecondition = 3;

struct ProblemDeleter {
  void operator()(omega_problem* p) const { omega_problem_free(p); }
};
struct ResultDeleter {
  void operator()(omega_result* r) const { omega_result_free(r); }
};
struct ReportDeleter {
  void operator()(omega_report* r) const { omega_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { omega_string_free(s); }
};

using ProblemPtr = std::unique_ptr<omega_problem, ProblemDeleter>;
using ResultPtr = std::unique_ptr<omega_result, ResultDeleter>;
using ReportPtr = std::unique_ptr<omega_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(omega_status status) {
  switch (status) {
    case OMEGA_OK: return kExitOk;
    case OMEGA_ERR_DISAGREEMENT: return kExitDisagreement;
    case OMEGA_ERR_K_TOO_LARGE:
    case OMEGA_ERR_REPEATED_GENERATORS:
    case OMEGA_ERR_PRECONDITION:
    case OMEGA_ERR_ALGEBRA: return kExitPrecondition;
    default: return kExitInput;
  }
}

int report_failure(omega_status status) {
  std::fprintf(stderr, "omega: %s: %s\n", omega_status_name(status), omega_last_error());
  if (status == OMEGA_ERR_K_TOO_LARGE)
    std::fprintf(stderr, "omega: hint: pass --pad R so that k < n + R\n");
  return exit_code_for(status);
}

struct Options {
  std::string expr;
  int k = 0;
  std::string x;
  std::string y;
  std::string method = "schur";
  int truncate = 8;
  bool check = false;
  std::string format = "text";
  std::string lambda;
  int pad = 0;
  bool corrupt = false;
};

int run(const Options& opt, bool have_expr, bool have_lambda) {
  omega_problem* raw = nullptr;
  omega_status status =
      have_expr ? omega_problem_parse(opt.expr.c_str(), have_lambda ? opt.lambda.c_str() : nullptr, &raw)
                : omega_problem_from_letters(opt.k, opt.x.c_str(), opt.y.c_str(), &raw);
  if (status != OMEGA_OK) return report_failure(status);
  ProblemPtr problem(raw);

  if (opt.pad > 0) {
    status = omega_problem_pad(problem.get(), opt.pad, &raw);
    if (status != OMEGA_OK) return report_failure(status);
    problem.reset(raw);
  }

  const omega_format format = opt.format == "json" ? OMEGA_FORMAT_JSON : OMEGA_FORMAT_TEXT;

  if (opt.check) {
    omega_report* rep = nullptr;
    status = omega_cross_check(problem.get(), opt.truncate,
                               opt.corrupt ? OMEGA_CHECK_CORRUPT_NUMERATOR : 0u, &rep);
    if (status != OMEGA_OK) return report_failure(status);
    ReportPtr report(rep);
    char* text = nullptr;
    status = omega_report_render(report.get(), format, &text);
    if (status != OMEGA_OK) return report_failure(status);
    StringPtr owned(text);
    std::fputs(owned.get(), stdout);
    if (format == OMEGA_FORMAT_JSON) std::fputc('\n', stdout);
    if (!omega_report_passed(report.get())) {
      std::fprintf(stderr, "omega: methods disagree\n");
      return kExitDisagreement;
    }
    return kExitOk;
  }

  std::vector<std::pair<std::string, omega_method>> methods;
  if (opt.method == "all" || opt.method == "schur") methods.emplace_back("schur", OMEGA_METHOD_SCHUR);
  if (opt.method == "all" || opt.method == "lagrange")
    methods.emplace_back("lagrange", OMEGA_METHOD_LAGRANGE);
  if (opt.method == "all" || opt.method == "series") methods.emplace_back("series", OMEGA_METHOD_SERIES);

  std::vector<std::string> rendered;
  for (const auto& [name, method] : methods) {
    omega_result* res = nullptr;
    status = omega_evaluate(problem.get(), method, opt.truncate, &res);
    if (status != OMEGA_OK) return report_failure(status);
    ResultPtr result(res);
    char* text = nullptr;
    status = omega_result_render(result.get(), format, &text);
    if (status != OMEGA_OK) return report_failure(status);
    StringPtr owned(text);
    if (methods.size() > 1 && format == OMEGA_FORMAT_TEXT)
      rendered.push_back(name + ": " + owned.get());
    else
      rendered.emplace_back(owned.get());
  }

  if (format == OMEGA_FORMAT_JSON && methods.size() > 1) {
    std::string joined = "[";
    for (std::size_t i = 0; i < rendered.size(); ++i) joined += (i ? "," : "") + rendered[i];
    std::printf("%s]\n", joined.c_str());
  } else {
    for (const auto& line : rendered) std::printf("%s\n", line.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate MacMahon's Omega operator on lambda^k / prod(1 - x lambda) prod(1 - y/lambda)"};
  Options opt;

  auto* expr = app.add_option("--expr", opt.expr, "Omega expression, e.g. omega(lambda / ((1-x1*lambda)*(1-y/lambda)))");
  auto* k = app.add_option("--k", opt.k, "Power of lambda in the numerator")->check(CLI::NonNegativeNumber);
  auto* x = app.add_option("--x", opt.x, "Comma-separated letters x with factors (1 - x*lambda)");
  auto* y = app.add_option("--y", opt.y, "Comma-separated letters y with factors (1 - y/lambda)");
  expr->excludes(k)->excludes(x)->excludes(y);
  k->needs(x);
  y->needs(x);
  app.add_option("--method", opt.method, "Evaluation method")
      ->check(CLI::IsMember({"schur", "lagrange", "series", "all"}));
  app.add_option("--truncate", opt.truncate, "Total-degree cutoff for the series method and --check")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--check", opt.check, "Cross-check all three methods and print a report");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* lambda = app.add_option("--lambda", opt.lambda, "Name of the eliminated variable (default: lambda)");
  app.add_option("--pad", opt.pad, "Append R letters to X and specialize them to 0 afterwards")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--corrupt-numerator", opt.corrupt,
               "Negative control for --check: perturb the closed-form numerator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "omega: %s\n", e.what());
    return kExitInput;
  }

  if (expr->count() == 0 && x->count() == 0) {
    std::fprintf(stderr, "omega: either --expr or --x (with --k, --y) is required\n");
    return kExitInput;
  }
  return run(opt, expr->count() > 0, lambda->count() > 0);
}
