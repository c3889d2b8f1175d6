#include "doctest.h"

#include <cstring>
#include <string>

#include "omega/omega.h"

namespace {

const char* const kGolden = "omega(lambda / ((1-x1*lambda)*(1-x2*lambda)*(1-y/lambda)))";
const char* const kGoldenText =
    "(-1*x1*y - 1*x2*y + y + 1) / ((1 - x1)*(1 - x2)*(1 - x1*y)*(1 - x2*y))";

std::string take(char* s) {
  std::string out = s ? s : "";
  omega_string_free(s);
  return out;
}

std::string render(const omega_problem* p, omega_method method, omega_format format, int trunc = 8) {
  omega_result* r = nullptr;
  REQUIRE(omega_evaluate(p, method, trunc, &r) == OMEGA_OK);
  char* text = nullptr;
  REQUIRE(omega_result_render(r, format, &text) == OMEGA_OK);
  omega_result_free(r);
  return take(text);
}

}  // namespace

TEST_CASE("C API: parse, inspect and evaluate") {
  omega_problem* p = nullptr;
  REQUIRE(omega_problem_parse(kGolden, nullptr, &p) == OMEGA_OK);
  CHECK(omega_problem_k(p) == 1);
  CHECK(omega_problem_n(p) == 2);
  CHECK(omega_problem_m(p) == 1);
  char* text = nullptr;
  REQUIRE(omega_problem_render(p, &text) == OMEGA_OK);
  CHECK(take(text) == kGolden);
  CHECK(render(p, OMEGA_METHOD_SCHUR, OMEGA_FORMAT_TEXT) == kGoldenText);
  CHECK(render(p, OMEGA_METHOD_LAGRANGE, OMEGA_FORMAT_TEXT) == kGoldenText);
  omega_problem_free(p);
}

TEST_CASE("C API: letters and JSON series") {
  omega_problem* p = nullptr;
  REQUIRE(omega_problem_from_letters(0, "x", nullptr, &p) == OMEGA_OK);
  CHECK(omega_problem_m(p) == 0);
  const std::string json = render(p, OMEGA_METHOD_SERIES, OMEGA_FORMAT_JSON, 3);
  CHECK(json ==
        R"({"denominator_factors":[],"method":"series","numerator":[)"
        R"({"coeff":"1","exps":{"x":3}},{"coeff":"1","exps":{"x":2}},)"
        R"({"coeff":"1","exps":{"x":1}},{"coeff":"1","exps":{}}],"truncation":3})");
  omega_problem_free(p);
}

TEST_CASE("C API: JSON output is byte-identical across runs") {
  std::string first;
  for (int run = 0; run < 3; ++run) {
    omega_problem* p = nullptr;
    REQUIRE(omega_problem_from_letters(1, "x1,x2,q^2*t", "y,z", &p) == OMEGA_OK);
    std::string s = render(p, OMEGA_METHOD_SCHUR, OMEGA_FORMAT_JSON);
    omega_report* rep = nullptr;
    REQUIRE(omega_cross_check(p, 4, 0, &rep) == OMEGA_OK);
    CHECK(omega_report_passed(rep) == 1);
    char* rs = nullptr;
    REQUIRE(omega_report_render(rep, OMEGA_FORMAT_JSON, &rs) == OMEGA_OK);
    s += take(rs);
    omega_report_free(rep);
    omega_problem_free(p);
    if (run == 0)
      first = s;
    else
      CHECK(s == first);
  }
}

TEST_CASE("C API: error statuses and messages") {
  omega_problem* p = nullptr;
  CHECK(omega_problem_parse("omega(lambda / ((1-x*lambda)", nullptr, &p) == OMEGA_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::strstr(omega_last_error(), "line 1") != nullptr);
  CHECK(omega_problem_parse("omega(lambda^2 / (1-x*lambda^2))", nullptr, &p) == OMEGA_ERR_STRUCTURE);
  CHECK(std::strlen(omega_last_error()) > 0);
  CHECK(omega_problem_parse(nullptr, nullptr, &p) == OMEGA_ERR_INVALID_ARGUMENT);
  CHECK(omega_problem_parse(kGolden, nullptr, nullptr) == OMEGA_ERR_INVALID_ARGUMENT);
  CHECK(omega_problem_from_letters(-1, "x", "", &p) == OMEGA_ERR_INVALID_ARGUMENT);
  CHECK(omega_problem_from_letters(0, "", "", &p) == OMEGA_ERR_INVALID_ARGUMENT);

  REQUIRE(omega_problem_from_letters(2, "x1,x2", "y", &p) == OMEGA_OK);
  omega_result* r = nullptr;
  CHECK(omega_evaluate(p, OMEGA_METHOD_SCHUR, 8, &r) == OMEGA_ERR_K_TOO_LARGE);
  CHECK(r == nullptr);
  CHECK(omega_evaluate(p, OMEGA_METHOD_SERIES, 4, &r) == OMEGA_OK);
  omega_result_free(r);
  omega_problem* padded = nullptr;
  CHECK(omega_problem_pad(p, -1, &padded) == OMEGA_ERR_INVALID_ARGUMENT);
  REQUIRE(omega_problem_pad(p, 1, &padded) == OMEGA_OK);
  CHECK(omega_problem_n(padded) == 3);
  CHECK(omega_evaluate(padded, OMEGA_METHOD_SCHUR, 8, &r) == OMEGA_OK);
  omega_result_free(r);
  omega_problem_free(padded);
  omega_problem_free(p);

  REQUIRE(omega_problem_from_letters(0, "x,x", "", &p) == OMEGA_OK);
  CHECK(omega_evaluate(p, OMEGA_METHOD_LAGRANGE, 8, &r) == OMEGA_ERR_REPEATED_GENERATORS);
  CHECK(omega_evaluate(p, static_cast<omega_method>(42), 8, &r) == OMEGA_ERR_INVALID_ARGUMENT);
  omega_problem_free(p);

  CHECK(std::string(omega_status_name(OMEGA_OK)) == "ok");
  CHECK(std::string(omega_status_name(OMEGA_ERR_DISAGREEMENT)).size() > 0);
  omega_problem_free(nullptr);
  omega_result_free(nullptr);
  omega_report_free(nullptr);
  omega_string_free(nullptr);
}

TEST_CASE("C API: corrupted cross-check reports a disagreement without failing") {
  omega_problem* p = nullptr;
  REQUIRE(omega_problem_parse(kGolden, nullptr, &p) == OMEGA_OK);
  omega_report* rep = nullptr;
  REQUIRE(omega_cross_check(p, 5, OMEGA_CHECK_CORRUPT_NUMERATOR, &rep) == OMEGA_OK);
  CHECK(omega_report_passed(rep) == 0);
  char* text = nullptr;
  REQUIRE(omega_report_render(rep, OMEGA_FORMAT_TEXT, &text) == OMEGA_OK);
  const std::string s = take(text);
  CHECK(s.find("DISAGREEMENT") != std::string::npos);
  CHECK(s.find("first disagreement") != std::string::npos);
  omega_report_free(rep);
  omega_problem_free(p);
}
