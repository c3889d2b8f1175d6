#include "doctest.h"

#include "omega/omega.hpp"
#include "support.hpp"

using namespace omega;
using omega::testing::P;

namespace {

OmegaProblem problem(int k, int n, int m) {
  return make_problem(k, Alphabet::of_variables(omega::testing::make_vars("x", n)),
                      Alphabet::of_variables(omega::testing::make_vars("y", m)));
}

using F = FactoredRational::Factor;

FactoredRational golden() {
  Polynomial x1 = P("x1"), x2 = P("x2"), y = P("y");
  return FactoredRational((1 + y) - y * (x1 + x2),
                          {F{1 - x1, 1}, F{1 - x2, 1}, F{1 - x1 * y, 1}, F{1 - x2 * y, 1}});
}

OmegaProblem golden_problem() {
  return make_problem(1, Alphabet::of_variables({"x1", "x2"}), Alphabet::of_variables({"y"}));
}

}  // namespace

TEST_CASE("make_problem validates n and k") {
  CHECK_THROWS_AS(make_problem(0, Alphabet{}, Alphabet{}), Error);
  CHECK_THROWS_AS(make_problem(-1, Alphabet::of_variables({"x"}), Alphabet{}), Error);
}

TEST_CASE("series oracle: worked examples") {
  OmegaProblem geo = make_problem(0, Alphabet::of_variables({"x"}), Alphabet{});
  OmegaResult r = omega_series_oracle(geo, 3);
  Polynomial x = P("x");
  CHECK(r.value.numerator() == 1 + x + x.pow(2) + x.pow(3));
  CHECK(r.value.is_polynomial());
  CHECK(r.truncation == 3);
  CHECK(r.method == Method::series);

  // Degree <= 2 part of the golden example's expansion; frozen from
  // brute_force_omega and checked against it below.
  Polynomial x1 = P("x1"), x2 = P("x2"), y = P("y");
  Polynomial expected = 1 + x1 + x2 + y + x1 * x1 + x1 * x2 + x2 * x2 + x1 * y + x2 * y;
  auto ex = omega::testing::make_vars("x", 2);
  std::vector<Var> ey{Var::intern("y")};
  CHECK(omega::testing::brute_force_omega(1, ex, ey, 2) == expected);
  CHECK(omega_series_oracle(golden_problem(), 2).value.numerator() == expected);
  CHECK(series_expand(golden(), 2) == expected);

  OmegaProblem k2 = make_problem(2, Alphabet::of_variables({"x"}), Alphabet::of_variables({"y"}));
  CHECK(omega_series_oracle(k2, 1).value.numerator() == 1 + P("x") + P("y"));
}

TEST_CASE("series oracle matches the brute-force definition") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k <= 3; ++k) {
        auto xs = omega::testing::make_vars("x", n);
        auto ys = omega::testing::make_vars("y", m);
        CHECK(omega_series_oracle(problem(k, n, m), 5).value.numerator() ==
              omega::testing::brute_force_omega(k, xs, ys, 5));
      }
}

TEST_CASE("closed form: the two-letter golden example") {
  OmegaResult r = omega_closed_form(golden_problem());
  const FactoredRational g = golden();
  CHECK(r.value.numerator() == g.numerator());
  REQUIRE(r.value.factors().size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(r.value.factors()[i].poly == g.factors()[i].poly);
    CHECK(r.value.factors()[i].multiplicity == 1);
  }
  CHECK(r.method == Method::schur);
  CHECK_FALSE(r.truncation.has_value());

  // The two surviving terms.
  CHECK(closed_form_term(golden_problem(), Partition{1}) == 1 + P("y"));
  CHECK(closed_form_term(golden_problem(), Partition{2}) == -P("y") * (P("x1") + P("x2")));
  CHECK(closed_form_term(golden_problem(), Partition{}).is_zero());
}

TEST_CASE("closed form: k = 0 with no y letters keeps everything") {
  for (int n = 1; n <= 4; ++n) {
    OmegaResult r = omega_closed_form(problem(0, n, 0));
    CHECK(r.value.numerator() == Polynomial(1));
    CHECK(r.value.factors().size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("closed form: n = 2, m = 1, k = 0 against the series") {
  OmegaProblem p = problem(0, 2, 1);
  OmegaResult r = omega_closed_form(p);
  CHECK(series_expand(r.value, 4) == omega_series_oracle(p, 4).value.numerator());
}

TEST_CASE("closed form and Lagrange reject k >= n") {
  for (auto method : {&omega_closed_form, &omega_lagrange}) {
    try {
      (void)method(problem(2, 2, 1));
      FAIL("expected KTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::KTooLarge);
    }
  }
}

TEST_CASE("Lagrange form: worked examples") {
  CHECK(rational_equal(omega_lagrange(golden_problem()).value, golden()));
  OmegaResult single = omega_lagrange(problem(0, 1, 0));
  CHECK(single.value.numerator() == Polynomial(1));
  REQUIRE(single.value.factors().size() == 1);
  CHECK(single.value.factors()[0].poly == 1 - P("x1"));
  CHECK(rational_equal(omega_lagrange(problem(1, 2, 0)).value,
                       omega_closed_form(problem(1, 2, 0)).value));
  try {
    (void)omega_lagrange(make_problem(0, Alphabet::of_variables({"x", "x"}), Alphabet{}));
    FAIL("expected RepeatedGenerators");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RepeatedGenerators);
  }
}

TEST_CASE("closed form and Lagrange share the denominator multiset") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k < n; ++k) {
        auto a = omega_closed_form(problem(k, n, m)).value;
        auto b = omega_lagrange(problem(k, n, m)).value;
        REQUIRE(a.factors().size() == b.factors().size());
        for (std::size_t i = 0; i < a.factors().size(); ++i)
          CHECK(a.factors()[i].poly == b.factors()[i].poly);
        CHECK(a.numerator() == b.numerator());
      }
}

TEST_CASE("zero_pad") {
  OmegaProblem p = golden_problem();
  OmegaProblem same = zero_pad(p, 0);
  CHECK(same.x == p.x);
  CHECK(same.y == p.y);
  CHECK(same.k == p.k);
  CHECK(same.padding.empty());
  CHECK_THROWS_AS((void)zero_pad(p, -1), Error);

  // n = 1, k = 1 needs one extra letter.
  OmegaProblem small = problem(1, 1, 1);
  OmegaProblem padded = zero_pad(small, 1);
  CHECK(padded.n() == 2);
  CHECK(padded.padding.size() == 1);
  OmegaResult closed = specialize_padding(omega_closed_form(padded), padded);
  for (const auto& f : closed.value.factors())
    for (const auto& t : f.poly.terms()) CHECK(t.mono.exponent(padded.padding[0]) == 0);
  auto xs = omega::testing::make_vars("x", 1);
  auto ys = omega::testing::make_vars("y", 1);
  CHECK(series_expand(closed.value, 6) == omega_series_oracle(small, 6).value.numerator());
  CHECK(series_expand(closed.value, 6) == omega::testing::brute_force_omega(1, xs, ys, 6));

  // Padding the golden example and specializing gives it back.
  OmegaProblem g3 = zero_pad(golden_problem(), 1);
  OmegaResult back = evaluate(g3, Method::schur);
  CHECK(rational_equal(back.value, golden()));
  CHECK(back.value.numerator() == golden().numerator());
  CHECK(rational_equal(evaluate(g3, Method::lagrange).value, golden()));

  // Repeated padding keeps fresh names.
  OmegaProblem twice = zero_pad(zero_pad(small, 1), 2);
  CHECK(twice.padding.size() == 3);
  CHECK_FALSE(twice.x.has_repeats());
}

TEST_CASE("evaluate handles k >= n after padding") {
  OmegaProblem p = problem(3, 2, 1);
  OmegaProblem padded = zero_pad(p, 2);
  OmegaResult closed = evaluate(padded, Method::schur);
  OmegaResult lagrange = evaluate(padded, Method::lagrange);
  CHECK(rational_equal(closed.value, lagrange.value));
  CHECK(series_expand(closed.value, 6) == omega_series_oracle(p, 6).value.numerator());
}

TEST_CASE("letters that are not plain variables") {
  Alphabet x({Monomial::variable("q", 2), Monomial::variable("t")});
  Alphabet y({Monomial::variable("q")});
  OmegaProblem p = make_problem(1, x, y);
  OmegaResult closed = omega_closed_form(p);
  OmegaResult lagrange = omega_lagrange(p);
  CHECK(rational_equal(closed.value, lagrange.value));
  // Substituting into the distinct-variable golden value gives the same thing.
  Bindings b{{Var::intern("x1"), P("q", 2)}, {Var::intern("x2"), P("t")}, {Var::intern("y"), P("q")}};
  CHECK(closed.value.numerator() == substitute(golden().numerator(), b));
  CHECK(cross_check(p, 5).passed());

  // Repeated letters: closed form works by specialization, Lagrange refuses.
  OmegaProblem rep = make_problem(1, Alphabet::of_variables({"x", "x"}), Alphabet::of_variables({"y"}));
  OmegaResult r = omega_closed_form(rep);
  Bindings same{{Var::intern("x1"), P("x")}, {Var::intern("x2"), P("x")}};
  CHECK(r.value.numerator() == substitute(golden().numerator(), same));
  REQUIRE(r.value.factors().size() == 2);
  CHECK(r.value.factors()[0].multiplicity == 2);
  CHECK(series_expand(r.value, 5) == omega_series_oracle(rep, 5).value.numerator());
  CHECK_THROWS_AS((void)omega_lagrange(rep), Error);
}

TEST_CASE("cross_check: the golden example passes") {
  CrossCheckReport rep = cross_check(golden_problem(), 4);
  CHECK(rep.passed());
  CHECK(rep.schur_vs_lagrange);
  CHECK(rep.schur_vs_series);
  CHECK(rep.n == 2);
  CHECK(rep.m == 1);
  CHECK(rep.k == 1);
  CHECK(rep.schur_terms == 4);
  CHECK_FALSE(rep.first_disagreement.has_value());
}

TEST_CASE("cross_check: small grid passes") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k < n; ++k) CHECK(cross_check_report(problem(k, n, m), 5).passed());
}

TEST_CASE("cross_check: corrupted numerator is caught") {
  CrossCheckOptions corrupt;
  corrupt.corrupt_numerator = true;
  CrossCheckReport rep = cross_check_report(golden_problem(), 4, corrupt);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.schur_vs_lagrange);
  CHECK_FALSE(rep.schur_vs_series);
  REQUIRE(rep.first_disagreement.has_value());
  CHECK(rep.first_disagreement->comparison == "schur/lagrange");
  CHECK(rep.first_disagreement->left != rep.first_disagreement->right);
  try {
    (void)cross_check(golden_problem(), 4, corrupt);
    FAIL("expected MethodDisagreementError");
  } catch (const MethodDisagreementError& e) {
    CHECK(e.code() == ErrorCode::MethodDisagreement);
    CHECK(std::string(e.what()).find("schur/lagrange") != std::string::npos);
    CHECK_FALSE(e.report().passed());
  }
}

TEST_CASE("closed-form index bounds are tight") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k < n; ++k) {
        OmegaProblem p = problem(k, n, m);
        // One more row, or one more column, than the enumeration allows.
        for (const auto& mu : partitions_in_box(n, m + 1))
          if (mu.length() == n) CHECK(closed_form_term(p, mu).is_zero());
        for (const auto& mu : partitions_in_box(n - 1, m + 2))
          if (mu[0] == m + 2) CHECK(closed_form_term(p, mu).is_zero());
      }
}

TEST_CASE("specializing a letter to zero reduces n") {
  for (int n = 3; n <= 4; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k < n - 1; ++k) {
        OmegaProblem big = problem(k, n, m);
        OmegaProblem small = problem(k, n - 1, m);
        Var last = Var::intern("x" + std::to_string(n));
        OmegaResult r = omega_closed_form(big);
        std::vector<F> factors;
        for (const auto& f : r.value.factors()) factors.push_back({substitute(f.poly, {{last, 0}}), f.multiplicity});
        FactoredRational specialized(substitute(r.value.numerator(), {{last, 0}}), factors);
        CHECK(rational_equal(specialized, omega_closed_form(small).value));
      }
}

TEST_CASE("results are symmetric in X and in Y") {
  OmegaProblem p = problem(1, 3, 2);
  FactoredRational base = omega_closed_form(p).value;
  std::vector<int> perm{0, 1, 2};
  auto xs = omega::testing::make_vars("x", 3);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Monomial> letters;
    for (int i : perm) letters.emplace_back(xs[static_cast<std::size_t>(i)], 1);
    OmegaProblem q = make_problem(1, Alphabet(letters), p.y);
    CHECK(rational_equal(omega_closed_form(q).value, base));
  }
  OmegaProblem swapped = make_problem(1, p.x, Alphabet::of_variables({"y2", "y1"}));
  CHECK(rational_equal(omega_closed_form(swapped).value, base));
}
