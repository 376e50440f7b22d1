#include <doctest.h>

#include "rde6/problem.hpp"
#include "support.hpp"

using namespace rde6;

namespace {

const char* kOnesSpec = R"({"initial": ["1/1","1","1","1","2","1"],
  "coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}, "horizon": 10})";

}  // namespace

TEST_CASE("parse a spec file") {
  const auto spec = parse_problem_spec(kOnesSpec);
  CHECK(spec.initial[4] == Rational(2));
  CHECK(spec.kind == CoefficientSequence::Kind::Constant);
  CHECK(spec.period == 1);
  CHECK(spec.horizon == 10);

  const auto list = parse_problem_spec(R"({"initial": ["1","2","3","4","5","6"],
    "coeffs": {"kind": "list", "a": ["1","2"], "b": ["0","-1/3"]}, "horizon": 2})");
  CHECK(list.period == 2);
  CHECK(list.coefficients().b(1) == Rational(-1, 3));
}

TEST_CASE("malformed specs are parse errors") {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}, "horizon": 1})",
      R"({"initial": ["1","1","1","1","1"], "coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}, "horizon": 1})",
      R"({"initial": ["1","1","0","1","1","1"], "coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}, "horizon": 1})",
      R"({"initial": [1,1,1,1,1,1], "coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}, "horizon": 1})",
      R"({"initial": ["1","1","1","1","1","1"], "coeffs": {"kind": "constant", "a": [0.5], "b": ["0"]}, "horizon": 1})",
      R"({"initial": ["1","1","1","1","1","1"], "coeffs": {"kind": "wavy", "a": ["1"], "b": ["0"]}, "horizon": 1})",
      R"({"initial": ["1","1","1","1","1","1"], "coeffs": {"kind": "periodic", "a": ["1","2"], "b": ["0","0"]}, "horizon": 1})",
      R"({"initial": ["1","1","1","1","1","1"], "coeffs": {"kind": "periodic", "period": 3, "a": ["1","2"], "b": ["0","0"]}, "horizon": 1})",
      R"({"initial": ["1","1","1","1","1","1"], "coeffs": {"kind": "list", "a": ["1","2"], "b": ["0"]}, "horizon": 1})",
      R"({"initial": ["1","1","1","1","1","1"], "coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}, "horizon": -1})",
      R"({"initial": ["1","1","1","1","1","1"], "coeffs": {"kind": "constant", "a": ["1"], "b": ["0"]}})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    try {
      (void)parse_problem_spec(text);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
    }
  }
}

TEST_CASE("property: emitted specs parse back to the same problem, byte-stable") {
  SampleGenerator rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto spec = testing::random_instance(rng, {1, 2, 3, 4, 7}, rng.integer(0, 80)).spec;
    const std::string text = emit_problem_spec(spec);
    const auto parsed = parse_problem_spec(text);
    CHECK(parsed == spec);
    CHECK(emit_problem_spec(parsed) == text);
  }
}

TEST_CASE("csv rendering") {
  const std::string csv = render_csv({{-5, Rational(1)}, {1, Rational(1, 2)}, {2, Rational(-7, 3)}});
  CHECK(csv == "m,exact,float\n-5,1/1,1\n1,1/2,0.5\n2,-7/3,-2.3333333333333335\n");
}

TEST_CASE("special case dispatch") {
  CHECK(special_case_for(CoefficientSequence::constant(1, 3)) == SpecialCase::ConstOne);
  CHECK(special_case_for(CoefficientSequence::constant(-1, 3)) == SpecialCase::ConstNegOne);
  CHECK(special_case_for(CoefficientSequence::constant(2, 3)) == SpecialCase::ConstGeneral);
  CHECK(special_case_for(CoefficientSequence::periodic({1}, {3})) == SpecialCase::ConstOne);
  CHECK(special_case_for(CoefficientSequence::periodic({1, 2}, {3, 4})) == SpecialCase::Periodic2);
  CHECK(special_case_for(CoefficientSequence::periodic({1, 2, 3, 4}, {3, 4, 5, 6})) == SpecialCase::Periodic4);
  CHECK_FALSE(special_case_for(CoefficientSequence::periodic({1, 2, 3}, {3, 4, 5})));
  CHECK_FALSE(special_case_for(CoefficientSequence::list({1}, {1})));
}

TEST_CASE("solve: seeds, dispatch and engine mismatch") {
  const auto spec = parse_problem_spec(kOnesSpec);
  const auto seeds = solve(spec, -5, -2, Engine::General);
  REQUIRE(seeds.rows.size() == 4);
  for (const auto& row : seeds.rows) CHECK(row.value == spec.initial[static_cast<std::size_t>(row.m + 5)]);

  const auto autos = solve(spec, -5, 20, Engine::Auto);
  CHECK(autos.dispatched == SpecialCase::ConstOne);
  const auto general = solve(spec, -5, 20, Engine::General);
  REQUIRE(autos.rows.size() == general.rows.size());
  for (std::size_t i = 0; i < autos.rows.size(); ++i) CHECK(autos.rows[i].value == general.rows[i].value);

  auto three = spec;
  three.kind = CoefficientSequence::Kind::Periodic;
  three.period = 3;
  three.a = {1, 2, 3};
  three.b = {0, 0, 0};
  CHECK_THROWS_AS(solve(three, -5, 3, Engine::Auto), Error);
  CHECK_NOTHROW(solve(three, -5, 3, Engine::General));
}

TEST_CASE("solve stops at a singular factor") {
  const auto spec = testing::constant_spec(testing::ones(), 1, -1, 10);
  const auto result = solve(spec, -5, 10, Engine::General);
  REQUIRE(result.singular);
  CHECK(result.singular->j == 0);
  CHECK(result.singular->s == 0);
  CHECK(result.rows.size() == 6);  // x_{-5}..x_0; x_1 needs V_4
}

TEST_CASE("compare: regular, corrupted and near-singular") {
  SampleGenerator rng(5);
  const auto inst = testing::random_regular_instance(rng, {2}, 30);
  const auto ok = compare(inst.spec, 30);
  CHECK(ok.all_match());
  CHECK(ok.rows.size() == 36);
  CHECK(ok.special_case == SpecialCase::Periodic2);

  const auto bad = compare(inst.spec, 30, true);
  CHECK_FALSE(bad.all_match());
  CHECK(bad.first_mismatch == 30);

  const auto singular = compare(testing::constant_spec(testing::ones(), 1, -1, 10), 10);
  REQUIRE(singular.singularity);
  CHECK(singular.singularity->step == 0);
  REQUIRE_FALSE(singular.violations.empty());
  CHECK(singular.violations.front() == WellDefinedViolation{0, 0, 0});
  CHECK(singular.all_match());

  const std::string json = singular.to_json();
  CHECK(json.find("\"first_mismatch\": null") != std::string::npos);
  CHECK(json.find("\"cause\": \"ZeroDenominatorFactor\"") != std::string::npos);
}
