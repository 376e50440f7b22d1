#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rde6/closedform.hpp"
#include "rde6/core.hpp"
#include "rde6/oracle.hpp"

namespace rde6 {

// Problem instance as exchanged in spec files:
//   {"initial": ["p/q" x6],
//    "coeffs": {"kind": "constant"|"periodic"|"list", "period": int,
//               "a": ["p/q", ...], "b": ["p/q", ...]},
//    "horizon": int}
struct ProblemSpec {
  std::array<Rational, 6> initial;
  CoefficientSequence::Kind kind = CoefficientSequence::Kind::Constant;
  long period = 1;
  std::vector<Rational> a;
  std::vector<Rational> b;
  long horizon = 0;

  InitialConditions initial_conditions() const;
  CoefficientSequence coefficients() const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

// Throws Error(Parse) on malformed JSON, wrong shapes, non-string rationals,
// and on values the core constructors reject (zero seeds, length mismatch).
ProblemSpec parse_problem_spec(std::string_view json);
// Canonical rendering; parse_problem_spec(emit_problem_spec(s)) == s.
std::string emit_problem_spec(const ProblemSpec& spec);

// `m,exact,float` rows, LF terminated, with the header line.
struct CsvRow {
  long m;
  Rational value;
};
std::string render_csv(const std::vector<CsvRow>& rows);
// Shortest round-trip decimal rendering of the nearest double.
std::string render_float(const Rational& value);

enum class SpecialCase { ConstGeneral, ConstNegOne, ConstOne, Periodic2, Periodic4 };
const char* to_string(SpecialCase c) noexcept;

// Which dedicated formula applies: constant (or period-1) coefficients split
// on a = 1, a = -1 and otherwise; periods 2 and 4 map to their own formulas.
std::optional<SpecialCase> special_case_for(const CoefficientSequence& coeffs);
// Throws Error(WrongCase) when no dedicated formula applies.
Rational special_term(long m, const InitialConditions& ic, const CoefficientSequence& coeffs);

enum class Engine { General, Auto };

struct SolveResult {
  std::vector<CsvRow> rows;
  std::optional<WellDefinedViolation> singular;  // (j, s) of the failing factor
  std::optional<SpecialCase> dispatched;
};

// Closed-form values for m in [lo, hi]. Stops at the first singular factor.
// Engine::Auto throws Error(WrongCase) when no dedicated formula applies.
SolveResult solve(const ProblemSpec& spec, long lo, long hi, Engine engine);

struct ComparisonRow {
  long m;
  Rational oracle;
  std::optional<Rational> closed_form;
  std::optional<Rational> special;
  bool match;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  std::optional<long> first_mismatch;
  std::optional<SingularityReport> singularity;
  std::vector<WellDefinedViolation> violations;
  std::optional<SpecialCase> special_case;

  bool all_match() const { return !first_mismatch.has_value(); }
  std::string to_json() const;
};

// Oracle against the general closed form (and the dedicated formula when one
// applies) over x_{-5}..x_n. `corrupt` perturbs one closed-form value and
// exists only to exercise the mismatch path.
ComparisonReport compare(const ProblemSpec& spec, long n, bool corrupt = false);

}  // namespace rde6
