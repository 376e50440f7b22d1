#include "rde6/problem.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "rde6/specialcases.hpp"

namespace rde6 {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorKind::Parse, "spec: " + what);
}

const char* kind_name(CoefficientSequence::Kind kind) {
  switch (kind) {
    case CoefficientSequence::Kind::Constant: return "constant";
    case CoefficientSequence::Kind::Periodic: return "periodic";
    case CoefficientSequence::Kind::List: return "list";
    case CoefficientSequence::Kind::Closure: return "closure";
  }
  return "?";
}

std::vector<Rational> rational_list(const json& node, const char* field) {
  if (!node.is_array()) parse_fail(std::string(field) + " must be an array");
  std::vector<Rational> out;
  out.reserve(node.size());
  for (const auto& item : node) {
    if (!item.is_string()) parse_fail(std::string(field) + " entries must be \"p/q\" strings");
    out.push_back(Rational::parse(item.get<std::string>()));
  }
  return out;
}

json rational_array(std::span<const Rational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

long integer_field(const json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end()) parse_fail(std::string("missing field ") + field);
  if (!it->is_number_integer()) parse_fail(std::string(field) + " must be an integer");
  return it->get<long>();
}

}  // namespace

InitialConditions ProblemSpec::initial_conditions() const {
  return InitialConditions::make(initial);
}

CoefficientSequence ProblemSpec::coefficients() const {
  switch (kind) {
    case CoefficientSequence::Kind::Constant:
      if (a.size() != 1 || b.size() != 1) {
        throw Error(ErrorKind::InvalidArgument, "constant coefficients need one a and one b");
      }
      return CoefficientSequence::constant(a[0], b[0]);
    case CoefficientSequence::Kind::Periodic:
      if (period < 1 || a.size() != static_cast<std::size_t>(period)) {
        throw Error(ErrorKind::InvalidArgument, "periodic coefficients must have `period` entries");
      }
      return CoefficientSequence::periodic(a, b);
    case CoefficientSequence::Kind::List:
      return CoefficientSequence::list(a, b);
    case CoefficientSequence::Kind::Closure:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "closure coefficients have no file form");
}

ProblemSpec parse_problem_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");

  ProblemSpec spec;
  const auto initial = doc.find("initial");
  if (initial == doc.end()) parse_fail("missing field initial");
  const std::vector<Rational> seeds = rational_list(*initial, "initial");
  if (seeds.size() != 6) parse_fail("initial must hold exactly six values");
  std::copy(seeds.begin(), seeds.end(), spec.initial.begin());

  const auto coeffs = doc.find("coeffs");
  if (coeffs == doc.end() || !coeffs->is_object()) parse_fail("coeffs must be an object");
  const auto kind = coeffs->find("kind");
  if (kind == coeffs->end() || !kind->is_string()) parse_fail("coeffs.kind must be a string");
  const std::string kind_str = kind->get<std::string>();
  if (kind_str == "constant") {
    spec.kind = CoefficientSequence::Kind::Constant;
  } else if (kind_str == "periodic") {
    spec.kind = CoefficientSequence::Kind::Periodic;
  } else if (kind_str == "list") {
    spec.kind = CoefficientSequence::Kind::List;
  } else {
    parse_fail("unknown coeffs.kind '" + kind_str + "'");
  }
  const auto a = coeffs->find("a");
  const auto b = coeffs->find("b");
  if (a == coeffs->end() || b == coeffs->end()) parse_fail("coeffs needs a and b");
  spec.a = rational_list(*a, "coeffs.a");
  spec.b = rational_list(*b, "coeffs.b");
  if (spec.kind == CoefficientSequence::Kind::Periodic) {
    spec.period = integer_field(*coeffs, "period");
  } else if (coeffs->contains("period")) {
    spec.period = integer_field(*coeffs, "period");
  } else {
    spec.period = spec.kind == CoefficientSequence::Kind::Constant ? 1 : static_cast<long>(spec.a.size());
  }
  if (spec.kind == CoefficientSequence::Kind::Constant && spec.period != 1) {
    parse_fail("constant coefficients have period 1");
  }
  if (spec.kind == CoefficientSequence::Kind::List &&
      spec.period != static_cast<long>(spec.a.size())) {
    parse_fail("list period must equal the list length");
  }

  spec.horizon = integer_field(doc, "horizon");
  if (spec.horizon < 0) parse_fail("horizon must be >= 0");

  try {
    (void)spec.initial_conditions();
    (void)spec.coefficients();
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  return spec;
}

std::string emit_problem_spec(const ProblemSpec& spec) {
  json doc;
  doc["initial"] = rational_array(spec.initial);
  json coeffs;
  coeffs["kind"] = kind_name(spec.kind);
  coeffs["period"] = spec.period;
  coeffs["a"] = rational_array(spec.a);
  coeffs["b"] = rational_array(spec.b);
  doc["coeffs"] = std::move(coeffs);
  doc["horizon"] = spec.horizon;
  return doc.dump(2) + "\n";
}

std::string render_float(const Rational& value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value.to_double());
  return std::string(buf, res.ptr);
}

std::string render_csv(const std::vector<CsvRow>& rows) {
  std::string out = "m,exact,float\n";
  for (const auto& row : rows) {
    out += std::to_string(row.m);
    out += ',';
    out += row.value.str();
    out += ',';
    out += render_float(row.value);
    out += '\n';
  }
  return out;
}

const char* to_string(SpecialCase c) noexcept {
  switch (c) {
    case SpecialCase::ConstGeneral: return "constant(a!=1)";
    case SpecialCase::ConstNegOne: return "constant(a=-1)";
    case SpecialCase::ConstOne: return "constant(a=1)";
    case SpecialCase::Periodic2: return "periodic(2)";
    case SpecialCase::Periodic4: return "periodic(4)";
  }
  return "?";
}

std::optional<SpecialCase> special_case_for(const CoefficientSequence& coeffs) {
  using Kind = CoefficientSequence::Kind;
  if (coeffs.kind() != Kind::Constant && coeffs.kind() != Kind::Periodic) return std::nullopt;
  switch (coeffs.period()) {
    case 1: {
      const Rational& a = coeffs.a_values()[0];
      if (a == Rational(1)) return SpecialCase::ConstOne;
      if (a == Rational(-1)) return SpecialCase::ConstNegOne;
      return SpecialCase::ConstGeneral;
    }
    case 2: return SpecialCase::Periodic2;
    case 4: return SpecialCase::Periodic4;
    default: return std::nullopt;
  }
}

Rational special_term(long m, const InitialConditions& ic, const CoefficientSequence& coeffs) {
  const auto which = special_case_for(coeffs);
  if (!which) throw Error(ErrorKind::WrongCase, "no dedicated formula for these coefficients");
  const auto a = coeffs.a_values();
  const auto b = coeffs.b_values();
  switch (*which) {
    case SpecialCase::ConstGeneral: return term_const_general(m, ic, {a[0], b[0]});
    case SpecialCase::ConstNegOne: return term_const_a_neg1(m, ic, b[0]);
    case SpecialCase::ConstOne: return term_const_a1(m, ic, b[0]);
    case SpecialCase::Periodic2:
      return term_periodic2(m, ic, PeriodicCoeffs2{{a[0], a[1]}, {b[0], b[1]}});
    case SpecialCase::Periodic4:
      return term_periodic4(m, ic, PeriodicCoeffs4{{a[0], a[1], a[2], a[3]},
                                                   {b[0], b[1], b[2], b[3]}});
  }
  throw Error(ErrorKind::WrongCase, "unreachable special case");
}

SolveResult solve(const ProblemSpec& spec, long lo, long hi, Engine engine) {
  const InitialConditions ic = spec.initial_conditions();
  const CoefficientSequence coeffs = spec.coefficients();
  SolveResult result;
  if (engine == Engine::Auto) {
    result.dispatched = special_case_for(coeffs);
    if (!result.dispatched) {
      throw Error(ErrorKind::WrongCase, "engine auto needs constant, 2- or 4-periodic coefficients");
    }
  }
  if (lo < -5) throw Error(ErrorKind::IndexBelowSeed, "range starts below x_-5", lo);
  for (long m = lo; m <= hi; ++m) {
    try {
      Rational v = engine == Engine::Auto ? special_term(m, ic, coeffs) : term(m, ic, coeffs);
      result.rows.push_back({m, std::move(v)});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularClosedForm && e.kind() != ErrorKind::DivisionByZero) throw;
      const int j = static_cast<int>(e.detail_a());
      result.singular = WellDefinedViolation{j, e.detail_b(), m};
      break;
    }
  }
  return result;
}

ComparisonReport compare(const ProblemSpec& spec, long n, bool corrupt) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "comparison horizon must be >= 0");
  const InitialConditions ic = spec.initial_conditions();
  const CoefficientSequence coeffs = spec.coefficients();
  const Orbit orbit = iterate(ic, coeffs, static_cast<std::size_t>(n));

  ComparisonReport report;
  report.singularity = orbit.halt;
  report.special_case = special_case_for(coeffs);
  report.violations = well_defined_through_step(ic, coeffs, n - 1).violations;

  for (long m = -5; m <= orbit.last_index(); ++m) {
    ComparisonRow row{m, orbit.x(m), std::nullopt, std::nullopt, false};
    try {
      row.closed_form = term(m, ic, coeffs);
    } catch (const Error&) {
    }
    if (report.special_case) {
      try {
        row.special = special_term(m, ic, coeffs);
      } catch (const Error&) {
      }
    }
    if (corrupt && m == orbit.last_index() && row.closed_form) {
      *row.closed_form += Rational(1);
    }
    row.match = row.closed_form && *row.closed_form == row.oracle &&
                (!report.special_case || (row.special && *row.special == row.oracle));
    if (!row.match && !report.first_mismatch) report.first_mismatch = m;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string ComparisonReport::to_json() const {
  json doc;
  json row_array = json::array();
  for (const auto& r : rows) {
    json row;
    row["m"] = r.m;
    row["oracle"] = r.oracle.str();
    row["closed_form"] = r.closed_form ? json(r.closed_form->str()) : json(nullptr);
    if (special_case) row["special"] = r.special ? json(r.special->str()) : json(nullptr);
    row["match"] = r.match;
    row_array.push_back(std::move(row));
  }
  doc["rows"] = std::move(row_array);

  json summary;
  summary["first_mismatch"] = first_mismatch ? json(*first_mismatch) : json(nullptr);
  if (singularity) {
    summary["singularity"] = {{"step", singularity->step}, {"cause", to_string(singularity->cause)}};
  } else {
    summary["singularity"] = nullptr;
  }
  json viol = json::array();
  for (const auto& v : violations) viol.push_back({{"j", v.j}, {"s", v.s}, {"step", v.step}});
  summary["violations"] = std::move(viol);
  summary["special_case"] = special_case ? json(to_string(*special_case)) : json(nullptr);
  summary["all_match"] = all_match();
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

}  // namespace rde6
