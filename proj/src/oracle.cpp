#include "rde6/oracle.hpp"

#include <string>

namespace rde6 {

const char* to_string(SingularityCause cause) noexcept {
  return cause == SingularityCause::ZeroPredecessor ? "ZeroPredecessor" : "ZeroDenominatorFactor";
}

const Rational& Orbit::x(long m) const { return u(m + 5); }

const Rational& Orbit::u(long k) const {
  if (k < 0 || k >= static_cast<long>(terms.size())) {
    throw Error(ErrorKind::OutOfRange, "orbit has no u_" + std::to_string(k), k);
  }
  return terms[static_cast<std::size_t>(k)];
}

Orbit iterate(const InitialConditions& ic, const CoefficientSequence& coeffs, std::size_t count) {
  Orbit orbit;
  orbit.terms.reserve(count + 6);
  orbit.terms.assign(ic.values().begin(), ic.values().end());

  for (std::size_t n = 0; n < count; ++n) {
    // In u-terms: u_{n+6} = u_n u_{n+2} / (u_{n+4} (a_n + b_n u_n u_{n+2})).
    const Rational& un = orbit.terms[n];
    const Rational& un2 = orbit.terms[n + 2];
    const Rational& un4 = orbit.terms[n + 4];
    if (un4.is_zero()) {
      orbit.halt = SingularityReport{static_cast<long>(n), SingularityCause::ZeroPredecessor};
      break;
    }
    const Rational product = un * un2;
    const Rational factor = coeffs.a(n) + coeffs.b(n) * product;
    if (factor.is_zero()) {
      orbit.halt = SingularityReport{static_cast<long>(n), SingularityCause::ZeroDenominatorFactor};
      break;
    }
    orbit.terms.push_back(product / (un4 * factor));
  }
  return orbit;
}

InvariantSequence invariant_sequence(const Orbit& orbit) {
  if (orbit.terms.size() < 3) {
    throw Error(ErrorKind::TooShort, "invariant sequence needs at least 3 terms");
  }
  InvariantSequence v;
  v.values.reserve(orbit.terms.size() - 2);
  for (std::size_t n = 0; n + 2 < orbit.terms.size(); ++n) {
    v.values.push_back((orbit.terms[n] * orbit.terms[n + 2]).inverse());
  }
  return v;
}

std::vector<Rational> check_invariant_recurrence(const InvariantSequence& v,
                                                 const CoefficientSequence& coeffs) {
  if (v.values.size() < 5) {
    throw Error(ErrorKind::TooShort, "invariant recurrence check needs at least 5 values");
  }
  std::vector<Rational> residuals;
  residuals.reserve(v.values.size() - 4);
  for (std::size_t n = 0; n + 4 < v.values.size(); ++n) {
    residuals.push_back(v.values[n + 4] - (coeffs.a(n) * v.values[n] + coeffs.b(n)));
  }
  return residuals;
}

}  // namespace rde6
