#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rde6/core.hpp"

namespace rde6 {

enum class SingularityCause { ZeroPredecessor, ZeroDenominatorFactor };

const char* to_string(SingularityCause cause) noexcept;

// x_{step+1} could not be formed.
struct SingularityReport {
  long step;
  SingularityCause cause;

  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

// Trajectory x_{-5}, ..., x_N. Index k of `terms` holds u_k = x_{k-5}.
struct Orbit {
  std::vector<Rational> terms;
  std::optional<SingularityReport> halt;

  // Largest x-index stored.
  long last_index() const { return static_cast<long>(terms.size()) - 6; }
  const Rational& x(long m) const;
  const Rational& u(long k) const;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

// Direct iteration for n = 0..count-1. Producing x_{n+1} consumes (a_n, b_n).
// A vanishing denominator stops the run and is recorded in `halt`.
Orbit iterate(const InitialConditions& ic, const CoefficientSequence& coeffs, std::size_t count);

// V_n = 1/(u_n u_{n+2}).
struct InvariantSequence {
  std::vector<Rational> values;
};

// Throws Error(TooShort) for orbits with fewer than 3 terms.
InvariantSequence invariant_sequence(const Orbit& orbit);

// r_n = V_{n+4} - (a_n V_n + b_n) for every n with V_{n+4} available.
// Throws Error(TooShort) when fewer than 5 values are given.
std::vector<Rational> check_invariant_recurrence(const InvariantSequence& v,
                                                 const CoefficientSequence& coeffs);

}  // namespace rde6
