#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rde6/closedform.hpp"
#include "rde6/core.hpp"
#include "rde6/oracle.hpp"
#include "rde6/problem.hpp"
#include "rde6/sampling.hpp"

namespace rde6::testing {

// Nonzero rational in [-bound, bound] with denominator <= max_den.
inline Rational bounded_rational(SampleGenerator& rng, long bound, long max_den, bool nonzero) {
  const long den = rng.integer(1, max_den);
  long num = rng.integer(-bound * den, bound * den);
  while (nonzero && num == 0) num = rng.integer(-bound * den, bound * den);
  return Rational(num, den);
}

inline std::array<Rational, 6> random_seeds(SampleGenerator& rng) {
  std::array<Rational, 6> seeds;
  for (auto& s : seeds) s = bounded_rational(rng, 10, 10, true);
  return seeds;
}

struct Instance {
  ProblemSpec spec;

  InitialConditions ic() const { return spec.initial_conditions(); }
  CoefficientSequence coeffs() const { return spec.coefficients(); }
};

// Seeds in [-10, 10] with denominators <= 10; coefficients constant or
// periodic with a period drawn from `periods`.
inline Instance random_instance(SampleGenerator& rng, const std::vector<long>& periods = {1, 2, 3, 4},
                                long horizon = 55) {
  Instance inst;
  inst.spec.initial = random_seeds(rng);
  const long p = periods[static_cast<std::size_t>(rng.integer(0, static_cast<long>(periods.size()) - 1))];
  inst.spec.kind = p == 1 ? CoefficientSequence::Kind::Constant : CoefficientSequence::Kind::Periodic;
  inst.spec.period = p;
  for (long k = 0; k < p; ++k) {
    inst.spec.a.push_back(bounded_rational(rng, 5, 6, true));
    inst.spec.b.push_back(bounded_rational(rng, 5, 6, false));
  }
  inst.spec.horizon = horizon;
  return inst;
}

// Draws until the orbit survives through x_horizon.
inline Instance random_regular_instance(SampleGenerator& rng,
                                        const std::vector<long>& periods = {1, 2, 3, 4},
                                        long horizon = 55) {
  for (;;) {
    Instance inst = random_instance(rng, periods, horizon);
    const Orbit orbit = iterate(inst.ic(), inst.coeffs(), static_cast<std::size_t>(horizon));
    if (!orbit.halt) return inst;
  }
}

inline ProblemSpec constant_spec(std::array<Rational, 6> seeds, Rational a, Rational b, long horizon) {
  ProblemSpec spec;
  spec.initial = std::move(seeds);
  spec.kind = CoefficientSequence::Kind::Constant;
  spec.period = 1;
  spec.a = {std::move(a)};
  spec.b = {std::move(b)};
  spec.horizon = horizon;
  return spec;
}

inline std::array<Rational, 6> ones() {
  return {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)};
}

// Crafted near-singular instance: an explicit coefficient list whose factor
// a_t + b_t x_{t-5} x_{t-3} is forced to zero at `target_step` when `hit` is
// true, and pushed off zero by a small rational otherwise.
struct CraftedInstance {
  ProblemSpec spec;
  long target_step;
  bool hit;
};

inline CraftedInstance crafted_instance(SampleGenerator& rng, long length, bool hit) {
  for (;;) {
    CraftedInstance out;
    out.hit = hit;
    out.target_step = rng.integer(0, length - 1);
    out.spec.initial = random_seeds(rng);
    out.spec.kind = CoefficientSequence::Kind::List;
    out.spec.period = length;
    out.spec.horizon = length;
    for (long k = 0; k < length; ++k) {
      out.spec.a.push_back(bounded_rational(rng, 5, 6, true));
      out.spec.b.push_back(bounded_rational(rng, 5, 6, false));
    }
    const auto ic = InitialConditions::make(out.spec.initial);
    const Orbit prefix =
        iterate(ic, CoefficientSequence::list(out.spec.a, out.spec.b),
                static_cast<std::size_t>(out.target_step));
    if (prefix.halt) continue;
    const auto t = static_cast<std::size_t>(out.target_step);
    const Rational product = prefix.terms[t] * prefix.terms[t + 2];
    Rational b = -out.spec.a[t] / product;
    if (!hit) b += Rational(1, rng.integer(2, 1000));
    out.spec.b[t] = b;
    return out;
  }
}

}  // namespace rde6::testing
