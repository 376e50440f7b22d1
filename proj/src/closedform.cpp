#include "rde6/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rde6 {

namespace {

struct AffineParts {
  Rational product{1};  // prod_{k=0}^{t} a_{4k+j}
  Rational sum{0};      // sum_{l=0}^{t} b_{4l+j} prod_{k=l+1}^{t} a_{4k+j}
};

// Empty product and sum for t < 0. The sum is accumulated from l = t down,
// carrying the running tail product prod_{k=l+1}^{t} a_{4k+j}.
AffineParts affine_parts(int j, long t, const CoefficientSequence& coeffs) {
  AffineParts parts;
  Rational tail{1};
  for (long l = t; l >= 0; --l) {
    const auto idx = static_cast<std::size_t>(4 * l + j);
    parts.sum += coeffs.b(idx) * tail;
    tail *= coeffs.a(idx);
  }
  parts.product = std::move(tail);
  return parts;
}

int offset_for(int j) { return j < 2 ? 0 : 1; }

// V_k with k >= 4 vanishes exactly when the pair (k mod 4, k/4 - 1 + i) fails.
[[noreturn]] void throw_zero_v(long k) {
  const int j = static_cast<int>(k % 4);
  throw singular_closed_form(j, k / 4 - 1 + offset_for(j));
}

Rational v_at(long k, const InitialConditions& ic, const CoefficientSequence& coeffs) {
  return v_closed(static_cast<int>(k % 4), k / 4, ic, coeffs);
}

void check_condition(const std::array<Rational, 6>& seeds, const CoefficientSequence& coeffs,
                     int j, long s, WellDefinedReport& report) {
  const long t = s - offset_for(j);
  const AffineParts parts = affine_parts(j, t, coeffs);
  const Rational lhs = -(seeds[static_cast<std::size_t>(j)] *
                         seeds[static_cast<std::size_t>(j + 2)] * parts.sum);
  if (lhs == parts.product) {
    report.violations.push_back({j, s, 4 * t + j});
  }
}

void check_seeds(const std::array<Rational, 6>& seeds, WellDefinedReport& report) {
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    if (seeds[k].is_zero()) {
      report.seeds_nonzero = false;
      report.zero_seed_positions.push_back(static_cast<long>(k) - 5);
    }
  }
}

void sort_by_step(WellDefinedReport& report) {
  std::sort(report.violations.begin(), report.violations.end(),
            [](const auto& l, const auto& r) { return l.step < r.step; });
}

std::complex<double> i_pow_float(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

Rational v_closed(int j, long n, const InitialConditions& ic, const CoefficientSequence& coeffs) {
  if (j < 0 || j > 3 || n < 0) {
    throw Error(ErrorKind::InvalidArgument, "v_closed needs j in 0..3 and n >= 0");
  }
  const Rational v_seed = (ic.u(j) * ic.u(j + 2)).inverse();
  const AffineParts parts = affine_parts(j, n - 1, coeffs);
  return v_seed * parts.product + parts.sum;
}

Rational term(long m, const InitialConditions& ic, const CoefficientSequence& coeffs) {
  const TermIndex idx = decompose_index(m);
  Rational value = ic.u(idx.j);
  for (long s = 0; s < idx.n; ++s) {
    const long num_k = 4 * s + idx.j;
    const long den_k = num_k + 2;
    const Rational num = v_at(num_k, ic, coeffs);
    const Rational den = v_at(den_k, ic, coeffs);
    if (num.is_zero()) throw_zero_v(num_k);
    if (den.is_zero()) throw_zero_v(den_k);
    value *= num / den;
  }
  return value;
}

WellDefinedReport well_defined(const std::array<Rational, 6>& seeds,
                               const CoefficientSequence& coeffs, std::size_t horizon) {
  WellDefinedReport report;
  check_seeds(seeds, report);
  for (long s = 0; s <= static_cast<long>(horizon); ++s) {
    for (int j = 0; j < 4; ++j) check_condition(seeds, coeffs, j, s, report);
  }
  sort_by_step(report);
  return report;
}

WellDefinedReport well_defined(const InitialConditions& ic, const CoefficientSequence& coeffs,
                               std::size_t horizon) {
  return well_defined(ic.values(), coeffs, horizon);
}

WellDefinedReport well_defined_through_step(const InitialConditions& ic,
                                            const CoefficientSequence& coeffs, long max_step) {
  WellDefinedReport report;
  check_seeds(ic.values(), report);
  for (long step = 0; step <= max_step; ++step) {
    const int j = static_cast<int>(step % 4);
    check_condition(ic.values(), coeffs, j, step / 4 + offset_for(j), report);
  }
  return report;
}

GaussianRational gamma(long n, long k) { return GaussianRational::i_pow(n - k); }

std::complex<double> canonical_coordinate(long n, const Orbit& orbit) {
  return i_pow_float(-n) * orbit.u(n).log_abs();
}

UnifiedConstants unified_constants(const InitialConditions& ic) {
  const double l0 = ic.u(0).log_abs();
  const double l1 = ic.u(1).log_abs();
  // c1 - c2 = ln|u_1| / i = -i ln|u_1|.
  const std::complex<double> diff{0.0, -l1};
  return {(l0 + diff) / 2.0, (l0 - diff) / 2.0};
}

std::complex<double> unified_exponent(long n, const InitialConditions& ic,
                                      const CoefficientSequence& coeffs) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "unified_exponent needs n >= 0");
  const UnifiedConstants c = unified_constants(ic);
  std::complex<double> exponent = i_pow_float(n) * c.c1 + i_pow_float(-n) * c.c2;
  double sum = 0.0;
  for (long k = 0; k < n; ++k) {
    const Rational weight = gamma(n, k).re();
    if (weight.is_zero()) continue;
    const Rational v = v_at(k, ic, coeffs);
    if (v.is_zero()) throw_zero_v(k);
    sum += weight.to_double() * v.log_abs();
  }
  return exponent + sum;
}

double unified_magnitude(long n, const InitialConditions& ic, const CoefficientSequence& coeffs) {
  return std::exp(unified_exponent(n, ic, coeffs).real());
}

}  // namespace rde6
