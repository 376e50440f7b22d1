#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "rde6/core.hpp"
#include "rde6/oracle.hpp"

namespace rde6 {

// V_{4n+j} = V_j prod_{k=0}^{n-1} a_{4k+j}
//          + sum_{l=0}^{n-1} b_{4l+j} prod_{k=l+1}^{n-1} a_{4k+j},
// with V_j = 1/(u_j u_{j+2}) taken from the seeds. j must be in 0..3.
Rational v_closed(int j, long n, const InitialConditions& ic, const CoefficientSequence& coeffs);

// x_m from the telescoping product u_{4n+j} = u_j prod_{s<n} V_{4s+j} / V_{4s+j+2}.
// Throws singular_closed_form(j, s) when a factor vanishes, naming the
// well-definedness pair that fails, and Error(IndexBelowSeed) for m < -5.
Rational term(long m, const InitialConditions& ic, const CoefficientSequence& coeffs);

// The pair (j, s) fails when
//   -x_{-5+j} x_{-3+j} sum_{l=0}^{s-i} b_{4l+j} prod_{k=l+1}^{s-i} a_{4k+j}
//     == prod_{k=0}^{s-i} a_{4k+j},
// with i = 0 for j in {0, 1} and i = 1 for j in {2, 3}. Such a failure is the
// same event as the direct iteration hitting a zero denominator factor at
// step 4(s - i) + j.
struct WellDefinedViolation {
  int j;
  long s;
  long step;

  friend bool operator==(const WellDefinedViolation&, const WellDefinedViolation&) = default;
};

struct WellDefinedReport {
  bool seeds_nonzero = true;
  std::vector<long> zero_seed_positions;  // x-indices in -5..0
  std::vector<WellDefinedViolation> violations;  // sorted by step

  bool ok() const { return seeds_nonzero && violations.empty(); }
};

// Checks every (j, s) with 0 <= s <= horizon.
WellDefinedReport well_defined(const InitialConditions& ic, const CoefficientSequence& coeffs,
                               std::size_t horizon);
// Same check for raw seeds, which may contain zeros.
WellDefinedReport well_defined(const std::array<Rational, 6>& seeds,
                               const CoefficientSequence& coeffs, std::size_t horizon);
// Checks every (j, s) whose iteration step lies in 0..max_step.
WellDefinedReport well_defined_through_step(const InitialConditions& ic,
                                            const CoefficientSequence& coeffs, long max_step);

// gamma(n, k) = beta^n conj(beta)^k = i^(n-k).
GaussianRational gamma(long n, long k);

// S_n = beta^{-n} ln|u_n|. Throws Error(OutOfRange) if u_n is not stored.
std::complex<double> canonical_coordinate(long n, const Orbit& orbit);

struct UnifiedConstants {
  std::complex<double> c1;
  std::complex<double> c2;
};

// Solves c1 + c2 = ln|u_0|, beta (c1 - c2) = ln|u_1|.
UnifiedConstants unified_constants(const InitialConditions& ic);

// beta^n c1 + conj(beta)^n c2 + sum_{k<n} Re[gamma(n, k)] ln|V_k|.
// The value is real up to rounding; its real part is ln|u_n|.
std::complex<double> unified_exponent(long n, const InitialConditions& ic,
                                      const CoefficientSequence& coeffs);

// |u_n| = |x_{n-5}| via the exponent above. Magnitude only; the sign is not
// recoverable on this path.
double unified_magnitude(long n, const InitialConditions& ic, const CoefficientSequence& coeffs);

}  // namespace rde6
