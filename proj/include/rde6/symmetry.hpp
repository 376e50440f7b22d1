#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rde6/core.hpp"
#include "rde6/oracle.hpp"
#include "rde6/sampling.hpp"

namespace rde6 {

// Symmetry checks for u_{n+6} = Psi = u_n u_{n+2} / (u_{n+4} (a_n + b_n u_n u_{n+2})).
//
// The derived characteristics are Q1(n, u) = beta^n u and
// Q2(n, u) = conj(beta)^n u with beta = i. Residuals are evaluated exactly at
// rational sample points: the linearized condition is a rational function of
// (u_n, u_{n+2}, u_{n+4}, a_n, b_n) of bounded degree, so vanishing at many
// generic points certifies the identity with overwhelming probability.

enum class Characteristic { Q1, Q2 };

using CharacteristicFn = std::function<GaussianRational(long n, const Rational& u)>;

GaussianRational characteristic_value(Characteristic c, long n, const Rational& u);
CharacteristicFn characteristic_fn(Characteristic c);

struct LscSample {
  long n = 0;
  Rational u_n;
  Rational u_n2;
  Rational u_n4;
  Rational a;
  Rational b;
};

// Exact residual
//   Q(n+6, Psi) + u_n u_{n+2} Q(n+4, u_{n+4}) / (u_{n+4}^2 D)
//     - a u_n Q(n+2, u_{n+2}) / (u_{n+4} D^2) - a u_{n+2} Q(n, u_n) / (u_{n+4} D^2),
// D = a + b u_n u_{n+2}. Throws Error(DegenerateSample) if a u is zero or D = 0.
GaussianRational lsc_residual(const CharacteristicFn& q, const LscSample& s);
GaussianRational lsc_residual(Characteristic c, const LscSample& s);

struct IdentityFailure {
  std::string check;
  long n;
  long k;
  GaussianRational value;
};

struct IdentityReport {
  long checked = 0;
  std::vector<IdentityFailure> failures;
  bool ok() const { return failures.empty(); }
};

// alpha_n = 0 and beta_n + beta_{n+2} = 0 for beta_n = root^n, n = 0..n_max.
// The two genuine roots are i and -i.
IdentityReport verify_reduced_system(long n_max, const GaussianRational& root);
// Both genuine roots.
IdentityReport verify_reduced_system(long n_max);

enum class Generator { X1, X2 };

// The prolonged generator applied to the invariant S_n beta^n + S_{n+2} beta^{n+2}
// leaves the coefficient sum base^n + base^{n+2}, base = beta (X1) or conj(beta) (X2).
IdentityReport generator_annihilates_invariant(Generator g, long n_max);
IdentityReport generator_annihilates_invariant(const GaussianRational& base, long n_max);

// The seven relations of gamma(n, k) for all n, k in 0..limit.
IdentityReport verify_gamma_identities(long limit);

// Q(n+4, u) = Q(n, u) and Q(n, 0) = 0 for n in 0..n_max at the given u values.
IdentityReport verify_characteristic_period(const CharacteristicFn& q, long n_max,
                                            const std::vector<Rational>& us);

// ln|u_n| + ln|u_{n+2}|, the real value of S_n beta^n + S_{n+2} beta^{n+2}.
// Throws Error(OutOfRange) when u_{n+2} is not stored.
double tilde_v(long n, const Orbit& orbit);

LscSample random_lsc_sample(SampleGenerator& rng);

struct SymmetrySuiteOptions {
  long samples = 100;
  std::uint64_t seed = 1;
  long n_max = 50;
  long gamma_limit = 16;
  // Replace both characteristics by the constant-in-n map Q(n, u) = u, which
  // leaves a nonzero residual whenever b u_n u_{n+2} != 0.
  bool counterfeit = false;
};

struct SymmetrySuiteReport {
  long residuals_checked = 0;
  long residuals_nonzero = 0;
  IdentityReport reduced;
  IdentityReport generators;
  IdentityReport gamma;
  IdentityReport period;
  std::string text;  // human-readable summary, deterministic for a given seed

  bool ok() const {
    return residuals_nonzero == 0 && reduced.ok() && generators.ok() && gamma.ok() && period.ok();
  }
};

SymmetrySuiteReport run_symmetry_suite(const SymmetrySuiteOptions& options);

}  // namespace rde6
