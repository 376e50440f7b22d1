#pragma once

#include <array>

#include "rde6/core.hpp"

namespace rde6 {

// Explicit solutions for constant, 2-periodic and 4-periodic coefficients.
// Each routine evaluates its own displayed product formula directly; none of
// them goes through the general closed form. Seeds are named
// c, d, e, f, g, h = x_{-5}, ..., x_0 throughout. A vanishing denominator
// raises singular_closed_form(j, s) with j the residue class of m + 5.

struct ConstantCoeffs {
  Rational a;
  Rational b;
};

struct PeriodicCoeffs2 {
  std::array<Rational, 2> a;
  std::array<Rational, 2> b;
  // The 2-periodic derivation assumes a_0 != a_1 and b_0 != b_1. The
  // formulas stay valid without it, so it is reported but never enforced.
  bool distinct() const { return a[0] != a[1] && b[0] != b[1]; }
};

struct PeriodicCoeffs4 {
  std::array<Rational, 4> a;
  std::array<Rational, 4> b;
};

// a != 1. Factors a^s + b*p*(1 - a^s)/(1 - a). Throws Error(WrongCase) if a == 1.
Rational term_const_general(long m, const InitialConditions& ic, const ConstantCoeffs& cc);

// a = -1. Closed in powers of ((-1 + b*p) / (-1 + b*q)) with floor((n-1)/2)
// exponents split on the parity of n.
Rational term_const_a_neg1(long m, const InitialConditions& ic, const Rational& b);

// a = 1. Factors 1 + b*p*s.
Rational term_const_a1(long m, const InitialConditions& ic, const Rational& b);

Rational term_periodic2(long m, const InitialConditions& ic, const PeriodicCoeffs2& pc);
Rational term_periodic4(long m, const InitialConditions& ic, const PeriodicCoeffs4& pc);

// Which parity of n receives the bare floor((n-1)/2) exponent in the a = -1
// formulas; the other parity gets floor((n-1)/2) + 1.
enum class FloorParity { Odd, Even };

// The a = -1 formulas with an explicit parity choice per residue class. The
// odd-n branch of classes 2 and 3 carries the extra leading 1/(-1 + b*p)
// factor in either choice.
Rational term_const_a_neg1_with(long m, const InitialConditions& ic, const Rational& b,
                                const std::array<FloorParity, 4>& parity);

// Parity per class that reproduces direct iteration: every class takes the
// bare floor exponent on odd n. Classes 0 and 1 then share one shape, and the
// odd branch of classes 2 and 3 is (1/(-1 + b*p)) * r^floor((n-1)/2).
inline constexpr std::array<FloorParity, 4> kNegOneParity = {
    FloorParity::Odd, FloorParity::Odd, FloorParity::Odd, FloorParity::Odd};

// sum_{l=0}^{count-1} a^l, by repeated addition.
Rational geometric_sum(const Rational& a, long count);

}  // namespace rde6
