#include "rde6/specialcases.hpp"

#include <functional>

namespace rde6 {

namespace {

struct Seeds {
  Rational c, d, e, f, g, h;

  explicit Seeds(const InitialConditions& ic)
      : c(ic.x(-5)), d(ic.x(-4)), e(ic.x(-3)), f(ic.x(-2)), g(ic.x(-1)), h(ic.x(0)) {}
};

using Factor = std::function<Rational(long)>;

// Leading monomial of each residue class:
//   x_{4n-5} = g^n / c^{n-1}   x_{4n-4} = h^n / d^{n-1}
//   x_{4n-3} = c^n e / g^n     x_{4n-2} = d^n f / h^n
Rational prefactor(int j, long n, const Seeds& x) {
  switch (j) {
    case 0: return x.g.pow(n) * x.c.pow(1 - n);
    case 1: return x.h.pow(n) * x.d.pow(1 - n);
    case 2: return x.c.pow(n) * x.e * x.g.pow(-n);
    default: return x.d.pow(n) * x.f * x.h.pow(-n);
  }
}

Rational product_formula(int j, long n, const Seeds& x, const Factor& num, const Factor& den) {
  Rational value = prefactor(j, n, x);
  for (long s = 0; s < n; ++s) {
    const Rational d = den(s);
    if (d.is_zero()) throw singular_closed_form(j, s);
    value *= num(s) / d;
  }
  return value;
}

// a^s + b * p * sum_{l=0}^{count-1} a^l
Rational periodic_factor(const Rational& a, long s, const Rational& b, const Rational& p,
                         long count) {
  return a.pow(s) + b * p * geometric_sum(a, count);
}

}  // namespace

Rational geometric_sum(const Rational& a, long count) {
  Rational sum{0};
  Rational power{1};
  for (long l = 0; l < count; ++l) {
    sum += power;
    power *= a;
  }
  return sum;
}

Rational term_const_general(long m, const InitialConditions& ic, const ConstantCoeffs& cc) {
  if (cc.a == Rational(1)) throw Error(ErrorKind::WrongCase, "term_const_general needs a != 1");
  const TermIndex idx = decompose_index(m);
  const Seeds x(ic);
  const Rational& a = cc.a;
  const Rational& b = cc.b;
  const Rational one_minus_a = Rational(1) - a;
  // a^s + b*p*(1 - a^s)/(1 - a)
  auto factor = [&](long s, const Rational& p) {
    return a.pow(s) + b * p * (Rational(1) - a.pow(s)) / one_minus_a;
  };
  const Rational ce = x.c * x.e, eg = x.e * x.g, df = x.d * x.f, fh = x.f * x.h;
  switch (idx.j) {
    case 0:
      return product_formula(0, idx.n, x, [&](long s) { return factor(s, ce); },
                             [&](long s) { return factor(s, eg); });
    case 1:
      return product_formula(1, idx.n, x, [&](long s) { return factor(s, df); },
                             [&](long s) { return factor(s, fh); });
    case 2:
      return product_formula(2, idx.n, x, [&](long s) { return factor(s, eg); },
                             [&](long s) { return factor(s + 1, ce); });
    default:
      return product_formula(3, idx.n, x, [&](long s) { return factor(s, fh); },
                             [&](long s) { return factor(s + 1, df); });
  }
}

Rational term_const_a_neg1_with(long m, const InitialConditions& ic, const Rational& b,
                                const std::array<FloorParity, 4>& parity) {
  const TermIndex idx = decompose_index(m);
  const long n = idx.n;
  if (n == 0) return ic.x(m);

  const Seeds x(ic);
  // floor((n-1)/2) for n >= 1
  const long floor_exp = (n - 1) / 2;
  const bool odd = (n % 2) == 1;
  const bool bare = parity[static_cast<std::size_t>(idx.j)] == FloorParity::Odd ? odd : !odd;
  const long exponent = bare ? floor_exp : floor_exp + 1;

  auto ratio = [&](const Rational& num, const Rational& den, int class_j) {
    if (den.is_zero()) throw singular_closed_form(class_j, class_j < 2 ? 0 : 1);
    return num / den;
  };
  // r^exponent, leaving r unevaluated when the exponent is zero.
  auto power = [&](const Rational& num, const Rational& den, int class_j) {
    return exponent == 0 ? Rational(1) : ratio(num, den, class_j).pow(exponent);
  };
  const Rational one{1};
  const Rational bce = b * x.c * x.e - one;  // -1 + bce
  const Rational beg = b * x.e * x.g - one;
  const Rational bdf = b * x.d * x.f - one;
  const Rational bfh = b * x.f * x.h - one;

  switch (idx.j) {
    case 0:
      return x.c.pow(1 - n) * x.g.pow(n) * power(bce, beg, 2);
    case 1:
      return x.d.pow(1 - n) * x.h.pow(n) * power(bdf, bfh, 3);
    case 2: {
      Rational value = x.c.pow(n) * x.g.pow(-n) * x.e * power(beg, bce, 0);
      return odd ? ratio(value, bce, 0) : value;
    }
    default: {
      Rational value = x.d.pow(n) * x.h.pow(-n) * x.f * power(bfh, bdf, 1);
      return odd ? ratio(value, bdf, 1) : value;
    }
  }
}

Rational term_const_a_neg1(long m, const InitialConditions& ic, const Rational& b) {
  return term_const_a_neg1_with(m, ic, b, kNegOneParity);
}

Rational term_const_a1(long m, const InitialConditions& ic, const Rational& b) {
  const TermIndex idx = decompose_index(m);
  const Seeds x(ic);
  // 1 + b*p*k
  auto factor = [&](const Rational& p, long k) { return Rational(1) + b * p * Rational(k); };
  const Rational ce = x.c * x.e, eg = x.e * x.g, df = x.d * x.f, fh = x.f * x.h;
  switch (idx.j) {
    case 0:
      return product_formula(0, idx.n, x, [&](long s) { return factor(ce, s); },
                             [&](long s) { return factor(eg, s); });
    case 1:
      return product_formula(1, idx.n, x, [&](long s) { return factor(df, s); },
                             [&](long s) { return factor(fh, s); });
    case 2:
      return product_formula(2, idx.n, x, [&](long s) { return factor(eg, s); },
                             [&](long s) { return factor(ce, s + 1); });
    default:
      return product_formula(3, idx.n, x, [&](long s) { return factor(fh, s); },
                             [&](long s) { return factor(df, s + 1); });
  }
}

Rational term_periodic2(long m, const InitialConditions& ic, const PeriodicCoeffs2& pc) {
  const TermIndex idx = decompose_index(m);
  const Seeds x(ic);
  const auto& [a0, a1] = pc.a;
  const auto& [b0, b1] = pc.b;
  const Rational ce = x.c * x.e, eg = x.e * x.g, df = x.d * x.f, fh = x.f * x.h;
  switch (idx.j) {
    case 0:
      return product_formula(0, idx.n, x, [&](long s) { return periodic_factor(a0, s, b0, ce, s); },
                             [&](long s) { return periodic_factor(a0, s, b0, eg, s); });
    case 1:
      return product_formula(1, idx.n, x, [&](long s) { return periodic_factor(a1, s, b1, df, s); },
                             [&](long s) { return periodic_factor(a1, s, b1, fh, s); });
    case 2:
      return product_formula(2, idx.n, x, [&](long s) { return periodic_factor(a0, s, b0, eg, s); },
                             [&](long s) { return periodic_factor(a0, s + 1, b0, ce, s + 1); });
    default:
      return product_formula(3, idx.n, x, [&](long s) { return periodic_factor(a1, s, b1, fh, s); },
                             [&](long s) { return periodic_factor(a1, s + 1, b1, df, s + 1); });
  }
}

Rational term_periodic4(long m, const InitialConditions& ic, const PeriodicCoeffs4& pc) {
  const TermIndex idx = decompose_index(m);
  const Seeds x(ic);
  const auto& [a0, a1, a2, a3] = pc.a;
  const auto& [b0, b1, b2, b3] = pc.b;
  const Rational ce = x.c * x.e, eg = x.e * x.g, df = x.d * x.f, fh = x.f * x.h;
  switch (idx.j) {
    case 0:
      return product_formula(0, idx.n, x, [&](long s) { return periodic_factor(a0, s, b0, ce, s); },
                             [&](long s) { return periodic_factor(a2, s, b2, eg, s); });
    case 1:
      return product_formula(1, idx.n, x, [&](long s) { return periodic_factor(a1, s, b1, df, s); },
                             [&](long s) { return periodic_factor(a3, s, b3, fh, s); });
    case 2:
      return product_formula(2, idx.n, x, [&](long s) { return periodic_factor(a2, s, b2, eg, s); },
                             [&](long s) { return periodic_factor(a0, s + 1, b0, ce, s + 1); });
    default:
      return product_formula(3, idx.n, x, [&](long s) { return periodic_factor(a3, s, b3, fh, s); },
                             [&](long s) { return periodic_factor(a1, s + 1, b1, df, s + 1); });
  }
}

}  // namespace rde6
