#include "rde6/symmetry.hpp"

#include <sstream>

#include "rde6/closedform.hpp"

namespace rde6 {

GaussianRational characteristic_value(Characteristic c, long n, const Rational& u) {
  const GaussianRational power =
      c == Characteristic::Q1 ? GaussianRational::i_pow(n) : GaussianRational::i_pow(-n);
  return power * GaussianRational(u);
}

CharacteristicFn characteristic_fn(Characteristic c) {
  return [c](long n, const Rational& u) { return characteristic_value(c, n, u); };
}

GaussianRational lsc_residual(const CharacteristicFn& q, const LscSample& s) {
  if (s.u_n.is_zero() || s.u_n2.is_zero() || s.u_n4.is_zero()) {
    throw Error(ErrorKind::DegenerateSample, "sample has a zero u value");
  }
  const Rational prod = s.u_n * s.u_n2;
  const Rational d = s.a + s.b * prod;
  if (d.is_zero()) throw Error(ErrorKind::DegenerateSample, "a + b u_n u_{n+2} vanishes");

  const Rational psi = prod / (s.u_n4 * d);
  const Rational d2 = d * d;
  GaussianRational r = q(s.n + 6, psi);
  r += q(s.n + 4, s.u_n4) * GaussianRational(prod / (s.u_n4 * s.u_n4 * d));
  r -= q(s.n + 2, s.u_n2) * GaussianRational(s.a * s.u_n / (s.u_n4 * d2));
  r -= q(s.n, s.u_n) * GaussianRational(s.a * s.u_n2 / (s.u_n4 * d2));
  return r;
}

GaussianRational lsc_residual(Characteristic c, const LscSample& s) {
  return lsc_residual(characteristic_fn(c), s);
}

namespace {

void expect_zero(IdentityReport& report, const std::string& check, long n, long k,
                 const GaussianRational& value) {
  ++report.checked;
  if (!value.is_zero()) report.failures.push_back({check, n, k, value});
}

void expect_equal(IdentityReport& report, const std::string& check, long n, long k,
                  const GaussianRational& lhs, const GaussianRational& rhs) {
  expect_zero(report, check, n, k, lhs - rhs);
}

void append(IdentityReport& into, const IdentityReport& from) {
  into.checked += from.checked;
  into.failures.insert(into.failures.end(), from.failures.begin(), from.failures.end());
}

}  // namespace

IdentityReport verify_reduced_system(long n_max, const GaussianRational& root) {
  IdentityReport report;
  for (long n = 0; n <= n_max; ++n) {
    // alpha_n = 0 is the quadratic coefficient of Q = alpha_n u^2 + beta_n u.
    expect_zero(report, "alpha_n", n, 0, GaussianRational());
    expect_zero(report, "beta_n + beta_{n+2}", n, 0, root.pow(n) + root.pow(n + 2));
  }
  return report;
}

IdentityReport verify_reduced_system(long n_max) {
  IdentityReport report = verify_reduced_system(n_max, GaussianRational::beta());
  append(report, verify_reduced_system(n_max, GaussianRational::beta_bar()));
  return report;
}

IdentityReport generator_annihilates_invariant(const GaussianRational& base, long n_max) {
  IdentityReport report;
  for (long n = 0; n <= n_max; ++n) {
    expect_zero(report, "X(V~_n)", n, 0, base.pow(n) + base.pow(n + 2));
  }
  return report;
}

IdentityReport generator_annihilates_invariant(Generator g, long n_max) {
  return generator_annihilates_invariant(
      g == Generator::X1 ? GaussianRational::beta() : GaussianRational::beta_bar(), n_max);
}

IdentityReport verify_gamma_identities(long limit) {
  IdentityReport report;
  const GaussianRational beta = GaussianRational::beta();
  const GaussianRational beta_bar = GaussianRational::beta_bar();
  expect_equal(report, "gamma(0,1) = conj(beta)", 0, 1, gamma(0, 1), beta_bar);
  expect_equal(report, "gamma(1,0) = beta", 1, 0, gamma(1, 0), beta);
  for (long n = 0; n <= limit; ++n) {
    expect_equal(report, "gamma(n,n) = 1", n, n, gamma(n, n), GaussianRational(Rational(1)));
    for (long k = 0; k <= limit; ++k) {
      const GaussianRational g = gamma(n, k);
      expect_equal(report, "gamma = beta^n conj(beta)^k", n, k, g,
                   beta.pow(n) * beta_bar.pow(k));
      expect_equal(report, "gamma(n+2,k) = -gamma(n,k)", n, k, gamma(n + 2, k), -g);
      expect_equal(report, "gamma(n,k+2) = -gamma(n,k)", n, k, gamma(n, k + 2), -g);
      expect_equal(report, "gamma(4n,k) = gamma(0,k)", n, k, gamma(4 * n, k), gamma(0, k));
      expect_equal(report, "gamma(n,4k) = gamma(n,0)", n, k, gamma(n, 4 * k), gamma(n, 0));
    }
  }
  return report;
}

IdentityReport verify_characteristic_period(const CharacteristicFn& q, long n_max,
                                            const std::vector<Rational>& us) {
  IdentityReport report;
  for (long n = 0; n <= n_max; ++n) {
    expect_zero(report, "Q(n,0)", n, 0, q(n, Rational(0)));
    for (const Rational& u : us) {
      expect_equal(report, "Q(n+4,u) = Q(n,u)", n, 0, q(n + 4, u), q(n, u));
    }
  }
  return report;
}

double tilde_v(long n, const Orbit& orbit) {
  return orbit.u(n).log_abs() + orbit.u(n + 2).log_abs();
}

LscSample random_lsc_sample(SampleGenerator& rng) {
  for (;;) {
    LscSample s;
    s.n = rng.integer(0, 40);
    s.u_n = rng.rational(50, 20, true);
    s.u_n2 = rng.rational(50, 20, true);
    s.u_n4 = rng.rational(50, 20, true);
    s.a = rng.rational(50, 20, true);
    s.b = rng.rational(50, 20, true);
    if (!(s.a + s.b * s.u_n * s.u_n2).is_zero()) return s;
  }
}

SymmetrySuiteReport run_symmetry_suite(const SymmetrySuiteOptions& options) {
  if (options.samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be >= 1");

  SymmetrySuiteReport report;
  std::ostringstream out;
  out << "symmetry suite: samples=" << options.samples << " seed=" << options.seed
      << (options.counterfeit ? " characteristic=counterfeit" : "") << "\n";

  const CharacteristicFn counterfeit = [](long, const Rational& u) { return GaussianRational(u); };
  const CharacteristicFn q1 = options.counterfeit ? counterfeit : characteristic_fn(Characteristic::Q1);
  const CharacteristicFn q2 = options.counterfeit ? counterfeit : characteristic_fn(Characteristic::Q2);

  SampleGenerator rng(options.seed);
  std::string first_nonzero;
  for (const auto& [name, q] : {std::pair{"Q1", &q1}, std::pair{"Q2", &q2}}) {
    long nonzero = 0;
    for (long i = 0; i < options.samples; ++i) {
      const LscSample s = random_lsc_sample(rng);
      const GaussianRational r = lsc_residual(*q, s);
      ++report.residuals_checked;
      if (!r.is_zero()) {
        ++nonzero;
        if (first_nonzero.empty()) {
          first_nonzero = std::string(name) + " sample " + std::to_string(i) + " n=" +
                          std::to_string(s.n) + " residual=" + r.str();
        }
      }
    }
    report.residuals_nonzero += nonzero;
    out << "lsc residual " << name << ": " << options.samples << " samples, " << nonzero
        << " nonzero\n";
  }
  if (!first_nonzero.empty()) out << "first nonzero residual: " << first_nonzero << "\n";

  report.reduced = verify_reduced_system(options.n_max);
  report.generators = generator_annihilates_invariant(Generator::X1, options.n_max);
  append(report.generators, generator_annihilates_invariant(Generator::X2, options.n_max));
  report.gamma = verify_gamma_identities(options.gamma_limit);
  const std::vector<Rational> probes = {Rational(1), Rational(-3, 7), Rational(22, 5)};
  report.period = verify_characteristic_period(q1, options.n_max, probes);
  append(report.period, verify_characteristic_period(q2, options.n_max, probes));

  auto line = [&out](const char* label, const IdentityReport& r) {
    out << label << ": " << r.checked << " checks, " << r.failures.size() << " failures\n";
    if (!r.ok()) {
      const auto& f = r.failures.front();
      out << "  first failure: " << f.check << " n=" << f.n << " k=" << f.k
          << " value=" << f.value.str() << "\n";
    }
  };
  line("reduced system", report.reduced);
  line("generator sums", report.generators);
  line("gamma identities", report.gamma);
  line("characteristic period", report.period);
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  report.text = out.str();
  return report;
}

}  // namespace rde6
