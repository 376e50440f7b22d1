#include "rde6/rational.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace rde6 {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroInitialValue: return "ZeroInitialValue";
    case ErrorKind::OutOfHorizon: return "OutOfHorizon";
    case ErrorKind::IndexBelowSeed: return "IndexBelowSeed";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::SingularClosedForm: return "SingularClosedForm";
    case ErrorKind::WrongCase: return "WrongCase";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (sgn(q_.get_den()) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (sgn(d) == 0) {
    throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// Correctly rounded (nearest, ties to even); mpq_get_d truncates.
double Rational::to_double() const {
  if (is_zero()) return 0.0;
  mpz_class num = ::abs(q_.get_num());
  mpz_class den = q_.get_den();
  const long shift = 55 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  if (shift >= 0) {
    num <<= shift;
  } else {
    den <<= -shift;
  }
  mpz_class quot;
  mpz_class rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const long drop = static_cast<long>(mpz_sizeinbase(quot.get_mpz_t(), 2)) - 53;
  const bool sticky = rem != 0 || mpz_scan1(quot.get_mpz_t(), 0) < static_cast<mp_bitcnt_t>(drop - 1);
  const bool half = mpz_tstbit(quot.get_mpz_t(), static_cast<mp_bitcnt_t>(drop - 1)) != 0;
  quot >>= drop;
  if (half && (sticky || mpz_odd_p(quot.get_mpz_t()))) ++quot;
  const double mag = std::ldexp(quot.get_d(), static_cast<int>(drop - shift));
  return sign() < 0 ? -mag : mag;
}

double Rational::log_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  auto log_mpz = [](const mpz_class& z) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::numbers::ln2;
  };
  return log_mpz(q_.get_num()) - log_mpz(q_.get_den());
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational GaussianRational::i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

GaussianRational GaussianRational::pow(long exponent) const {
  if (exponent < 0) return GaussianRational(Rational(1)) / pow(-exponent);
  GaussianRational result(Rational(1));
  GaussianRational base = *this;
  for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    base *= base;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::str() const { return "(" + re_.str() + ", " + im_.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace rde6
