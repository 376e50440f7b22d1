#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "rde6/error.hpp"

namespace rde6 {

// Exact fraction in canonical form: gcd(|num|, den) = 1 and den > 0.
// Every constructor and operator leaves the value canonical, so equality is
// structural.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q);

  // Accepts "p/q" or "p" with optional sign on p; q must be positive and
  // nonzero after parsing. Throws Error(Parse) otherwise.
  static Rational parse(std::string_view text);

  // Canonical "p/q"; an integer value prints as "p/1".
  std::string str() const;

  double to_double() const;
  // ln|x| without going through a (possibly overflowing) double conversion.
  double log_abs() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const;
  // Integer power; negative exponents invert (zero base throws).
  Rational pow(long exponent) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Complex number with exact rational parts.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  // i = exp(i*pi/2), and its conjugate -i.
  static GaussianRational beta() { return {Rational(0), Rational(1)}; }
  static GaussianRational beta_bar() { return {Rational(0), Rational(-1)}; }
  // i^k for any integer k, by period-4 lookup.
  static GaussianRational i_pow(long k);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational pow(long exponent) const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string str() const;

private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace rde6
