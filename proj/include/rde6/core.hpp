#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "rde6/rational.hpp"

namespace rde6 {

enum class Coeff { A, B };

// The coefficient pair (a_n, b_n) of
//   x_{n+1} = x_{n-5} x_{n-3} / (x_{n-1} (a_n + b_n x_{n-5} x_{n-3})).
//
// Periodic sequences of any period p satisfy a_n = a_{n mod p}; a constant
// sequence is stored as period 1. An explicit list is only defined up to its
// length. A closure kind evaluates an arbitrary (pure) rule per index.
class CoefficientSequence {
public:
  enum class Kind { Constant, Periodic, List, Closure };
  using Rule = std::function<std::pair<Rational, Rational>(std::size_t)>;

  static CoefficientSequence constant(Rational a, Rational b);
  static CoefficientSequence periodic(std::vector<Rational> a, std::vector<Rational> b);
  static CoefficientSequence list(std::vector<Rational> a, std::vector<Rational> b);
  static CoefficientSequence closure(Rule rule);

  Kind kind() const { return kind_; }
  // Period for Constant/Periodic, list length for List, 0 for Closure.
  std::size_t period() const { return a_.size(); }
  std::span<const Rational> a_values() const { return a_; }
  std::span<const Rational> b_values() const { return b_; }

  // Throws Error(OutOfHorizon) past the end of a List.
  Rational at(std::size_t n, Coeff which) const;
  Rational a(std::size_t n) const { return at(n, Coeff::A); }
  Rational b(std::size_t n) const { return at(n, Coeff::B); }

  // Largest defined index + 1, or SIZE_MAX for total kinds.
  std::size_t horizon() const;

private:
  CoefficientSequence(Kind kind, std::vector<Rational> a, std::vector<Rational> b, Rule rule)
      : kind_(kind), a_(std::move(a)), b_(std::move(b)), rule_(std::move(rule)) {}

  Kind kind_;
  std::vector<Rational> a_;
  std::vector<Rational> b_;
  Rule rule_;
};

inline Rational coeff_at(const CoefficientSequence& seq, std::size_t n, Coeff which) {
  return seq.at(n, which);
}

// The six seeds x_{-5}, ..., x_0, all nonzero.
class InitialConditions {
public:
  // Throws Error(ZeroInitialValue) with detail_a = x-index of the first zero.
  static InitialConditions make(std::array<Rational, 6> values);

  // x_m for m in -5..0.
  const Rational& x(long m) const;
  // u_k = x_{k-5} for k in 0..5.
  const Rational& u(long k) const;
  const std::array<Rational, 6>& values() const { return values_; }

  friend bool operator==(const InitialConditions&, const InitialConditions&) = default;

private:
  explicit InitialConditions(std::array<Rational, 6> v) : values_(std::move(v)) {}
  std::array<Rational, 6> values_;
};

inline InitialConditions make_initial_conditions(std::array<Rational, 6> values) {
  return InitialConditions::make(std::move(values));
}

// m = 4n - 5 + j with j in 0..3, n >= 0; equivalently u_{4n+j} = x_m.
struct TermIndex {
  long m;
  int j;
  long n;

  friend bool operator==(const TermIndex&, const TermIndex&) = default;
};

// Throws Error(IndexBelowSeed) for m < -5.
TermIndex decompose_index(long m);

}  // namespace rde6
