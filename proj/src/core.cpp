#include "rde6/core.hpp"

#include <limits>
#include <string>

namespace rde6 {

CoefficientSequence CoefficientSequence::constant(Rational a, Rational b) {
  return CoefficientSequence(Kind::Constant, {std::move(a)}, {std::move(b)}, {});
}

CoefficientSequence CoefficientSequence::periodic(std::vector<Rational> a, std::vector<Rational> b) {
  if (a.empty() || a.size() != b.size()) {
    throw Error(ErrorKind::InvalidArgument, "periodic coefficients need equal nonzero lengths");
  }
  return CoefficientSequence(Kind::Periodic, std::move(a), std::move(b), {});
}

CoefficientSequence CoefficientSequence::list(std::vector<Rational> a, std::vector<Rational> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::InvalidArgument, "coefficient lists differ in length");
  }
  return CoefficientSequence(Kind::List, std::move(a), std::move(b), {});
}

CoefficientSequence CoefficientSequence::closure(Rule rule) {
  if (!rule) throw Error(ErrorKind::InvalidArgument, "empty coefficient rule");
  return CoefficientSequence(Kind::Closure, {}, {}, std::move(rule));
}

Rational CoefficientSequence::at(std::size_t n, Coeff which) const {
  switch (kind_) {
    case Kind::Constant:
    case Kind::Periodic: {
      const std::size_t r = n % a_.size();
      return which == Coeff::A ? a_[r] : b_[r];
    }
    case Kind::List:
      if (n >= a_.size()) {
        throw Error(ErrorKind::OutOfHorizon,
                    "coefficient index " + std::to_string(n) + " past list end",
                    static_cast<long>(n));
      }
      return which == Coeff::A ? a_[n] : b_[n];
    case Kind::Closure: {
      auto [a, b] = rule_(n);
      return which == Coeff::A ? a : b;
    }
  }
  return Rational(0);
}

std::size_t CoefficientSequence::horizon() const {
  return kind_ == Kind::List ? a_.size() : std::numeric_limits<std::size_t>::max();
}

InitialConditions InitialConditions::make(std::array<Rational, 6> values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k].is_zero()) {
      const long m = static_cast<long>(k) - 5;
      throw Error(ErrorKind::ZeroInitialValue,
                  "initial value x_" + std::to_string(m) + " is zero", m);
    }
  }
  return InitialConditions(std::move(values));
}

const Rational& InitialConditions::x(long m) const {
  if (m < -5 || m > 0) {
    throw Error(ErrorKind::OutOfRange, "seed index x_" + std::to_string(m) + " out of range", m);
  }
  return values_[static_cast<std::size_t>(m + 5)];
}

const Rational& InitialConditions::u(long k) const { return x(k - 5); }

TermIndex decompose_index(long m) {
  if (m < -5) {
    throw Error(ErrorKind::IndexBelowSeed, "index " + std::to_string(m) + " below x_-5", m);
  }
  const long shifted = m + 5;
  return TermIndex{m, static_cast<int>(shifted % 4), shifted / 4};
}

}  // namespace rde6
