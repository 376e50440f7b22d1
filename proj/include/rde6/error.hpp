#pragma once

#include <stdexcept>
#include <string>

namespace rde6 {

enum class ErrorKind {
  DivisionByZero,
  ZeroInitialValue,
  OutOfHorizon,
  IndexBelowSeed,
  TooShort,
  SingularClosedForm,
  WrongCase,
  DegenerateSample,
  OutOfRange,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library. `detail_a`/`detail_b` carry the
// structured payload of the kind (position, index, or the (j, s) pair of a
// singular closed-form factor).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what, long detail_a = 0, long detail_b = 0)
      : std::runtime_error(what), kind_(kind), a_(detail_a), b_(detail_b) {}

  ErrorKind kind() const noexcept { return kind_; }
  long detail_a() const noexcept { return a_; }
  long detail_b() const noexcept { return b_; }

private:
  ErrorKind kind_;
  long a_;
  long b_;
};

// SingularClosedForm payload helpers: detail_a = j, detail_b = s.
inline Error singular_closed_form(int j, long s) {
  return Error(ErrorKind::SingularClosedForm,
               "closed-form factor vanishes at residue class j=" + std::to_string(j) +
                   ", s=" + std::to_string(s),
               j, s);
}

}  // namespace rde6
