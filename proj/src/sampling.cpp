#include "rde6/sampling.hpp"

namespace rde6 {

long SampleGenerator::integer(long lo, long hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational SampleGenerator::rational(long max_num, long max_den, bool nonzero) {
  long num = integer(-max_num, max_num);
  while (nonzero && num == 0) num = integer(-max_num, max_num);
  return Rational(num, integer(1, max_den));
}

}  // namespace rde6
