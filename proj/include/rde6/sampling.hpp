#pragma once

#include <cstdint>
#include <random>

#include "rde6/rational.hpp"

namespace rde6 {

// Seeded sampler for reproducible property runs. std::mt19937_64 has a fully
// specified output sequence and values are reduced with plain modular
// arithmetic (no std:: distributions), so a seed yields the same stream on
// every platform.
class SampleGenerator {
public:
  explicit SampleGenerator(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Integer in [lo, hi].
  long integer(long lo, long hi);
  bool coin() { return (next() & 1U) != 0; }
  // p/q with |p| <= max_num and 1 <= q <= max_den; nonzero on request.
  Rational rational(long max_num, long max_den, bool nonzero);

private:
  std::mt19937_64 engine_;
};

}  // namespace rde6
