#pragma once

// Seeded sampling used by the property suites and the classification
// exclusion stage. mt19937_64 is fully specified by the standard, and the
// bounded draws below avoid std::uniform_int_distribution (whose mapping is
// implementation-defined), so identical seeds give identical streams anywhere.

#include "oscalg/rational.hpp"

#include <cstdint>
#include <random>

namespace oscalg {

class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [lo, hi], inclusive. Modulo mapping: deterministic everywhere,
  /// bias is irrelevant for test-point generation.
  long next_in(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  /// Default law: numerator uniform in [-9, 9], denominator in [1, 9].
  Rat rational(long num_lo = -9, long num_hi = 9, long den_lo = 1, long den_hi = 9) {
    return Rat(Int(next_in(num_lo, num_hi)), Int(next_in(den_lo, den_hi)));
  }

  Rat nonzero_rational(long num_lo = -9, long num_hi = 9, long den_lo = 1,
                       long den_hi = 9) {
    for (;;) {
      Rat r = rational(num_lo, num_hi, den_lo, den_hi);
      if (r != 0) return r;
    }
  }

  double real(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  /// Decorrelated per-item seed so parallel loops stay schedule-independent.
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t idx) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (idx + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace oscalg
