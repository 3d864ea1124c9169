#pragma once

#include <cstdint>
#include <random>

#include "homlie/ring/ring.hpp"

namespace homlie {

/// "A1GEBRO1D" read as hex with G->6, R->8, O->0.
inline constexpr std::uint64_t kDefaultSeed = 0xA16EB801DULL;
inline constexpr std::size_t kDefaultSamples = 25;

/// Deterministic source of random exact scalars. Values are drawn from a
/// mt19937_64 stream with plain modulo reduction so the sequence is the same
/// on every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi);
  /// p/q with |p| <= 5 and 1 <= q <= 4.
  Rational rational();
  /// Nonzero variant of rational().
  Rational nonzero_rational();
  /// Polynomial of total degree <= `degree` with up to four random terms.
  Polynomial polynomial(std::size_t nvars, std::uint32_t degree = 2);
  /// A random element of `ring`: a rational over Q, otherwise a polynomial.
  Scalar element(const CoefficientRing& ring, std::uint32_t degree = 2);

 private:
  std::mt19937_64 engine_;
};

}  // namespace homlie
