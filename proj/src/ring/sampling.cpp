#include "homlie/ring/sampling.hpp"

namespace homlie {

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational() {
  Rational r(integer(-5, 5), integer(1, 4));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (r != 0) return r;
  }
}

Polynomial Sampler::polynomial(std::size_t nvars, std::uint32_t degree) {
  if (nvars == 0) return Polynomial(rational());
  Polynomial out(nvars);
  const long terms = integer(1, 4);
  for (long t = 0; t < terms; ++t) {
    Monomial m(nvars, 0);
    const auto total = static_cast<std::uint32_t>(integer(0, degree));
    for (std::uint32_t d = 0; d < total; ++d) ++m[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
    out += Polynomial::monomial(std::move(m), rational());
  }
  return out;
}

Scalar Sampler::element(const CoefficientRing& ring, std::uint32_t degree) {
  if (ring.kind() == RingKind::Rationals) return Scalar(rational());
  return Scalar(polynomial(ring.nvars(), degree));
}

}  // namespace homlie
