#include "homlie/algebroid/bundle.hpp"

#include <utility>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void require_identity(const Matrix& m, const std::string& what, const CoefficientRing& ring) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar expected(i == j ? 1 : 0);
      if (!(m(i, j) == expected)) {
        throw InvalidStructureError(what + " is not the identity: entry " + entry_name(i, j) +
                                    " has residual " + ring.format(m(i, j) - expected));
      }
    }
  }
}

}  // namespace

HomBundle::HomBundle(RingPtr ring, Matrix twist, std::optional<Matrix> inverse)
    : ring_(std::move(ring)), twist_(std::move(twist)) {
  if (!ring_) throw PreconditionError("a bundle needs a coefficient ring");
  if (!twist_.is_square() || twist_.rows() == 0) {
    throw DimensionError("the twist matrix must be square of positive size");
  }
  for (std::size_t i = 0; i < twist_.rows(); ++i) {
    for (std::size_t j = 0; j < twist_.cols(); ++j) {
      if (!ring_->contains(twist_(i, j))) {
        throw DomainError("twist entry " + entry_name(i, j) + " is not in " + ring_->describe());
      }
    }
  }
  if (inverse) {
    inverse_ = std::move(*inverse);
    if (inverse_.rows() != twist_.rows() || inverse_.cols() != twist_.cols()) {
      throw DimensionError("the inverse twist must have the same shape as the twist");
    }
  } else {
    Matrix inv;
    try {
      inv = twist_.inverse();
    } catch (const SingularSystemError&) {
      throw InvalidStructureError("the twist matrix is not invertible");
    }
    inverse_ = pull_inverse(inv);
  }
  for (std::size_t i = 0; i < inverse_.rows(); ++i) {
    for (std::size_t j = 0; j < inverse_.cols(); ++j) {
      if (!ring_->contains(inverse_(i, j))) {
        throw DomainError("inverse twist entry " + entry_name(i, j) + " is not in " +
                          ring_->describe());
      }
    }
  }
  require_identity(twist_ * pull(inverse_), "Phi * phi*(Phi^-1)", *ring_);
  require_identity(inverse_ * pull_inverse(twist_), "Phi^-1 * (phi*)^-1(Phi)", *ring_);
}

Section HomBundle::basis(std::size_t i) const {
  if (i >= rank()) throw DimensionError("basis index out of range");
  Section e(rank());
  e[i] = Scalar(1);
  return e;
}

Section HomBundle::pull(const Section& x) const {
  Section out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring_->phi(x[i]);
  return out;
}

Section HomBundle::pull_inverse(const Section& x) const {
  Section out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring_->phi_inverse(x[i]);
  return out;
}

Matrix HomBundle::pull(const Matrix& m) const {
  return m.map([this](const Scalar& s) { return ring_->phi(s); });
}

Matrix HomBundle::pull_inverse(const Matrix& m) const {
  return m.map([this](const Scalar& s) { return ring_->phi_inverse(s); });
}

Section HomBundle::phi(const Section& x) const {
  if (x.size() != rank()) throw DimensionError("section has the wrong rank");
  return twist_ * pull(x);
}

Section HomBundle::phi_inverse(const Section& y) const {
  if (y.size() != rank()) throw DimensionError("section has the wrong rank");
  return inverse_ * pull_inverse(y);
}

Section HomBundle::phi_power(const Section& x, int k) const {
  Section out = x;
  for (int i = 0; i < k; ++i) out = phi(out);
  for (int i = 0; i > k; --i) out = phi_inverse(out);
  return out;
}

Matrix HomBundle::dual_twist() const { return pull(inverse_).transpose(); }

std::string HomBundle::format(const Section& x) const {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += ring_->format(x[i]);
  }
  return out + "]";
}

Section scale(const Scalar& f, const Section& x) { return f * x; }

}  // namespace homlie
