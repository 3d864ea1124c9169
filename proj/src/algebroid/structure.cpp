#include "homlie/algebroid/structure.hpp"

#include <utility>

#include "homlie/errors.hpp"

namespace homlie {

StructureTable make_table(std::size_t n) {
  return StructureTable(n, std::vector<Section>(n, Section(n)));
}

HomAlgebroid::HomAlgebroid(HomBundle bundle, StructureKind kind, StructureTable table,
                           std::vector<TwistedDerivation> anchors)
    : bundle_(std::move(bundle)), kind_(kind), table_(std::move(table)),
      anchors_(std::move(anchors)) {
  const std::size_t n = bundle_.rank();
  const auto& ring = bundle_.coefficients();
  if (table_.size() != n) throw DimensionError("structure table needs one row per basis section");
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) throw DimensionError("structure table row has the wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i][j].size() != n) throw DimensionError("structure table entry has the wrong rank");
      for (std::size_t k = 0; k < n; ++k) {
        if (!ring.contains(table_[i][j][k])) {
          throw DomainError("structure function c_" + std::to_string(i + 1) + std::to_string(j + 1) +
                            "^" + std::to_string(k + 1) + " is not in " + ring.describe());
        }
      }
    }
  }
  if (kind_ == StructureKind::Lie) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!(table_[i][j][k] == -table_[j][i][k])) {
            throw InvalidStructureError("bracket table is not skew: c_" + std::to_string(i + 1) +
                                        std::to_string(j + 1) + "^" + std::to_string(k + 1) +
                                        " != -c_" + std::to_string(j + 1) + std::to_string(i + 1) +
                                        "^" + std::to_string(k + 1));
          }
        }
      }
    }
  }
  if (anchors_.empty()) {
    for (std::size_t i = 0; i < n; ++i) anchors_.push_back(TwistedDerivation::zero(bundle_.ring()));
  }
  if (anchors_.size() != n) throw DimensionError("anchor table needs one derivation per basis section");
  for (const auto& a : anchors_) {
    if (a.coefficients().size() != ring.nvars()) {
      throw DimensionError("anchor derivation has the wrong number of coefficients");
    }
  }
}

HomAlgebroid HomAlgebroid::abelian(HomBundle bundle, StructureKind kind) {
  const std::size_t n = bundle.rank();
  return HomAlgebroid(std::move(bundle), kind, make_table(n), {});
}

bool HomAlgebroid::has_zero_anchor() const {
  for (const auto& a : anchors_) {
    if (!a.is_zero()) return false;
  }
  return true;
}

TwistedDerivation HomAlgebroid::anchor(const Section& w) const {
  return TwistedDerivation::combine(ring(), w, anchors_);
}

Scalar HomAlgebroid::anchor_apply(const Section& w, const Scalar& f) const {
  Scalar out(0);
  if (f.is_constant()) return out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].is_zero() || anchors_[k].is_zero()) continue;
    out += w[k] * anchors_[k](f);
  }
  return out;
}

Section HomAlgebroid::bracket(const Section& x, const Section& y) const {
  const std::size_t n = rank();
  if (x.size() != n || y.size() != n) throw DimensionError("section has the wrong rank");
  const Section px = bundle_.pull(x);
  const Section py = bundle_.pull(y);
  Section out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (px[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (py[j].is_zero()) continue;
      const Scalar w = px[i] * py[j];
      const Section& c = table_[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero()) out[k] += w * c[k];
      }
    }
  }
  if (has_zero_anchor()) return out;
  const Matrix& phi = bundle_.twist();
  const Section phx = bundle_.phi(x);
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar d = anchor_apply(phx, y[j]);
    if (d.is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) out[k] += d * phi(k, j);
  }
  if (kind_ == StructureKind::Product) return out;
  const Section phy = bundle_.phi(y);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar d = anchor_apply(phy, x[i]);
    if (d.is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) out[k] -= d * phi(k, i);
  }
  return out;
}

HomAlgebroid HomAlgebroid::with_table(StructureKind kind, StructureTable table) const {
  return HomAlgebroid(bundle_, kind, std::move(table), anchors_);
}

HomAlgebroid over_fraction_field(const HomAlgebroid& s) {
  RingPtr field = fraction_field(s.ring());
  if (field == s.ring()) return s;
  HomBundle bundle(field, s.bundle().twist(), s.bundle().inverse_twist());
  std::vector<TwistedDerivation> anchors;
  for (const auto& a : s.anchors()) anchors.emplace_back(field, a.coefficients(), a.twist());
  return HomAlgebroid(std::move(bundle), s.kind(), s.table(), std::move(anchors));
}

}  // namespace homlie
