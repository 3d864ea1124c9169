#pragma once

#include <string>
#include <vector>

#include "homlie/algebroid/bundle.hpp"

namespace homlie {

/// Lie type carries a skew bracket; Product type a plain product of a
/// hom-algebroid (the same table also stores connection coefficients).
enum class StructureKind { Lie, Product };

/// table[i][j] holds the coordinates of [e_i, e_j] (or e_i . e_j).
using StructureTable = std::vector<std::vector<Section>>;

/// A hom-Lie algebroid or hom-algebroid on a free hom-bundle, given by its
/// structure functions on the frame and the anchors a(e_i).
///
/// Sections are extended by the twisted Leibniz rules. For the Lie kind
///   [X, Y] = sum_ij phi*(x_i) phi*(y_j) c_ij
///          + sum_j a(phi X)(y_j) phi(e_j) - sum_i a(phi Y)(x_i) phi(e_i),
/// and the Product kind keeps the first two terms only, which encodes
/// (fX).Y = phi*(f) X.Y together with the Leibniz rule in the second slot.
class HomAlgebroid {
 public:
  HomAlgebroid() = default;
  HomAlgebroid(HomBundle bundle, StructureKind kind, StructureTable table,
               std::vector<TwistedDerivation> anchors);

  /// Zero table and zero anchors.
  static HomAlgebroid abelian(HomBundle bundle, StructureKind kind = StructureKind::Lie);

  const HomBundle& bundle() const { return bundle_; }
  const RingPtr& ring() const { return bundle_.ring(); }
  const CoefficientRing& coefficients() const { return bundle_.coefficients(); }
  std::size_t rank() const { return bundle_.rank(); }
  StructureKind kind() const { return kind_; }
  const StructureTable& table() const { return table_; }
  const Section& entry(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::vector<TwistedDerivation>& anchors() const { return anchors_; }
  bool has_zero_anchor() const;

  /// a(W) = sum_k w_k a(e_k).
  TwistedDerivation anchor(const Section& w) const;
  /// a(W)(f) without building the combined derivation.
  Scalar anchor_apply(const Section& w, const Scalar& f) const;

  /// The bracket for the Lie kind, the product for the Product kind.
  Section bracket(const Section& x, const Section& y) const;
  Section operator()(const Section& x, const Section& y) const { return bracket(x, y); }

  Section phi(const Section& x) const { return bundle_.phi(x); }
  Section phi_inverse(const Section& x) const { return bundle_.phi_inverse(x); }

  /// Same bundle and anchors with a different table.
  HomAlgebroid with_table(StructureKind kind, StructureTable table) const;

 private:
  HomBundle bundle_;
  StructureKind kind_ = StructureKind::Lie;
  StructureTable table_;
  std::vector<TwistedDerivation> anchors_;
};

/// The same structure over the fraction field of its coefficient ring.
HomAlgebroid over_fraction_field(const HomAlgebroid& s);

/// Tables with sparse 0-based (i, j, k, coefficient) entries filled into an
/// n x n grid of zero sections.
StructureTable make_table(std::size_t n);

}  // namespace homlie
