#pragma once

#include <optional>
#include <span>
#include <vector>

#include "homlie/algebroid/structure.hpp"

namespace homlie {

/// A free sub-bundle spanned by the columns of an n x m frame matrix of
/// rank m over the fraction field.
class SubFrame {
 public:
  SubFrame(std::size_t rank, std::vector<Section> sections);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return sections_.size(); }
  const std::vector<Section>& sections() const { return sections_; }
  const Section& operator[](std::size_t i) const { return sections_[i]; }

  /// Coordinates of x in this frame, nullopt if x is not in the span.
  std::optional<Vector> coordinates(const Section& x) const;
  bool contains(const Section& x) const { return coordinates(x).has_value(); }
  /// Sum of c_i times the i-th frame section.
  Section combine(const Vector& c) const;

 private:
  std::size_t ambient_;
  std::vector<Section> sections_;
  Matrix frame_;
};

/// The structure induced on a sub-bundle closed under the twist and the
/// bracket (or product): tables are re-expressed in the sub-frame and the
/// anchors restricted. Throws PreconditionError naming the element that
/// leaves the span.
HomAlgebroid restrict_structure(const HomAlgebroid& s, const SubFrame& frame);

}  // namespace homlie
