#include "homlie/algebroid/subbundle.hpp"

#include <utility>

#include "homlie/errors.hpp"

namespace homlie {

SubFrame::SubFrame(std::size_t rank, std::vector<Section> sections)
    : ambient_(rank), sections_(std::move(sections)) {
  frame_ = Matrix::from_columns(sections_, ambient_);
  if (frame_.rank() != sections_.size()) {
    throw PreconditionError("sub-frame sections are linearly dependent over the fraction field");
  }
}

std::optional<Vector> SubFrame::coordinates(const Section& x) const {
  if (sections_.empty()) {
    if (is_zero(x)) return Vector{};
    return std::nullopt;
  }
  return frame_.solve_any(x);
}

Section SubFrame::combine(const Vector& c) const {
  Section out(ambient_);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) out = out + scale(c[i], sections_[i]);
  }
  return out;
}

HomAlgebroid restrict_structure(const HomAlgebroid& s, const SubFrame& frame) {
  const std::size_t m = frame.rank();
  if (m == 0) throw PreconditionError("cannot restrict to the zero sub-bundle");
  auto coords = [&](const Section& x, const std::string& what) {
    auto c = frame.coordinates(x);
    if (!c) throw PreconditionError(what + " leaves the sub-bundle");
    return *c;
  };
  Matrix twist(m, m);
  Matrix inverse(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vector c = coords(s.phi(frame[i]), "phi(b" + std::to_string(i + 1) + ")");
    const Vector d = coords(s.phi_inverse(frame[i]), "phi^-1(b" + std::to_string(i + 1) + ")");
    for (std::size_t k = 0; k < m; ++k) {
      twist(k, i) = c[k];
      inverse(k, i) = d[k];
    }
  }
  StructureTable table = make_table(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i][j] = coords(s.bracket(frame[i], frame[j]),
                           "the product of b" + std::to_string(i + 1) + " and b" + std::to_string(j + 1));
    }
  }
  std::vector<TwistedDerivation> anchors;
  for (std::size_t i = 0; i < m; ++i) anchors.push_back(s.anchor(frame[i]));
  HomBundle bundle(s.ring(), std::move(twist), std::move(inverse));
  return HomAlgebroid(std::move(bundle), s.kind(), std::move(table), std::move(anchors));
}

}  // namespace homlie
