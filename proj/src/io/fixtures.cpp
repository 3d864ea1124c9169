#include "homlie/io/fixtures.hpp"

#include "homlie/errors.hpp"

namespace homlie {

namespace {

constexpr const char* kAbelian = R"({
  "format": "homlie-structure",
  "version": 1,
  "name": "abelian_n2",
  "description": "Rank-2 abelian structure over Q with the identity twist, a split-signature metric, the standard symplectic form and K = diag(1,-1).",
  "ring": {"kind": "rationals"},
  "bundle": {"rank": 2, "phi": [["1", "0"], ["0", "1"]]},
  "bracket": {"type": "lie", "entries": []},
  "metric": [["0", "1"], ["1", "0"]],
  "symplectic": [["0", "1"], ["-1", "0"]],
  "product_structure": [["1", "0"], ["0", "-1"]],
  "checks": ["homliealgebra", "homliealgebroid", "metric", "levicivita", "symplectic", "leftsymmetric",
             "almostproduct", "paracomplex", "parahermitian", "parakahler", "phasespace", "dsquared"]
})";

constexpr const char* kAffine = R"({
  "format": "homlie-structure",
  "version": 1,
  "name": "rank2_affine",
  "description": "The affine algebra [e1,e2] = e2 over Q with the identity twist, an antidiagonal metric and the standard symplectic form.",
  "ring": {"kind": "rationals"},
  "bundle": {"rank": 2, "phi": [["1", "0"], ["0", "1"]]},
  "bracket": {"type": "lie", "entries": [[1, 2, 2, "1"]]},
  "metric": [["0", "1"], ["1", "0"]],
  "symplectic": [["0", "1"], ["-1", "0"]],
  "checks": ["homliealgebra", "homliealgebroid", "metric", "levicivita", "symplectic", "leftsymmetric",
             "phasespace", "dsquared"]
})";

constexpr const char* kHeisenberg = R"({
  "format": "homlie-structure",
  "version": 1,
  "name": "heisenberg_hom",
  "description": "Heisenberg bracket [e1,e2] = e3 twisted by diag(2, 1/2, 1), with an invariant metric.",
  "ring": {"kind": "rationals"},
  "bundle": {"rank": 3, "phi": [["2", "0", "0"], ["0", "1/2", "0"], ["0", "0", "1"]]},
  "bracket": {"type": "lie", "entries": [[1, 2, 3, "1"]]},
  "metric": [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]],
  "checks": ["homliealgebra", "homliealgebroid", "metric", "levicivita", "dsquared"]
})";

constexpr const char* kQScale = R"({
  "format": "homlie-structure",
  "version": 1,
  "name": "poly_rank1_qscale",
  "description": "Rank 1 over Q[x] with base map x -> 2x, twist 1/2 and anchor a(e1) = phi* o d/dx.",
  "ring": {"kind": "polynomial", "variables": ["x"], "phi_star": ["2*x"], "phi_star_inverse": ["1/2*x"]},
  "bundle": {"rank": 1, "phi": [["1/2"]], "phi_inverse": [["2"]]},
  "bracket": {"type": "lie", "entries": []},
  "anchor": {"twist": "pullback", "coefficients": [["1"]]},
  "checks": ["homliealgebra", "homliealgebroid", "dsquared"]
})";

constexpr const char* kDouble = R"({
  "format": "homlie-structure",
  "version": 1,
  "name": "double_zero_poisson",
  "description": "Zero-Poisson double of the affine algebra [e1,e2] = e2 twisted by diag(1,2): frame e1, e2 then the dual frame e3, e4, pairing metric, K = (phi^-1, -phi^-1) on the two summands.",
  "ring": {"kind": "rationals"},
  "bundle": {"rank": 4, "phi": [["1", "0", "0", "0"], ["0", "2", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1/2"]]},
  "bracket": {"type": "lie", "entries": [[1, 2, 2, "1"], [1, 3, 3, "-1"], [1, 4, 4, "-1/4"]]},
  "metric": [["0", "0", "1", "0"], ["0", "0", "0", "1"], ["1", "0", "0", "0"], ["0", "1", "0", "0"]],
  "symplectic": [["0", "0", "1", "0"], ["0", "0", "0", "1"], ["-1", "0", "0", "0"], ["0", "-1", "0", "0"]],
  "product_structure": [["1", "0", "0", "0"], ["0", "1/2", "0", "0"], ["0", "0", "-1", "0"], ["0", "0", "0", "-2"]],
  "split": {"plus": [["1", "0", "0", "0"], ["0", "1", "0", "0"]], "minus": [["0", "0", "1", "0"], ["0", "0", "0", "1"]]},
  "checks": ["homliealgebra", "homliealgebroid", "metric", "levicivita", "symplectic", "leftsymmetric",
             "almostproduct", "paracomplex", "parahermitian", "parakahler", "dsquared"]
})";

constexpr const char* kFoliation = R"({
  "format": "homlie-structure",
  "version": 1,
  "name": "foliation_block",
  "description": "Direct sum of two affine blocks [e1,e2] = e2, [e3,e4] = e4, each twisted by diag(1,2), with K = +phi^-1 on the first block and -phi^-1 on the second.",
  "ring": {"kind": "rationals"},
  "bundle": {"rank": 4, "phi": [["1", "0", "0", "0"], ["0", "2", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "2"]]},
  "bracket": {"type": "lie", "entries": [[1, 2, 2, "1"], [3, 4, 4, "1"]]},
  "product_structure": [["1", "0", "0", "0"], ["0", "1/2", "0", "0"], ["0", "0", "-1", "0"], ["0", "0", "0", "-1/2"]],
  "checks": ["homliealgebra", "homliealgebroid", "almostproduct", "paracomplex", "dsquared"]
})";

constexpr const char* kDoubleMutant = R"({
  "format": "homlie-structure",
  "version": 1,
  "name": "double_literal_mutant",
  "description": "The zero-Poisson double with the coadjoint brackets removed: still para-Hermitian, but the Levi-Civita connection no longer preserves the split.",
  "ring": {"kind": "rationals"},
  "bundle": {"rank": 4, "phi": [["1", "0", "0", "0"], ["0", "2", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1/2"]]},
  "bracket": {"type": "lie", "entries": [[1, 2, 2, "1"]]},
  "metric": [["0", "0", "1", "0"], ["0", "0", "0", "1"], ["1", "0", "0", "0"], ["0", "1", "0", "0"]],
  "product_structure": [["1", "0", "0", "0"], ["0", "1/2", "0", "0"], ["0", "0", "-1", "0"], ["0", "0", "0", "-2"]],
  "split": {"plus": [["1", "0", "0", "0"], ["0", "1", "0", "0"]], "minus": [["0", "0", "1", "0"], ["0", "0", "0", "1"]]},
  "checks": ["homliealgebroid", "metric", "almostproduct", "paracomplex", "parahermitian"]
})";

constexpr const char* kQScaleUntwisted = R"({
  "format": "homlie-structure",
  "version": 1,
  "name": "poly_rank1_identity_twist",
  "description": "poly_rank1_qscale with the bundle twist replaced by the identity, which breaks anchor compatibility.",
  "ring": {"kind": "polynomial", "variables": ["x"], "phi_star": ["2*x"], "phi_star_inverse": ["1/2*x"]},
  "bundle": {"rank": 1, "phi": [["1"]], "phi_inverse": [["1"]]},
  "bracket": {"type": "lie", "entries": []},
  "anchor": {"twist": "pullback", "coefficients": [["1"]]}
})";

constexpr const char* kQScaleOrdinary = R"({
  "format": "homlie-structure",
  "version": 1,
  "name": "poly_rank1_ordinary_anchor",
  "description": "poly_rank1_qscale with an ordinary derivation d/dx as anchor instead of a twisted one.",
  "ring": {"kind": "polynomial", "variables": ["x"], "phi_star": ["2*x"], "phi_star_inverse": ["1/2*x"]},
  "bundle": {"rank": 1, "phi": [["1/2"]], "phi_inverse": [["2"]]},
  "bracket": {"type": "lie", "entries": []},
  "anchor": {"twist": "identity", "coefficients": [["1"]]}
})";

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"abelian_n2", "rank-2 abelian, identity twist, metric, symplectic form and product structure", kAbelian},
      {"rank2_affine", "[e1,e2] = e2 over Q with metric and symplectic form", kAffine},
      {"heisenberg_hom", "Heisenberg bracket twisted by diag(2, 1/2, 1) with an invariant metric", kHeisenberg},
      {"poly_rank1_qscale", "rank 1 over Q[x], x -> 2x, twisted anchor", kQScale},
      {"double_zero_poisson", "zero-Poisson double of the affine algebra, para-Kahler", kDouble},
      {"foliation_block", "two affine blocks with a para-complex product structure", kFoliation},
      {"double_literal_mutant", "double without coadjoint brackets: para-Hermitian, not para-Kahler", kDoubleMutant,
       true},
      {"poly_rank1_identity_twist", "qscale with identity bundle twist: anchor compatibility fails",
       kQScaleUntwisted, true},
      {"poly_rank1_ordinary_anchor", "qscale with an untwisted anchor: twisted Leibniz fails", kQScaleOrdinary,
       true},
  };
  return fixtures;
}

std::vector<Fixture> regular_fixtures() {
  std::vector<Fixture> out;
  for (const auto& f : builtin_fixtures()) {
    if (!f.mutant) out.push_back(f);
  }
  return out;
}

const Fixture* find_fixture(std::string_view name) {
  for (const auto& f : builtin_fixtures()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

StructureDocument load_fixture(std::string_view name) {
  const Fixture* f = find_fixture(name);
  if (f == nullptr) throw InvalidStructureError("no builtin fixture named '" + std::string(name) + "'");
  return parse_structure(f->text);
}

StructureDocument load_document(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) return load_fixture(std::string_view(source).substr(prefix.size()));
  return load_structure(source);
}

}  // namespace homlie
