#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homlie/algebroid/structure.hpp"
#include "homlie/parakahler/parakahler.hpp"

namespace homlie {

/// A structure file: the algebroid plus its optional attachments.
struct StructureDocument {
  std::string name;
  std::string description;
  HomAlgebroid structure;
  std::optional<Matrix> metric;
  std::optional<Matrix> symplectic;
  std::optional<Matrix> product_structure;
  std::optional<AdaptedSplit> split;
  /// Connection coefficients Gamma_ij^k, entries in the fraction field.
  std::optional<StructureTable> connection;
  /// Checks the file declares to hold; empty means every applicable check.
  std::vector<std::string> checks;
  std::optional<std::uint64_t> seed;
};

inline constexpr int kFormatVersion = 1;

/// Parses and validates a structure file. Throws ParseError (with line and
/// column) on malformed JSON and InvalidStructureError naming the offending
/// field for everything else.
StructureDocument parse_structure(std::string_view text);
StructureDocument load_structure(const std::filesystem::path& path);

/// Canonical rendering: fixed key order, sparse entries in frame order,
/// coefficients in normal form.
std::string serialize_structure(const StructureDocument& doc);

}  // namespace homlie
