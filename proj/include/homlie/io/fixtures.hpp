#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homlie/io/structure_file.hpp"

namespace homlie {

/// A structure file shipped inside the binary.
struct Fixture {
  std::string name;
  std::string summary;
  std::string text;
  /// Mutants are deliberately broken variants kept for negative tests.
  bool mutant = false;
};

/// Every builtin file, regular fixtures first, in a fixed order.
const std::vector<Fixture>& builtin_fixtures();
/// The regular fixtures only.
std::vector<Fixture> regular_fixtures();
const Fixture* find_fixture(std::string_view name);
/// Parses the builtin named `name`; throws InvalidStructureError if unknown.
StructureDocument load_fixture(std::string_view name);

/// Accepts a path or "builtin:<name>".
StructureDocument load_document(const std::string& source);

}  // namespace homlie
