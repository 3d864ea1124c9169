#pragma once

#include <string>

#include "homlie/io/driver.hpp"

namespace homlie {

struct RenderOptions {
  /// Include per-check wall-clock times; off by default so reports are
  /// byte-identical across runs.
  bool timings = false;
};

std::string render_json(const DriverReport& report, const RenderOptions& options = {});
std::string render_text(const DriverReport& report, const RenderOptions& options = {});

/// Pretty-prints the structure and its attachments.
std::string describe_structure(const StructureDocument& doc);

}  // namespace homlie
