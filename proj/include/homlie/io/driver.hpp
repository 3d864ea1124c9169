#pragma once

#include <string>
#include <vector>

#include "homlie/algebroid/report.hpp"
#include "homlie/errors.hpp"
#include "homlie/io/structure_file.hpp"

namespace homlie {

/// A requested check needs an attachment the file does not carry, or the
/// check name is unknown.
class AttachmentError : public Error {
 public:
  using Error::Error;
};

/// One dispatched check and its laws.
struct CheckRun {
  std::string check;
  VerificationReport report;
  double elapsed_ms = 0.0;
  bool passed() const { return report.passed(); }
};

struct DriverReport {
  std::string structure;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  std::vector<CheckRun> checks;
  bool passed() const;
};

/// Every check name the driver knows, in dispatch order.
const std::vector<std::string>& check_names();
/// Checks whose attachments `doc` carries.
std::vector<std::string> applicable_checks(const StructureDocument& doc);

/// Runs `selection` (or the file's declared checks, or every applicable
/// check when both are empty). The seed comes from `options` unless the
/// file declares one and `seed_overridden` is false.
DriverReport run_checks(const StructureDocument& doc, const std::vector<std::string>& selection,
                        CheckOptions options = {}, bool seed_overridden = false);

/// Phase space of the structure built from its attached connection, or the
/// Levi-Civita connection of its metric, with the canonical symplectic form
/// attached.
StructureDocument emit_phase_space(const StructureDocument& doc, const CheckOptions& options = {});

}  // namespace homlie
