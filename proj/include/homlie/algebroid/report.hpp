#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homlie/algebroid/bundle.hpp"
#include "homlie/ring/sampling.hpp"

namespace homlie {

enum class CheckStatus { Pass, Fail, Info };

std::string to_string(CheckStatus status);

/// One named law. On failure `witness` names the first offending tuple and
/// `residual` renders its nonzero residual exactly.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::size_t cases = 0;
  std::string witness;
  std::string residual;
  std::string detail;
  std::optional<double> elapsed_ms;
};

class VerificationReport {
 public:
  void add(CheckResult result) { results_.push_back(std::move(result)); }
  void append(const VerificationReport& other);
  /// Prefixes every result name with `prefix` + ".".
  VerificationReport& prefixed(const std::string& prefix);

  const std::vector<CheckResult>& results() const { return results_; }
  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  /// True when `name` is present and passed.
  bool passed(const std::string& name) const;
  std::size_t failures() const;

 private:
  std::vector<CheckResult> results_;
};

/// Knobs shared by every verifier.
struct CheckOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
};

/// Accumulates residuals for one law and keeps the first nonzero one.
class Law {
 public:
  explicit Law(std::string name) { result_.name = std::move(name); }

  void record(const Scalar& residual, const std::function<std::string()>& witness,
              const CoefficientRing& ring);
  void record(const Section& residual, const std::function<std::string()>& witness,
              const CoefficientRing& ring);
  void record(const Matrix& residual, const std::function<std::string()>& witness,
              const CoefficientRing& ring);
  /// Marks a failure that is not a residual (e.g. a degenerate form).
  void fail(const std::string& witness, const std::string& detail);
  void set_detail(std::string detail) { result_.detail = std::move(detail); }
  void set_info() { info_ = true; }

  bool failed() const { return result_.status == CheckStatus::Fail; }
  CheckResult finish() const;

 private:
  CheckResult result_;
  bool info_ = false;
};

/// "(e1,e2,e3)" for basis tuples.
std::string basis_tuple(std::initializer_list<std::size_t> indices);

}  // namespace homlie
