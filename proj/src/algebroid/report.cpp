#include "homlie/algebroid/report.hpp"

namespace homlie {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Info:
      return "info";
  }
  return "fail";
}

void VerificationReport::append(const VerificationReport& other) {
  results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

VerificationReport& VerificationReport::prefixed(const std::string& prefix) {
  for (auto& r : results_) r.name = prefix + "." + r.name;
  return *this;
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results_) n += r.status == CheckStatus::Fail;
  return n;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& r : results_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

bool VerificationReport::passed(const std::string& name) const {
  const CheckResult* r = find(name);
  return r && r->status == CheckStatus::Pass;
}

void Law::record(const Scalar& residual, const std::function<std::string()>& witness,
                 const CoefficientRing& ring) {
  ++result_.cases;
  if (residual.is_zero() || failed()) return;
  result_.status = CheckStatus::Fail;
  result_.witness = witness();
  result_.residual = ring.format(residual);
}

void Law::record(const Section& residual, const std::function<std::string()>& witness,
                 const CoefficientRing& ring) {
  ++result_.cases;
  if (is_zero(residual) || failed()) return;
  result_.status = CheckStatus::Fail;
  result_.witness = witness();
  std::string text = "[";
  for (std::size_t i = 0; i < residual.size(); ++i) {
    if (i) text += ", ";
    text += ring.format(residual[i]);
  }
  result_.residual = text + "]";
}

void Law::record(const Matrix& residual, const std::function<std::string()>& witness,
                 const CoefficientRing& ring) {
  ++result_.cases;
  if (residual.is_zero() || failed()) return;
  result_.status = CheckStatus::Fail;
  result_.witness = witness();
  result_.residual = residual.to_string(ring.variables());
}

void Law::fail(const std::string& witness, const std::string& detail) {
  ++result_.cases;
  if (failed()) return;
  result_.status = CheckStatus::Fail;
  result_.witness = witness;
  result_.detail = detail;
}

CheckResult Law::finish() const {
  CheckResult out = result_;
  if (info_) out.status = CheckStatus::Info;
  return out;
}

std::string basis_tuple(std::initializer_list<std::size_t> indices) {
  std::string out = "(";
  bool first = true;
  for (auto i : indices) {
    if (!first) out += ",";
    first = false;
    out += "e" + std::to_string(i + 1);
  }
  return out + ")";
}

}  // namespace homlie
