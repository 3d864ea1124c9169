#include "homlie/io/report_io.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace homlie {

namespace {

using ordered = nlohmann::ordered_json;

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << v;
  return out.str();
}

std::string check_status(const CheckRun& run) {
  bool any_pass = false;
  for (const auto& r : run.report.results()) {
    if (r.status == CheckStatus::Fail) return "fail";
    if (r.status == CheckStatus::Pass) any_pass = true;
  }
  return any_pass || run.report.results().empty() ? "pass" : "info";
}

std::string milliseconds(double ms) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << ms;
  return out.str();
}

std::string term(const std::string& coefficient, std::size_t index) {
  const std::string e = "e" + std::to_string(index + 1);
  if (coefficient == "1") return e;
  if (coefficient == "-1") return "-" + e;
  const bool compound = coefficient.find_first_of("+-", 1) != std::string::npos;
  return (compound ? "(" + coefficient + ")" : coefficient) + "*" + e;
}

std::string combination(const HomAlgebroid& s, const Section& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_zero()) continue;
    std::string t = term(s.coefficients().format(x[k]), k);
    if (out.empty()) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out.empty() ? "0" : out;
}

void matrix_block(std::ostringstream& out, const std::string& title, const Matrix& m, const CoefficientRing& ring) {
  out << title << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << "  ";
      out << ring.format(m(i, j));
    }
    out << "\n";
  }
}

}  // namespace

std::string render_json(const DriverReport& report, const RenderOptions& options) {
  ordered root;
  root["format"] = "homlie-report";
  root["version"] = 1;
  root["structure"] = report.structure;
  root["seed"] = hex(report.seed);
  root["samples"] = report.samples;
  root["verdict"] = report.passed() ? "pass" : "fail";
  ordered checks = ordered::array();
  for (const auto& run : report.checks) {
    ordered c;
    c["check"] = run.check;
    c["status"] = check_status(run);
    if (options.timings) c["elapsed_ms"] = milliseconds(run.elapsed_ms);
    ordered results = ordered::array();
    for (const auto& r : run.report.results()) {
      ordered item;
      item["name"] = r.name;
      item["status"] = to_string(r.status);
      item["cases"] = r.cases;
      if (!r.witness.empty()) item["witness"] = r.witness;
      if (!r.residual.empty()) item["residual"] = r.residual;
      if (!r.detail.empty()) item["detail"] = r.detail;
      results.push_back(std::move(item));
    }
    c["results"] = std::move(results);
    checks.push_back(std::move(c));
  }
  root["checks"] = std::move(checks);
  return root.dump(2) + "\n";
}

std::string render_text(const DriverReport& report, const RenderOptions& options) {
  std::ostringstream out;
  out << "structure " << report.structure << "  seed " << hex(report.seed) << "  samples " << report.samples
      << "\n";
  for (const auto& run : report.checks) {
    out << run.check << ": " << check_status(run);
    if (options.timings) out << "  (" << milliseconds(run.elapsed_ms) << " ms)";
    out << "\n";
    for (const auto& r : run.report.results()) {
      out << "  " << std::left << std::setw(5) << to_string(r.status) << r.name << "  cases " << r.cases;
      if (!r.witness.empty()) out << "  witness " << r.witness;
      if (!r.residual.empty()) out << "  residual " << r.residual;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << "\n";
    }
  }
  out << "verdict: " << (report.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string describe_structure(const StructureDocument& doc) {
  const HomAlgebroid& s = doc.structure;
  const CoefficientRing& ring = s.coefficients();
  std::ostringstream out;
  out << (doc.name.empty() ? "(unnamed)" : doc.name) << "\n";
  if (!doc.description.empty()) out << "  " << doc.description << "\n";
  out << "ring: " << ring.describe();
  if (ring.nvars() > 0 && !ring.pullback().is_identity()) {
    out << ", phi*:";
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      out << " " << ring.variables()[v] << " -> " << ring.pullback().images()[v].to_string(ring.variables());
    }
  }
  out << "\nrank: " << s.rank() << "\n";
  matrix_block(out, "twist", s.bundle().twist(), ring);
  const bool lie = s.kind() == StructureKind::Lie;
  out << (lie ? "bracket" : "product") << ":\n";
  bool any = false;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    for (std::size_t j = lie ? i + 1 : 0; j < s.rank(); ++j) {
      const Section& c = s.entry(i, j);
      bool zero = true;
      for (const auto& x : c) zero = zero && x.is_zero();
      if (zero) continue;
      any = true;
      if (lie) {
        out << "  [e" << i + 1 << ", e" << j + 1 << "] = " << combination(s, c) << "\n";
      } else {
        out << "  e" << i + 1 << " . e" << j + 1 << " = " << combination(s, c) << "\n";
      }
    }
  }
  if (!any) out << "  (zero)\n";
  if (!s.has_zero_anchor()) {
    out << "anchor" << (s.anchors().front().twist() == DerivationTwist::Identity ? " (ordinary)" : "") << ":\n";
    for (std::size_t i = 0; i < s.rank(); ++i) {
      out << "  a(e" << i + 1 << ") =";
      const auto& q = s.anchors()[i].coefficients();
      bool first = true;
      for (std::size_t v = 0; v < q.size(); ++v) {
        if (q[v].is_zero()) continue;
        out << (first ? " " : " + ") << "(" << ring.format(q[v]) << ") d/d" << ring.variables()[v];
        first = false;
      }
      if (first) out << " 0";
      out << "\n";
    }
  }
  if (doc.metric) matrix_block(out, "metric", *doc.metric, ring);
  if (doc.symplectic) matrix_block(out, "symplectic", *doc.symplectic, ring);
  if (doc.product_structure) matrix_block(out, "product structure", *doc.product_structure, ring);
  if (doc.split) {
    out << "split: plus";
    for (const auto& x : doc.split->plus) out << " " << combination(s, x);
    out << "; minus";
    for (const auto& x : doc.split->minus) out << " " << combination(s, x);
    out << "\n";
  }
  if (doc.connection) {
    out << "connection:\n";
    for (std::size_t i = 0; i < s.rank(); ++i) {
      for (std::size_t j = 0; j < s.rank(); ++j) {
        const Section& c = (*doc.connection)[i][j];
        bool zero = true;
        for (const auto& x : c) zero = zero && x.is_zero();
        if (!zero) out << "  nabla_e" << i + 1 << " e" << j + 1 << " = " << combination(s, c) << "\n";
      }
    }
  }
  if (!doc.checks.empty()) {
    out << "declared checks:";
    for (const auto& c : doc.checks) out << " " << c;
    out << "\n";
  }
  return out.str();
}

}  // namespace homlie
