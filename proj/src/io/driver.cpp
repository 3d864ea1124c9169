#include "homlie/io/driver.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "homlie/algebroid/verify.hpp"
#include "homlie/connection/connection.hpp"
#include "homlie/parakahler/parakahler.hpp"
#include "homlie/parakahler/phase_space.hpp"

namespace homlie {

namespace {

CheckResult failure(const std::string& name, const std::string& detail) {
  CheckResult r;
  r.name = name;
  r.status = CheckStatus::Fail;
  r.detail = detail;
  return r;
}

CheckResult success(const std::string& name, const std::string& detail = {}) {
  CheckResult r;
  r.name = name;
  r.cases = 1;
  r.detail = detail;
  return r;
}

struct Needs {
  bool lie = false;
  bool product = false;
  bool metric = false;
  bool symplectic = false;
  bool k = false;
  bool connection_source = false;
};

const std::map<std::string, Needs>& needs_table() {
  static const std::map<std::string, Needs> table = {
      {"homliealgebra", {.lie = true}},
      {"homliealgebroid", {.lie = true}},
      {"homalgebroid", {.product = true}},
      {"metric", {.metric = true}},
      {"levicivita", {.lie = true, .metric = true}},
      {"symplectic", {.symplectic = true}},
      {"leftsymmetric", {.lie = true, .symplectic = true}},
      {"almostproduct", {.k = true}},
      {"paracomplex", {.k = true}},
      {"parahermitian", {.metric = true, .k = true}},
      {"parakahler", {.lie = true, .metric = true, .k = true}},
      {"phasespace", {.lie = true, .connection_source = true}},
      {"dsquared", {.lie = true}},
  };
  return table;
}

std::string missing(const StructureDocument& doc, const Needs& n) {
  const bool lie = doc.structure.kind() == StructureKind::Lie;
  if (n.lie && !lie) return "a Lie-type bracket";
  if (n.product && lie) return "a product-type structure";
  if (n.metric && !doc.metric) return "a metric";
  if (n.symplectic && !doc.symplectic) return "a symplectic form";
  if (n.k && !doc.product_structure) return "a product structure";
  if (n.connection_source && !doc.metric && !doc.connection) return "a metric or a connection";
  return {};
}

Connection attached_or_levi_civita(const StructureDocument& doc) {
  if (doc.connection) return Connection(doc.structure, *doc.connection);
  return levi_civita(doc.structure, *doc.metric);
}

VerificationReport run_levi_civita(const StructureDocument& doc, const CheckOptions& options) {
  VerificationReport report;
  const HomAlgebroid& s = doc.structure;
  std::optional<Connection> c;
  try {
    c.emplace(levi_civita(s, *doc.metric));
    report.add(success("solve"));
  } catch (const Error& e) {
    report.add(failure("solve", e.what()));
    return report;
  }
  report.append(verify_levi_civita(s, *doc.metric, *c, options));
  if (doc.connection) {
    const Connection attached(s, *doc.connection);
    if (attached == *c) {
      report.add(success("attached_connection"));
    } else {
      report.add(failure("attached_connection", "the attached connection differs from the Levi-Civita connection"));
    }
  }
  return report;
}

VerificationReport run_left_symmetric(const StructureDocument& doc, const CheckOptions& options) {
  VerificationReport report;
  const HomAlgebroid& s = doc.structure;
  std::optional<Connection> c;
  try {
    c.emplace(left_symmetric_connection(s, *doc.symplectic));
    report.add(success("solve"));
  } catch (const Error& e) {
    report.add(failure("solve", e.what()));
    return report;
  }
  try {
    const Connection flat = left_symmetric_connection_via_flat(s, *doc.symplectic);
    if (flat == *c) {
      CheckResult r = success("routes_agree");
      r.cases = s.rank() * s.rank();
      report.add(r);
    } else {
      report.add(failure("routes_agree", "the flat-map route gives a different connection"));
    }
  } catch (const Error& e) {
    report.add(failure("routes_agree", e.what()));
  }
  report.append(verify_symplectic_connection(s, *doc.symplectic, *c, options));
  return report;
}

VerificationReport run_para_kahler(const StructureDocument& doc, const CheckOptions& options) {
  const HomAlgebroid& s = doc.structure;
  ParaKahlerCheck pk = check_para_kahler(s, *doc.metric, *doc.product_structure, doc.split, options);
  VerificationReport report = pk.report;
  std::optional<ParaKahlerData> data = pk.data;
  if (!data) {
    // The suite still runs for per-claim diagnostics once the frame-level
    // ingredients exist.
    try {
      data.emplace(ParaKahlerData{s, *doc.metric, *doc.product_structure, levi_civita(s, *doc.metric),
                                  resolve_split(s, *doc.product_structure, doc.split)});
    } catch (const Error& e) {
      report.add(failure("suite", std::string("not run: ") + e.what()));
      return report;
    }
  }
  try {
    report.append(verify_parakahler_suite(*data, options).prefixed("suite"));
  } catch (const Error& e) {
    report.add(failure("suite", e.what()));
  }
  return report;
}

VerificationReport run_phase_space(const StructureDocument& doc, const CheckOptions& options) {
  VerificationReport report;
  std::optional<HomAlgebroid> ps;
  try {
    ps.emplace(build_phase_space(doc.structure, attached_or_levi_civita(doc), options));
    report.add(success("build"));
  } catch (const Error& e) {
    report.add(failure("build", e.what()));
    return report;
  }
  report.append(check_phase_space(*ps, options));
  return report;
}

VerificationReport dispatch(const std::string& check, const StructureDocument& doc, const CheckOptions& options) {
  const HomAlgebroid& s = doc.structure;
  if (check == "homliealgebra") return check_hom_lie_algebra(s, options);
  if (check == "homliealgebroid") return check_hom_lie_algebroid(s, options);
  if (check == "homalgebroid") return check_hom_algebroid(s, options);
  if (check == "metric") return check_metric(s, *doc.metric, options);
  if (check == "levicivita") return run_levi_civita(doc, options);
  if (check == "symplectic") return check_symplectic(s, *doc.symplectic, options);
  if (check == "leftsymmetric") return run_left_symmetric(doc, options);
  if (check == "almostproduct") return check_almost_product(s, *doc.product_structure, options);
  if (check == "paracomplex") return check_para_complex(s, *doc.product_structure, doc.split, options);
  if (check == "parahermitian") {
    return check_para_hermitian(s, *doc.metric, *doc.product_structure, doc.split, options);
  }
  if (check == "parakahler") return run_para_kahler(doc, options);
  if (check == "phasespace") return run_phase_space(doc, options);
  return dsquared_report(s, options);
}

}  // namespace

bool DriverReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRun& c) { return c.passed(); });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "homliealgebra", "homliealgebroid", "homalgebroid", "metric",     "levicivita", "symplectic", "leftsymmetric",
      "almostproduct", "paracomplex",     "parahermitian", "parakahler", "phasespace", "dsquared"};
  return names;
}

std::vector<std::string> applicable_checks(const StructureDocument& doc) {
  std::vector<std::string> out;
  for (const auto& name : check_names()) {
    if (missing(doc, needs_table().at(name)).empty()) out.push_back(name);
  }
  return out;
}

DriverReport run_checks(const StructureDocument& doc, const std::vector<std::string>& selection,
                        CheckOptions options, bool seed_overridden) {
  if (doc.seed && !seed_overridden) options.seed = *doc.seed;
  std::vector<std::string> names = selection;
  if (names.empty()) names = doc.checks;
  if (names.empty()) names = applicable_checks(doc);
  for (const auto& name : names) {
    auto it = needs_table().find(name);
    if (it == needs_table().end()) throw AttachmentError("unknown check '" + name + "'");
    const std::string need = missing(doc, it->second);
    if (!need.empty()) throw AttachmentError("check '" + name + "' needs " + need + "; the structure has none");
  }

  DriverReport report;
  report.structure = doc.name;
  report.seed = options.seed;
  report.samples = options.samples;
  for (const auto& name : names) {
    CheckRun run;
    run.check = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      run.report = dispatch(name, doc, options);
    } catch (const Error& e) {
      run.report.add(failure("error", e.what()));
    }
    run.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(run));
  }
  return report;
}

StructureDocument emit_phase_space(const StructureDocument& doc, const CheckOptions& options) {
  const std::string need = missing(doc, needs_table().at("phasespace"));
  if (!need.empty()) throw AttachmentError("phase space needs " + need + "; the structure has none");
  StructureDocument out;
  out.structure = build_phase_space(doc.structure, attached_or_levi_civita(doc), options);
  out.name = (doc.name.empty() ? std::string("structure") : doc.name) + "_phase_space";
  out.description = "Phase space (A + A*) of " + (doc.name.empty() ? std::string("a structure") : doc.name) +
                    " with the canonical symplectic form.";
  out.symplectic = canonical_form(doc.structure.rank());
  out.checks = {"homliealgebra", "homliealgebroid", "symplectic"};
  return out;
}

}  // namespace homlie
