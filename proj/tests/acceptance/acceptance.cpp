// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. All comparisons are exact; the only tolerance is
// the wall-clock budget below.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "equivalence.hpp"
#include "homlie/algebroid/verify.hpp"
#include "homlie/connection/connection.hpp"
#include "homlie/io/driver.hpp"
#include "homlie/io/fixtures.hpp"
#include "homlie/io/structure_file.hpp"
#include "homlie/parakahler/parakahler.hpp"
#include "homlie/parakahler/phase_space.hpp"

namespace {

using namespace homlie;

constexpr double kAxiomBudgetSeconds = 10.0;
constexpr int kPerturbations = 20;
constexpr int kOracleInputs = 50;

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      note = what;
    }
  }
};

std::string first_failure(const VerificationReport& r) {
  for (const auto& x : r.results()) {
    if (x.status == CheckStatus::Fail) return x.name + " at " + x.witness;
  }
  return "";
}

std::vector<std::string> regular_names() {
  std::vector<std::string> out;
  for (const auto& f : regular_fixtures()) out.push_back(f.name);
  return out;
}

std::vector<std::string> all_names() {
  std::vector<std::string> out;
  for (const auto& f : builtin_fixtures()) out.push_back(f.name);
  return out;
}

Verdict axiom_suites() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : regular_names()) {
    const DriverReport r = run_checks(load_fixture(name), {});
    for (const auto& c : r.checks) {
      v.require(c.report.passed(), name + " " + c.check + ": " + first_failure(c.report));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(seconds < kAxiomBudgetSeconds, "took " + std::to_string(seconds) + " s");
  if (v.ok) v.note = std::to_string(seconds).substr(0, 4) + " s";
  return v;
}

Verdict left_symmetric_connections() {
  Verdict v;
  int covered = 0;
  for (const auto& name : regular_names()) {
    const StructureDocument d = load_fixture(name);
    if (!d.symplectic || !check_symplectic(d.structure, *d.symplectic).passed()) continue;
    ++covered;
    const Connection c = left_symmetric_connection(d.structure, *d.symplectic);
    const VerificationReport r = verify_symplectic_connection(d.structure, *d.symplectic, c);
    for (const char* law : {"torsion_identity", "bracket_identity", "flatness_identity"}) {
      v.require(r.passed(law), name + " " + law);
    }
    v.require(r.passed(), name + ": " + first_failure(r));
  }
  v.require(covered > 0, "no fixture with a verified symplectic form");
  if (v.ok) v.note = std::to_string(covered) + " fixtures";
  return v;
}

Verdict levi_civita_contract() {
  Verdict v;
  int covered = 0;
  for (const auto& name : regular_names()) {
    const StructureDocument d = load_fixture(name);
    if (!d.metric || !check_metric(d.structure, *d.metric).passed()) continue;
    ++covered;
    const Connection c = levi_civita(d.structure, *d.metric);
    const VerificationReport r = verify_levi_civita(d.structure, *d.metric, c);
    v.require(r.passed("torsion_free") && r.passed("metric_compatible"), name + ": " + first_failure(r));
    Sampler s(kDefaultSeed);
    const long n = static_cast<long>(c.rank());
    for (int t = 0; t < kPerturbations; ++t) {
      const auto i = static_cast<std::size_t>(s.integer(0, n - 1));
      const auto j = static_cast<std::size_t>(s.integer(0, n - 1));
      const auto k = static_cast<std::size_t>(s.integer(0, n - 1));
      const bool broken = !verify_levi_civita(d.structure, *d.metric, c.perturbed(i, j, k, Scalar(1))).passed();
      v.require(broken, name + " perturbation survives");
    }
  }
  v.require(covered > 0, "no fixture with a verified metric");
  if (v.ok) v.note = std::to_string(covered) + " fixtures";
  return v;
}

Verdict fundamental_form_is_symplectic() {
  Verdict v;
  const StructureDocument d = load_fixture("double_zero_poisson");
  const Matrix omega = fundamental_form(d.structure, *d.metric, *d.product_structure);
  const VerificationReport r = check_symplectic(d.structure, omega);
  v.require(r.passed(), first_failure(r));
  return v;
}

Verdict para_kahler_suite() {
  Verdict v;
  const StructureDocument d = load_fixture("double_zero_poisson");
  const ParaKahlerCheck pk = check_para_kahler(d.structure, *d.metric, *d.product_structure, d.split);
  v.require(pk.data.has_value(), "double is not para-Kahler: " + first_failure(pk.report));
  if (pk.data) {
    const VerificationReport suite = verify_parakahler_suite(*pk.data);
    v.require(suite.passed(), "suite: " + first_failure(suite));
    v.require(suite.passed("connection_agreement"), "connection_agreement missing");
  }
  const StructureDocument m = load_fixture("double_literal_mutant");
  v.require(check_para_hermitian(m.structure, *m.metric, *m.product_structure, m.split).passed(),
            "mutant is not para-Hermitian");
  const ParaKahlerData md{m.structure, *m.metric, *m.product_structure, levi_civita(m.structure, *m.metric),
                          resolve_split(m.structure, *m.product_structure, m.split)};
  const VerificationReport ms = verify_parakahler_suite(md);
  const CheckResult* iii = ms.find("connection_preserves_split");
  v.require(iii != nullptr && iii->status == CheckStatus::Fail, "mutant passes the split-preservation claim");
  return v;
}

Verdict phase_space_end_to_end() {
  Verdict v;
  const StructureDocument emitted = emit_phase_space(load_fixture("rank2_affine"));
  const StructureDocument back = parse_structure(serialize_structure(emitted));
  const VerificationReport alg = check_hom_lie_algebroid(back.structure);
  v.require(alg.passed(), first_failure(alg));
  v.require(back.symplectic.has_value(), "no symplectic form after serialization");
  if (back.symplectic) {
    const VerificationReport sym = check_symplectic(back.structure, *back.symplectic);
    v.require(sym.passed(), first_failure(sym));
    v.require(*back.symplectic == canonical_form(2), "serialized form is not canonical");
  }
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  const std::vector<std::pair<std::string, std::function<oracle::Agreement(std::uint64_t, int)>>> ops{
      {"exterior_derivative", oracle::exterior_derivative_agreement},
      {"schouten_bracket", oracle::schouten_bracket_agreement},
      {"lie_derivative_form", oracle::lie_derivative_form_agreement},
      {"nijenhuis", oracle::nijenhuis_agreement},
  };
  for (const auto& [name, fn] : ops) {
    const oracle::Agreement a = fn(kDefaultSeed, kOracleInputs);
    v.require(a.inputs == kOracleInputs && a.agrees(), name + ": " + a.first_mismatch);
  }
  return v;
}

std::string capture(const std::string& command, int& code) {
  FILE* pipe = popen(command.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Verdict deterministic_reports() {
  Verdict v;
  for (const auto& name : all_names()) {
    const std::string command = std::string(HOMLIE_CLI_PATH) + " check builtin:" + name + " --json - 2>/dev/null";
    int c1 = 0, c2 = 0;
    const std::string a = capture(command, c1);
    const std::string b = capture(command, c2);
    v.require(c1 == 0 || c1 == 1, name + " exited " + std::to_string(c1));
    v.require(!a.empty() && a == b, name + " reports differ");
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"axiom suites on the regular fixtures", axiom_suites},
      {"symplectic left-symmetric connections", left_symmetric_connections},
      {"Levi-Civita existence and uniqueness", levi_civita_contract},
      {"fundamental form is symplectic", fundamental_form_is_symplectic},
      {"para-Kahler suite and mutant independence", para_kahler_suite},
      {"phase space through serialization", phase_space_end_to_end},
      {"oracle equivalence", oracle_equivalence},
      {"deterministic JSON reports", deterministic_reports},
  };
  bool all = true;
  int index = 0;
  for (const auto& [title, fn] : criteria) {
    ++index;
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    all = all && v.ok;
    std::cout << "criterion " << index << ": " << (v.ok ? "PASS" : "FAIL") << "  " << title;
    if (!v.note.empty()) std::cout << " (" << v.note << ")";
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
