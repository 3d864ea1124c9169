#include "equivalence.hpp"

#include "homlie/algebroid/verify.hpp"
#include "homlie/io/fixtures.hpp"
#include "homlie/parakahler/parakahler.hpp"
#include "naive.hpp"
#include "support.hpp"

namespace oracle {

namespace {

using namespace homlie;
using testing_support::random_poly_section;
using testing_support::random_structure;

HomAlgebroid pick_structure(Sampler& s, int t) {
  static const std::vector<Fixture> fixtures = regular_fixtures();
  if (t % 3 == 2) return load_fixture(fixtures[static_cast<std::size_t>(t / 3) % fixtures.size()].name).structure;
  const auto rank = static_cast<std::size_t>(s.integer(2, 4));
  return random_structure(s, rank, t % 3 == 0);
}

Section pick_section(Sampler& s, const HomAlgebroid& a) {
  if (a.coefficients().kind() == RingKind::Rationals) return random_section(s, a.bundle());
  return random_poly_section(s, a);
}

void record(Agreement& out, bool equal, const std::string& what) {
  ++out.inputs;
  if (!equal) {
    if (out.mismatches == 0) out.first_mismatch = what;
    ++out.mismatches;
  }
}

}  // namespace

Agreement exterior_derivative_agreement(std::uint64_t seed, int inputs) {
  Agreement out;
  Sampler s(seed);
  for (int t = 0; t < inputs; ++t) {
    const HomAlgebroid a = pick_structure(s, t);
    const auto degree = static_cast<std::size_t>(s.integer(0, static_cast<long>(a.rank()) - 1));
    Form w(a.rank(), degree);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = s.element(a.coefficients(), 2);
    bool equal = true;
    const Form d = exterior_derivative(a, w);
    const auto& tuples = d.tuples();
    for (std::size_t k = 0; k < tuples.size() && equal; ++k) {
      std::vector<Section> args;
      for (auto i : tuples[k]) args.push_back(a.bundle().basis(i));
      equal = d[k] == oracle::exterior_derivative(a, w, args);
    }
    std::vector<Section> args;
    for (std::size_t i = 0; i <= degree; ++i) args.push_back(pick_section(s, a));
    equal = equal && homlie::exterior_derivative_at(a, w, args) == oracle::exterior_derivative(a, w, args);
    record(out, equal, "input " + std::to_string(t) + ", degree " + std::to_string(degree));
  }
  return out;
}

Agreement lie_derivative_form_agreement(std::uint64_t seed, int inputs) {
  Agreement out;
  Sampler s(seed);
  for (int t = 0; t < inputs; ++t) {
    const HomAlgebroid a = pick_structure(s, t);
    const auto degree = static_cast<std::size_t>(s.integer(0, static_cast<long>(a.rank())));
    Form w(a.rank(), degree);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = s.element(a.coefficients(), 2);
    const Section z = pick_section(s, a);
    bool equal = true;
    const Form l = lie_derivative_form(a, z, w);
    const auto& tuples = l.tuples();
    for (std::size_t k = 0; k < tuples.size() && equal; ++k) {
      std::vector<Section> args;
      for (auto i : tuples[k]) args.push_back(a.bundle().basis(i));
      equal = l[k] == oracle::lie_derivative(a, z, w, args);
    }
    std::vector<Section> args;
    for (std::size_t i = 0; i < degree; ++i) args.push_back(pick_section(s, a));
    equal = equal && lie_derivative_form_at(a, z, w, args) == oracle::lie_derivative(a, z, w, args);
    record(out, equal, "input " + std::to_string(t) + ", degree " + std::to_string(degree));
  }
  return out;
}

Agreement schouten_bracket_agreement(std::uint64_t seed, int inputs) {
  Agreement out;
  Sampler s(seed);
  for (int t = 0; t < inputs; ++t) {
    const HomAlgebroid a = pick_structure(s, t);
    const auto n = static_cast<long>(a.rank());
    const auto p = static_cast<std::size_t>(s.integer(1, n));
    const auto q = static_cast<std::size_t>(s.integer(1, n + 1 - static_cast<long>(p)));
    Multivector u(a.rank(), p), v(a.rank(), q);
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = s.element(a.coefficients(), 1);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = s.element(a.coefficients(), 1);
    const bool equal = schouten_bracket(a, u, v).values() == oracle::schouten(a, u, v).values();
    record(out, equal, "input " + std::to_string(t) + ", degrees " + std::to_string(p) + "," + std::to_string(q));
  }
  return out;
}

Agreement nijenhuis_agreement(std::uint64_t seed, int inputs) {
  Agreement out;
  Sampler s(seed);
  for (int t = 0; t < inputs; ++t) {
    const HomAlgebroid a = pick_structure(s, t);
    Matrix k(a.rank(), a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      for (std::size_t j = 0; j < a.rank(); ++j) k(i, j) = s.element(a.coefficients(), 1);
    }
    const Section x = pick_section(s, a);
    const Section y = pick_section(s, a);
    bool equal = homlie::nijenhuis(a, k, x, y) == oracle::nijenhuis(a, k, x, y);
    const StructureTable table = nijenhuis_table(a, k);
    for (std::size_t i = 0; i < a.rank() && equal; ++i) {
      for (std::size_t j = 0; j < a.rank() && equal; ++j) {
        equal = table[i][j] == oracle::nijenhuis(a, k, a.bundle().basis(i), a.bundle().basis(j));
      }
    }
    record(out, equal, "input " + std::to_string(t));
  }
  return out;
}

}  // namespace oracle
