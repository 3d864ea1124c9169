#include "homlie/io/structure_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "homlie/errors.hpp"
#include "homlie/ring/expression.hpp"

namespace homlie {

namespace {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& path, const std::string& message) {
  throw InvalidStructureError(path + ": " + message);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(path, std::string("missing field '") + key + "'");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  if (!obj.is_object()) invalid(path, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) invalid(path, "unknown field '" + it.key() + "'");
  }
}

std::string text_of(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  invalid(path, "expected an expression string or an integer");
}

Scalar scalar_of(const json& v, const CoefficientRing& ring, const std::string& path) {
  const std::string text = text_of(v, path);
  try {
    return ring.parse(text);
  } catch (const DomainError& e) {
    invalid(path, e.what());
  } catch (const Error& e) {
    invalid(path, "'" + text + "': " + e.what());
  }
}

std::size_t index_of(const json& v, std::size_t rank, const std::string& path) {
  if (!v.is_number_integer()) invalid(path, "expected a 1-based frame index");
  const long long i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > rank) {
    invalid(path, "frame index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
  }
  return static_cast<std::size_t>(i - 1);
}

Vector vector_of(const json& v, const CoefficientRing& ring, std::size_t size, const std::string& path) {
  if (!v.is_array() || v.size() != size) invalid(path, "expected a list of " + std::to_string(size) + " entries");
  Vector out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = scalar_of(v[i], ring, path + "[" + std::to_string(i) + "]");
  return out;
}

Matrix matrix_of(const json& v, const CoefficientRing& ring, std::size_t n, const std::string& path) {
  if (!v.is_array() || v.size() != n) invalid(path, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector row = vector_of(v[i], ring, n, path + "[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return m;
}

StructureTable entries_of(const json& v, const CoefficientRing& ring, std::size_t n, bool skew,
                          const std::string& path) {
  if (!v.is_array()) invalid(path, "expected a list of [i, j, k, coefficient] entries");
  StructureTable table = make_table(n);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::string p = path + "[" + std::to_string(t) + "]";
    const json& e = v[t];
    if (!e.is_array() || e.size() != 4) invalid(p, "expected [i, j, k, coefficient]");
    const std::size_t i = index_of(e[0], n, p + "[0]");
    const std::size_t j = index_of(e[1], n, p + "[1]");
    const std::size_t k = index_of(e[2], n, p + "[2]");
    const Scalar c = scalar_of(e[3], ring, p + "[3]");
    if (skew && i == j && !c.is_zero()) invalid(p, "a skew bracket has [e_i, e_i] = 0");
    if (!seen.insert({i, j, k}).second || (skew && seen.count({j, i, k}) && i != j)) {
      invalid(p, "entry given twice");
    }
    table[i][j][k] = c;
    if (skew) table[j][i][k] = -c;
  }
  return table;
}

RingPtr ring_of(const json& v) {
  only_keys(v, {"kind", "variables", "phi_star", "phi_star_inverse"}, "ring");
  const std::string kind = text_of(require(v, "kind", "ring"), "ring.kind");
  if (kind == "rationals") {
    if (v.contains("variables") && !v["variables"].empty()) invalid("ring.variables", "the rationals take no variables");
    return CoefficientRing::rationals();
  }
  RingKind rk;
  if (kind == "polynomial") {
    rk = RingKind::Polynomial;
  } else if (kind == "fraction_field") {
    rk = RingKind::FractionField;
  } else {
    invalid("ring.kind", "expected 'rationals', 'polynomial' or 'fraction_field', got '" + kind + "'");
  }
  const json& vars = require(v, "variables", "ring");
  if (!vars.is_array()) invalid("ring.variables", "expected a list of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) invalid("ring.variables[" + std::to_string(i) + "]", "expected a name");
    names.push_back(vars[i].get<std::string>());
  }
  auto images = [&](const char* key) {
    std::vector<Polynomial> out;
    const json& list = require(v, key, "ring");
    const std::string path = std::string("ring.") + key;
    if (!list.is_array() || list.size() != names.size()) {
      invalid(path, "expected one image per variable");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      const std::string text = text_of(list[i], p);
      Scalar s;
      try {
        s = parse_expression(text, names);
      } catch (const Error& e) {
        invalid(p, "'" + text + "': " + e.what());
      }
      if (!s.is_polynomial()) invalid(p, "substitution images must be polynomials");
      Polynomial poly = s.numerator();
      if (poly.nvars() != names.size()) poly = poly.lifted(names.size());
      out.push_back(std::move(poly));
    }
    return out;
  };
  try {
    RingEndomorphism pullback(images("phi_star"), images("phi_star_inverse"));
    return std::make_shared<const CoefficientRing>(rk, names, std::move(pullback));
  } catch (const InvalidStructureError&) {
    throw;
  } catch (const Error& e) {
    invalid("ring", e.what());
  }
}

std::uint64_t seed_of(const json& v) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      std::size_t used = 0;
      const std::uint64_t out = std::stoull(s, &used, 0);
      if (used == s.size()) return out;
    } catch (const std::exception&) {
    }
  }
  invalid("seed", "expected an unsigned integer or a hex string");
}

void position_of(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << v;
  return out.str();
}

}  // namespace

StructureDocument parse_structure(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 0;
    std::size_t column = 0;
    position_of(text, e.byte, line, column);
    std::string message = e.what();
    const auto colon = message.rfind(": ");
    if (colon != std::string::npos) message = message.substr(colon + 2);
    throw ParseError(message, line, column);
  }
  only_keys(root, {"format", "version", "name", "description", "ring", "bundle", "bracket", "anchor", "metric",
                   "symplectic", "product_structure", "split", "connection", "checks", "seed"},
            "structure");
  if (root.contains("format") && root["format"] != "homlie-structure") {
    invalid("format", "expected \"homlie-structure\"");
  }
  const json& version = require(root, "version", "structure");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    invalid("version", "unsupported version (expected " + std::to_string(kFormatVersion) + ")");
  }

  StructureDocument doc;
  if (root.contains("name")) doc.name = text_of(root["name"], "name");
  if (root.contains("description")) doc.description = text_of(root["description"], "description");

  const RingPtr ring = ring_of(require(root, "ring", "structure"));
  const CoefficientRing& r = *ring;

  const json& bundle = require(root, "bundle", "structure");
  only_keys(bundle, {"rank", "phi", "phi_inverse"}, "bundle");
  const json& rank_v = require(bundle, "rank", "bundle");
  if (!rank_v.is_number_integer() || rank_v.get<long long>() < 1) invalid("bundle.rank", "expected a positive integer");
  const std::size_t n = rank_v.get<std::size_t>();
  Matrix phi = bundle.contains("phi") ? matrix_of(bundle["phi"], r, n, "bundle.phi") : Matrix::identity(n);
  std::optional<Matrix> phi_inv;
  if (bundle.contains("phi_inverse")) phi_inv = matrix_of(bundle["phi_inverse"], r, n, "bundle.phi_inverse");
  std::optional<HomBundle> hb;
  try {
    hb.emplace(ring, std::move(phi), std::move(phi_inv));
  } catch (const Error& e) {
    invalid("bundle", e.what());
  }

  StructureKind kind = StructureKind::Lie;
  StructureTable table = make_table(n);
  if (root.contains("bracket")) {
    const json& br = root["bracket"];
    only_keys(br, {"type", "entries"}, "bracket");
    if (br.contains("type")) {
      const std::string t = text_of(br["type"], "bracket.type");
      if (t == "product") {
        kind = StructureKind::Product;
      } else if (t != "lie") {
        invalid("bracket.type", "expected 'lie' or 'product'");
      }
    }
    if (br.contains("entries")) {
      table = entries_of(br["entries"], r, n, kind == StructureKind::Lie, "bracket.entries");
    }
  }

  std::vector<TwistedDerivation> anchors;
  if (root.contains("anchor")) {
    const json& an = root["anchor"];
    only_keys(an, {"twist", "coefficients"}, "anchor");
    DerivationTwist twist = DerivationTwist::Pullback;
    if (an.contains("twist")) {
      const std::string t = text_of(an["twist"], "anchor.twist");
      if (t == "identity") {
        twist = DerivationTwist::Identity;
      } else if (t != "pullback") {
        invalid("anchor.twist", "expected 'pullback' or 'identity'");
      }
    }
    const json& coeffs = require(an, "coefficients", "anchor");
    if (!coeffs.is_array() || coeffs.size() != n) invalid("anchor.coefficients", "expected one list per frame section");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string p = "anchor.coefficients[" + std::to_string(i) + "]";
      anchors.emplace_back(ring, vector_of(coeffs[i], r, r.nvars(), p), twist);
    }
  }
  try {
    doc.structure = HomAlgebroid(*hb, kind, std::move(table), std::move(anchors));
  } catch (const Error& e) {
    invalid("bracket", e.what());
  }

  if (root.contains("metric")) doc.metric = matrix_of(root["metric"], r, n, "metric");
  if (root.contains("symplectic")) doc.symplectic = matrix_of(root["symplectic"], r, n, "symplectic");
  if (root.contains("product_structure")) {
    doc.product_structure = matrix_of(root["product_structure"], r, n, "product_structure");
  }
  if (root.contains("split")) {
    const json& sp = root["split"];
    only_keys(sp, {"plus", "minus"}, "split");
    AdaptedSplit split;
    for (const char* key : {"plus", "minus"}) {
      const json& list = require(sp, key, "split");
      const std::string path = std::string("split.") + key;
      if (!list.is_array()) invalid(path, "expected a list of sections");
      auto& out = std::string(key) == "plus" ? split.plus : split.minus;
      for (std::size_t i = 0; i < list.size(); ++i) {
        out.push_back(vector_of(list[i], r, n, path + "[" + std::to_string(i) + "]"));
      }
    }
    doc.split = std::move(split);
  }
  if (root.contains("connection")) {
    const json& cn = root["connection"];
    only_keys(cn, {"entries"}, "connection");
    const RingPtr field = fraction_field(ring);
    doc.connection = entries_of(require(cn, "entries", "connection"), *field, n, false, "connection.entries");
  }
  if (root.contains("checks")) {
    const json& checks = root["checks"];
    if (!checks.is_array()) invalid("checks", "expected a list of check names");
    for (std::size_t i = 0; i < checks.size(); ++i) {
      if (!checks[i].is_string()) invalid("checks[" + std::to_string(i) + "]", "expected a check name");
      doc.checks.push_back(checks[i].get<std::string>());
    }
  }
  if (root.contains("seed")) doc.seed = seed_of(root["seed"]);
  return doc;
}

StructureDocument load_structure(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidStructureError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_structure(buffer.str());
}

namespace {

ordered matrix_json(const Matrix& m, const CoefficientRing& ring) {
  ordered rows = ordered::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered row = ordered::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ring.format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered vector_json(const Vector& v, const CoefficientRing& ring) {
  ordered out = ordered::array();
  for (const auto& c : v) out.push_back(ring.format(c));
  return out;
}

ordered entries_json(const StructureTable& table, const CoefficientRing& ring, bool skew) {
  ordered out = ordered::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = skew ? i + 1 : 0; j < table.size(); ++j) {
      for (std::size_t k = 0; k < table[i][j].size(); ++k) {
        if (table[i][j][k].is_zero()) continue;
        out.push_back(ordered::array({i + 1, j + 1, k + 1, ring.format(table[i][j][k])}));
      }
    }
  }
  return out;
}

bool flat_array(const ordered& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v) {
    if (x.is_structured()) return false;
  }
  return true;
}

// Like dump(2), but arrays of scalars stay on one line so matrices read row by row.
void emit(std::string& out, const ordered& v, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  if (flat_array(v)) {
    out += "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += v[i].dump();
    }
    out += "]";
    return;
  }
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + ordered(it.key()).dump() + ": ";
      emit(out, it.value(), depth + 1);
    }
    out += "\n" + close + "}";
    return;
  }
  if (v.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      emit(out, v[i], depth + 1);
    }
    out += "\n" + close + "]";
    return;
  }
  out += v.dump();
}

std::string kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::Rationals:
      return "rationals";
    case RingKind::Polynomial:
      return "polynomial";
    case RingKind::FractionField:
      return "fraction_field";
  }
  return "rationals";
}

}  // namespace

std::string serialize_structure(const StructureDocument& doc) {
  const HomAlgebroid& s = doc.structure;
  const CoefficientRing& ring = s.coefficients();
  ordered root;
  root["format"] = "homlie-structure";
  root["version"] = kFormatVersion;
  if (!doc.name.empty()) root["name"] = doc.name;
  if (!doc.description.empty()) root["description"] = doc.description;

  ordered r;
  r["kind"] = kind_name(ring.kind());
  if (ring.kind() != RingKind::Rationals) {
    r["variables"] = ring.variables();
    ordered images = ordered::array();
    ordered inverse = ordered::array();
    const std::size_t k = ring.nvars();
    for (std::size_t v = 0; v < k; ++v) {
      images.push_back(ring.pullback().is_identity() ? ring.variables()[v]
                                                     : ring.pullback().images()[v].to_string(ring.variables()));
      inverse.push_back(ring.pullback().is_identity()
                            ? ring.variables()[v]
                            : ring.pullback().inverse_images()[v].to_string(ring.variables()));
    }
    r["phi_star"] = std::move(images);
    r["phi_star_inverse"] = std::move(inverse);
  }
  root["ring"] = std::move(r);

  ordered b;
  b["rank"] = s.rank();
  b["phi"] = matrix_json(s.bundle().twist(), ring);
  b["phi_inverse"] = matrix_json(s.bundle().inverse_twist(), ring);
  root["bundle"] = std::move(b);

  ordered br;
  const bool lie = s.kind() == StructureKind::Lie;
  br["type"] = lie ? "lie" : "product";
  br["entries"] = entries_json(s.table(), ring, lie);
  root["bracket"] = std::move(br);

  if (!s.has_zero_anchor()) {
    ordered an;
    an["twist"] = s.anchors().front().twist() == DerivationTwist::Identity ? "identity" : "pullback";
    ordered coeffs = ordered::array();
    for (const auto& a : s.anchors()) coeffs.push_back(vector_json(a.coefficients(), ring));
    an["coefficients"] = std::move(coeffs);
    root["anchor"] = std::move(an);
  }
  if (doc.metric) root["metric"] = matrix_json(*doc.metric, ring);
  if (doc.symplectic) root["symplectic"] = matrix_json(*doc.symplectic, ring);
  if (doc.product_structure) root["product_structure"] = matrix_json(*doc.product_structure, ring);
  if (doc.split) {
    ordered sp;
    ordered plus = ordered::array();
    ordered minus = ordered::array();
    for (const auto& x : doc.split->plus) plus.push_back(vector_json(x, ring));
    for (const auto& x : doc.split->minus) minus.push_back(vector_json(x, ring));
    sp["plus"] = std::move(plus);
    sp["minus"] = std::move(minus);
    root["split"] = std::move(sp);
  }
  if (doc.connection) {
    ordered cn;
    cn["entries"] = entries_json(*doc.connection, ring, false);
    root["connection"] = std::move(cn);
  }
  if (!doc.checks.empty()) root["checks"] = doc.checks;
  if (doc.seed) root["seed"] = hex(*doc.seed);
  std::string out;
  emit(out, root, 0);
  return out + "\n";
}

}  // namespace homlie
