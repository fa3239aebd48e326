#include "gext/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gext {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_from_json(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError("expected a non-negative integer index");
  return j.get<std::size_t>();
}

void check_format(const json& j, const std::string& format) {
  if (field(j, "format") != format) throw ParseError("expected format '" + format + "'");
  if (field(j, "version") != kInstanceVersion)
    throw ParseError("unsupported version " + field(j, "version").dump());
}

json group_to_json(const std::vector<std::vector<std::size_t>>& table) {
  std::size_t identity = 0;
  for (std::size_t g = 0; g < table.size(); ++g) {
    bool ok = true;
    for (std::size_t h = 0; h < table.size(); ++h) ok = ok && table[g][h] == h;
    if (ok) {
      identity = g;
      break;
    }
  }
  return json{{"order", table.size()}, {"identity", identity}, {"table", table}};
}

std::vector<std::vector<std::size_t>> group_from_json(const json& j) {
  const std::size_t order = index_from_json(field(j, "order"));
  const json& t = field(j, "table");
  if (!t.is_array() || t.size() != order) throw ParseError("group table must have 'order' rows");
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != order) throw ParseError("group table must be square");
    std::vector<std::size_t> r;
    for (const auto& x : row) r.push_back(index_from_json(x));
    table.push_back(std::move(r));
  }
  if (j.contains("identity")) {
    const std::size_t e = index_from_json(j.at("identity"));
    if (e >= order) throw ParseError("identity index out of range");
    for (std::size_t h = 0; h < order; ++h)
      if (table[e][h] != h || table[h][e] != h)
        throw GroupAxiomViolation(GroupLaw::Identity, "declared identity does not act trivially");
  }
  return table;
}

}  // namespace

json base_to_json(const BaseRing& base) {
  switch (base.kind()) {
    case RingKind::Integers:
      return json{{"kind", "Z"}};
    case RingKind::IntegersMod:
      return json{{"kind", "Zmod"}, {"modulus", base.modulus()}};
    case RingKind::PrimeField:
      return json{{"kind", "Fp"}, {"p", base.modulus()}};
  }
  return json();
}

BaseRing base_from_json(const json& j) {
  const json& kind = field(j, "kind");
  try {
    if (kind == "Z") return BaseRing::integers();
    if (kind == "Zmod") return BaseRing::integers_mod(index_from_json(field(j, "modulus")));
    if (kind == "Fp") return BaseRing::prime_field(index_from_json(field(j, "p")));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("bad base ring: ") + e.what());
  }
  throw ParseError("unknown base ring kind " + kind.dump());
}

json scalar_to_json(const Scalar& x) { return x.get_str(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw ParseError("scalar must be a decimal string");
  const std::string s = j.get<std::string>();
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("scalar '" + s + "' is not a decimal integer");
  return Scalar(s);
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

Vector vector_from_json(const json& j, const BaseRing& base) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  Vector v;
  for (const auto& x : j) v.push_back(base.reduce(scalar_from_json(x)));
  return v;
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j, const BaseRing& base, std::size_t cols_if_empty) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : cols_if_empty;
  ExactMatrix m(base, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_from_json(j[r][c]));
  }
  return m;
}

InstanceDocument parse_instance(const json& j) {
  check_format(j, "gext-instance");
  InstanceDocument doc;
  AlgebraDescription& d = doc.algebra;
  d.base = base_from_json(field(j, "base"));
  const json& a = field(j, "algebra");
  const json& basis = field(a, "basis");
  if (!basis.is_array() || basis.empty()) throw ParseError("basis must be a non-empty array");
  for (const auto& e : basis) {
    d.names.push_back(field(e, "name").get<std::string>());
    const json& deg = field(e, "degree");
    if (!deg.is_number_integer()) throw ParseError("degree must be an integer");
    d.degrees.push_back(deg.get<int>());
  }
  d.unit = vector_from_json(field(a, "unit"), d.base);
  for (const auto& p : field(a, "products")) {
    if (!p.is_array() || p.size() != 4) throw ParseError("product entries are [i, j, k, value]");
    d.products.push_back({index_from_json(p[0]), index_from_json(p[1]), index_from_json(p[2]),
                          d.base.reduce(scalar_from_json(p[3]))});
  }
  d.commutative = field(a, "commutative").get<bool>();
  if (j.contains("group")) doc.group_table = group_from_json(j.at("group"));
  if (j.contains("action")) {
    if (!doc.group_table) throw ParseError("action given without a group");
    for (const auto& m : j.at("action")) doc.action.push_back(matrix_from_json(m, d.base));
  }
  if (j.contains("require_faithful")) doc.require_faithful = j.at("require_faithful").get<bool>();
  return doc;
}

json instance_to_json(const InstanceDocument& doc) {
  const AlgebraDescription& d = doc.algebra;
  json basis = json::array();
  for (std::size_t i = 0; i < d.names.size(); ++i) basis.push_back(json{{"name", d.names[i]}, {"degree", d.degrees[i]}});
  std::vector<StructureConstant> prods = d.products;
  std::sort(prods.begin(), prods.end(), [](const StructureConstant& x, const StructureConstant& y) {
    return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
  });
  json products = json::array();
  for (const auto& p : prods) products.push_back(json::array({p.i, p.j, p.k, scalar_to_json(p.value)}));
  json out{{"format", "gext-instance"},
           {"version", kInstanceVersion},
           {"base", base_to_json(d.base)},
           {"algebra",
            {{"basis", basis}, {"unit", vector_to_json(d.unit)}, {"products", products}, {"commutative", d.commutative}}}};
  if (doc.group_table) {
    out["group"] = group_to_json(*doc.group_table);
    json act = json::array();
    for (const auto& m : doc.action) act.push_back(matrix_to_json(m));
    out["action"] = act;
    if (!doc.require_faithful) out["require_faithful"] = false;
  }
  return out;
}

InstanceDocument parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_instance(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad instance document: ") + e.what());
  }
}

std::string serialize_instance(const InstanceDocument& doc) { return instance_to_json(doc).dump(2) + "\n"; }

InstanceDocument document_from(const GradedAlgebra& b, const std::optional<GroupAction>& action) {
  InstanceDocument doc;
  doc.algebra = b.description();
  if (action) {
    doc.group_table = action->group().table();
    doc.action = action->matrices();
    doc.require_faithful = action->faithful_required();
  }
  return doc;
}

LoadedInstance load_instance(const InstanceDocument& doc) {
  GradedAlgebra b = GradedAlgebra::validate(doc.algebra);
  std::optional<GroupAction> act;
  if (doc.group_table) {
    FiniteGroup g = FiniteGroup::validate(*doc.group_table);
    act = GroupAction::validate(g, b, doc.action, ActionOptions{doc.require_faithful});
  }
  return {b, act};
}

PresentedModule parse_module(const json& j) {
  check_format(j, "gext-module");
  const BaseRing base = base_from_json(field(j, "base"));
  std::vector<int> degrees;
  for (const auto& d : field(j, "degrees")) degrees.push_back(d.get<int>());
  const json& rel = field(j, "relations");
  ExactMatrix r = matrix_from_json(rel, base, 0);
  if (rel.empty()) r = ExactMatrix(base, degrees.size(), 0);
  try {
    return PresentedModule(base, degrees, r);
  } catch (const Error& e) {
    throw ParseError(std::string("bad module: ") + e.what());
  }
}

json module_to_json(const PresentedModule& m) {
  json rel = matrix_to_json(m.relations());
  if (m.relations().cols() == 0) rel = json::array();
  return json{{"format", "gext-module"},
              {"version", kInstanceVersion},
              {"base", base_to_json(m.base())},
              {"degrees", m.generator_degrees()},
              {"relations", rel}};
}

GModule parse_gmodule(const json& j) {
  check_format(j, "gext-gmodule");
  const BaseRing base = base_from_json(field(j, "base"));
  FiniteGroup g = FiniteGroup::validate(group_from_json(field(j, "group")));
  std::vector<ExactMatrix> mats;
  for (const auto& m : field(j, "matrices")) mats.push_back(matrix_from_json(m, base));
  return GModule::validate(g, base, mats);
}

json gmodule_to_json(const GModule& m) {
  json mats = json::array();
  for (const auto& x : m.matrices()) mats.push_back(matrix_to_json(x));
  return json{{"format", "gext-gmodule"},
              {"version", kInstanceVersion},
              {"base", base_to_json(m.base())},
              {"group", group_to_json(m.group().table())},
              {"matrices", mats}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace gext
