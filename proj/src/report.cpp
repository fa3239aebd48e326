#include "gext/report.hpp"

#include <sstream>

#include "gext/io.hpp"

namespace gext {

using nlohmann::json;

namespace {

json vectors(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

json optional_witness(const std::optional<ZeroDivisorWitness>& w) { return w ? to_json(*w) : json(nullptr); }

}  // namespace

json structure_to_json(const ModuleStructure& s, const BaseRing& base) {
  json t = json::array();
  for (const auto& x : s.torsion) t.push_back(scalar_to_json(x));
  return json{{"torsion", t}, {"free_rank", s.free_rank}, {"zero", s.is_zero()}, {"summary", s.to_string(base)}};
}

json presented_to_json(const PresentedModule& m) {
  json j = module_to_json(m);
  j["structure"] = structure_to_json(module_structure(m), m.base());
  return j;
}

json to_json(const GaloisCertificate& c) {
  json inv = c.h_inverse ? matrix_to_json(*c.h_inverse) : json(nullptr);
  return json{{"verdict", c.verdict},
              {"fixed_ring_ok", c.fixed_ring_ok},
              {"fixed_generators", matrix_to_json(c.fixed_generators)},
              {"h_iso_ok", c.h_iso_ok},
              {"h", matrix_to_json(c.h)},
              {"h_invariants", vector_to_json(c.h_invariants)},
              {"h_inverse", inv},
              {"action_valid", c.action_valid},
              {"faithful_required", c.faithful_required}};
}

json to_json(const DualBasisCertificate& c) {
  return json{{"x", vectors(c.x)},
              {"y", vectors(c.y)},
              {"preimage", vector_to_json(c.preimage)},
              {"phi", vectors(c.phi)},
              {"residuals", vectors(c.residuals)},
              {"residuals_zero", c.residuals_zero}};
}

json to_json(const SeparabilityCertificate& c) {
  return json{{"idempotent", vector_to_json(c.idempotent)},
              {"mu_check", c.mu_check},
              {"centrality_check", c.centrality_check}};
}

json to_json(const ZeroDivisorWitness& w) {
  return json{{"left", vector_to_json(w.left)}, {"right", vector_to_json(w.right)}, {"left_in_degree_zero", w.left_in_degree_zero}};
}

json to_json(const RegularityReport& r) {
  return json{{"regular_in_b", r.regular_in_b},
              {"b0_domain", r.b0_domain},
              {"exhaustive", r.exhaustive},
              {"checked", r.checked},
              {"witness", optional_witness(r.witness)}};
}

json to_json(const ConcentrationResult& r) {
  return json{{"outcome", outcome_name(r.outcome)},
              {"idempotent", vector_to_json(r.idempotent)},
              {"steps", r.steps},
              {"witness", optional_witness(r.witness)}};
}

json to_json(const KaehlerModule& k) {
  json pieces = json::array();
  for (std::size_t i = 0; i < k.degrees.size(); ++i)
    pieces.push_back(json{{"degree", k.degrees[i]},
                          {"ideal", matrix_to_json(k.ideal[i])},
                          {"ideal_squared", matrix_to_json(k.ideal_squared[i])}});
  return json{{"omega", presented_to_json(k.omega)}, {"pieces", pieces}};
}

json to_json(const NontrivialityWitness& w) {
  json d = w.differential_of ? json(*w.differential_of) : json(nullptr);
  return json{{"degree", w.degree},
              {"class", vector_to_json(w.element)},
              {"tensor", vector_to_json(w.tensor)},
              {"differential_of", d}};
}

json to_json(const Resolution& r) {
  json ds = json::array();
  for (const auto& d : r.differentials) ds.push_back(matrix_to_json(d));
  return json{{"ranks", r.ranks},
              {"degrees", r.degrees},
              {"differentials", ds},
              {"augmentation", matrix_to_json(r.augmentation)},
              {"truncated", r.truncated}};
}

json to_json(const GradedTor& t) {
  json pieces = json::array();
  for (const auto& p : t.pieces) pieces.push_back(json{{"i", p.i}, {"j", p.j}, {"tor", presented_to_json(p.module)}});
  return json{{"total", presented_to_json(t.total)}, {"pieces", pieces}};
}

json to_json(const TensorSelfResult& r) {
  json w = r.witness ? json(*r.witness) : json(nullptr);
  return json{{"nonzero", r.nonzero}, {"tensor", presented_to_json(r.tensor)}, {"witness_generator", w}};
}

json make_report(const std::string& command, json body) {
  json out{{"tool", "gext"}, {"version", kToolVersion}, {"command", command}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

namespace {

bool is_scalar_row(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    out << pad << it.key() << ":";
    if (v.is_object()) {
      out << "\n";
      render(out, v, indent + 1);
    } else if (is_scalar_row(v)) {
      out << " [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
      out << "]\n";
    } else if (v.is_array()) {
      out << "\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << pad << "  -\n";
          render(out, e, indent + 2);
        } else {
          out << pad << "  - " << e.dump() << "\n";
        }
      }
    } else {
      out << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace gext
