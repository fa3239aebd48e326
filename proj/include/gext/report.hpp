#pragma once

#include <string>

#include <json.hpp>

#include "gext/differentials.hpp"
#include "gext/galois.hpp"
#include "gext/homology.hpp"
#include "gext/separable.hpp"

namespace gext {

inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json structure_to_json(const ModuleStructure& s, const BaseRing& base);
/// Presentation plus its invariant factors.
nlohmann::json presented_to_json(const PresentedModule& m);

nlohmann::json to_json(const GaloisCertificate& c);
nlohmann::json to_json(const DualBasisCertificate& c);
nlohmann::json to_json(const SeparabilityCertificate& c);
nlohmann::json to_json(const ZeroDivisorWitness& w);
nlohmann::json to_json(const RegularityReport& r);
nlohmann::json to_json(const ConcentrationResult& r);
nlohmann::json to_json(const KaehlerModule& k);
nlohmann::json to_json(const NontrivialityWitness& w);
nlohmann::json to_json(const Resolution& r);
nlohmann::json to_json(const GradedTor& t);
nlohmann::json to_json(const TensorSelfResult& r);

/// {"tool", "version", "command", ...body}.
nlohmann::json make_report(const std::string& command, nlohmann::json body);

/// Indented "key: value" rendering of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace gext
