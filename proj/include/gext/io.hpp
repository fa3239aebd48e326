#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gext/finite_group.hpp"
#include "gext/homology.hpp"
#include "gext/presented_module.hpp"

namespace gext {

class ParseError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kInstanceVersion = 1;

/// Algebra, optional group table and action, as stored on disk.
struct InstanceDocument {
  AlgebraDescription algebra;
  std::optional<std::vector<std::vector<std::size_t>>> group_table;
  std::vector<ExactMatrix> action;
  bool require_faithful = true;
};

struct LoadedInstance {
  GradedAlgebra algebra;
  std::optional<GroupAction> action;
};

nlohmann::json base_to_json(const BaseRing& base);
BaseRing base_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j, const BaseRing& base);
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j, const BaseRing& base, std::size_t cols_if_empty = 0);

InstanceDocument parse_instance(const nlohmann::json& j);
nlohmann::json instance_to_json(const InstanceDocument& doc);
InstanceDocument parse_instance_text(const std::string& text);
/// Two-space indented JSON plus trailing newline.
std::string serialize_instance(const InstanceDocument& doc);

InstanceDocument document_from(const GradedAlgebra& b, const std::optional<GroupAction>& action = std::nullopt);
/// Validates the algebra and action. Throws AxiomViolation, GroupAxiomViolation, ActionViolation.
LoadedInstance load_instance(const InstanceDocument& doc);

/// {"format":"gext-module", "base", "degrees", "relations"}; relations are rows.
PresentedModule parse_module(const nlohmann::json& j);
nlohmann::json module_to_json(const PresentedModule& m);

/// {"format":"gext-gmodule", "base", "group", "matrices"}.
GModule parse_gmodule(const nlohmann::json& j);
nlohmann::json gmodule_to_json(const GModule& m);

std::string read_text_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

}  // namespace gext
