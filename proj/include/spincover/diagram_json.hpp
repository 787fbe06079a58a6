#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "spincover/cartan.hpp"
#include "spincover/colouring.hpp"

namespace spincover {

struct DiagramDocument {
  CartanMatrix cm;
  std::optional<Colouring> colouring;
};

// Parses {"cartan": [[int,...],...], "labels": [...], "colouring": [1|2,...]}.
// Only integers are accepted in "cartan"; rejections carry 1-based indices.
DiagramDocument parse_diagram_json(const nlohmann::json& j);
DiagramDocument load_diagram_file(const std::string& path);

nlohmann::json diagram_to_json(const CartanMatrix& cm,
                               const std::optional<Colouring>& colouring = std::nullopt);

}  // namespace spincover
