#include "spincover/diagram_json.hpp"

#include <fstream>

namespace spincover {

using nlohmann::json;

DiagramDocument parse_diagram_json(const json& j) {
  if (!j.is_object() || !j.contains("cartan"))
    throw Error(ErrorCode::InputError, "expected an object with a \"cartan\" field");
  const json& c = j.at("cartan");
  if (!c.is_array() || c.empty())
    throw Error(ErrorCode::InputError, "\"cartan\" must be a non-empty array of rows");
  std::vector<std::vector<long>> m;
  for (size_t i = 0; i < c.size(); ++i) {
    const json& row = c[i];
    if (!row.is_array())
      throw Error(ErrorCode::InputError, "\"cartan\" row " + std::to_string(i + 1) +
                                             " is not an array");
    std::vector<long> r;
    for (size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number_integer())
        throw Error(ErrorCode::InputError, "non-integer entry at (" + std::to_string(i + 1) +
                                               "," + std::to_string(k + 1) + ")");
      r.push_back(row[k].get<long>());
    }
    m.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw Error(ErrorCode::InputError, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  DiagramDocument doc{CartanMatrix::validate(m, labels), std::nullopt};
  if (j.contains("colouring")) {
    const json& kj = j.at("colouring");
    if (!kj.is_array() || kj.size() != m.size())
      throw Error(ErrorCode::InputError, "\"colouring\" must list one value per vertex");
    Colouring k;
    for (size_t i = 0; i < kj.size(); ++i) {
      if (!kj[i].is_number_integer() || (kj[i] != 1 && kj[i] != 2))
        throw Error(ErrorCode::InputError,
                    "colouring entry " + std::to_string(i + 1) + " must be 1 or 2");
      k.values.push_back(kj[i].get<int>());
    }
    doc.colouring = k;
  }
  return doc;
}

DiagramDocument load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InputError, path + ": " + e.what());
  }
  try {
    return parse_diagram_json(j);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

json diagram_to_json(const CartanMatrix& cm, const std::optional<Colouring>& colouring) {
  json j;
  j["cartan"] = cm.rows();
  j["labels"] = cm.labels();
  if (colouring) j["colouring"] = colouring->values;
  return j;
}

}  // namespace spincover
