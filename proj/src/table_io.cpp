#include "boolsemi/table_io.hpp"

#include <fstream>

namespace boolsemi {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw LoadError(std::string("table is missing \"") + key + "\"");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw LoadError(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw LoadError(where + " must be an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<std::string>> string_grid(const Json& j, const std::string& where) {
  if (!j.is_array()) throw LoadError(where + " must be an array of rows");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(string_list(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

TableSpec table_spec_from_json(const Json& j) {
  if (!j.is_object()) throw LoadError("table must be a JSON object");
  TableSpec s;
  s.name = j.contains("name") ? as_string(j["name"], "name") : "table";
  s.elements = string_list(field(j, "elements"), "elements");
  s.add = string_grid(field(j, "add"), "add");
  s.mul = string_grid(field(j, "mul"), "mul");
  s.zero = as_string(field(j, "zero"), "zero");
  s.one = as_string(field(j, "one"), "one");
  if (j.contains("complement") && !j["complement"].is_null()) {
    s.complement = string_list(j["complement"], "complement");
  }
  if (j.contains("order") && !j["order"].is_null()) {
    const auto& o = j["order"];
    if (!o.is_array()) throw LoadError("order must be an array of rows");
    std::vector<std::vector<int>> m;
    for (std::size_t r = 0; r < o.size(); ++r) {
      if (!o[r].is_array()) throw LoadError("order[" + std::to_string(r) + "] must be an array");
      std::vector<int> row;
      for (std::size_t c = 0; c < o[r].size(); ++c) {
        const auto& v = o[r][c];
        if (!v.is_number_integer() && !v.is_boolean()) {
          throw LoadError("order[" + std::to_string(r) + "][" + std::to_string(c) +
                          "] must be 0 or 1");
        }
        row.push_back(v.is_boolean() ? static_cast<int>(v.get<bool>()) : v.get<int>());
      }
      m.push_back(std::move(row));
    }
    s.order = std::move(m);
  }
  return s;
}

Json to_json(const TableSpec& s) {
  Json j;
  j["name"] = s.name;
  j["elements"] = s.elements;
  j["add"] = s.add;
  j["mul"] = s.mul;
  j["zero"] = s.zero;
  j["one"] = s.one;
  if (s.complement) j["complement"] = *s.complement;
  if (s.order) j["order"] = *s.order;
  return j;
}

Algebra load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open table file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError("'" + path + "' is not valid JSON: " + e.what());
  }
  return table_semiring(table_spec_from_json(j));
}

}  // namespace boolsemi
