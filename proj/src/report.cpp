#include "boolsemi/report.hpp"

namespace boolsemi {

Json to_json(const PropertyReport& report) {
  Json j;
  j["property"] = report.property;
  j["verdict"] = report.holds() ? "holds" : "fails";
  if (report.witness_names.empty() && report.holds()) {
    j["witness"] = nullptr;
  } else {
    j["witness"] = report.witness_names;
  }
  j["checked"] = report.checked;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Json to_json(const std::vector<PropertyReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::vector<std::string> element_names(const Algebra& algebra, const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(algebra.element_name(id));
  return out;
}

}  // namespace boolsemi
