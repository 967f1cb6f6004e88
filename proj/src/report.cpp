#include "reflift/report.hpp"

#include <iomanip>
#include <sstream>

#include "reflift/classify.hpp"

namespace reflift {

nlohmann::json to_json(const LiftReport& report) {
  nlohmann::json j;
  j["element"] = report.subject;
  j["lifts"] = report.lifts;
  if (report.witness) {
    nlohmann::json w;
    w["hyperplane"] = to_string(report.witness->hyperplane);
    w["power"] = report.witness->power;
    if (report.witness->element) w["element"] = to_string(*report.witness->element);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["method"] = std::string(to_string(report.method));
  return j;
}

LiftReport lift_report_from_json(const nlohmann::json& j, const GroupDescriptor& desc) {
  LiftReport r;
  r.subject = j.at("element").get<std::string>();
  r.lifts = j.at("lifts").get<bool>();
  const auto method = j.at("method").get<std::string>();
  if (method == "oracle") {
    r.method = LiftMethod::Oracle;
  } else if (method == "fast") {
    r.method = LiftMethod::Fast;
  } else {
    throw ParseError("unknown lift method '" + method + "'");
  }
  const auto& w = j.at("witness");
  if (!w.is_null()) {
    Witness wit{parse_hyperplane(w.at("hyperplane").get<std::string>()), w.at("power").get<std::uint64_t>(),
                std::nullopt};
    if (w.contains("element")) wit.element = parse_element(desc, w.at("element").get<std::string>());
    r.witness = wit;
  }
  return r;
}

nlohmann::json to_json(const LatticeVector& v) { return nlohmann::json(v); }

ClassificationRow classify_descriptor(const GroupDescriptor& desc, std::size_t guard) {
  ClassificationRow row;
  row.desc = desc;
  row.bieberbach_formula = is_bieberbach_series(desc);
  row.odd_lift_property = has_odd_lift_property(desc);
  row.arrangement_size = hyperplanes(desc).size();
  if (desc.order() <= guard) {
    row.bieberbach_bruteforce = bieberbach_bruteforce(desc, guard);
    row.odd_lift_bruteforce = has_odd_lift_property_bruteforce(desc, guard);
    row.center_size = center(desc, guard).size();
  }
  return row;
}

nlohmann::json to_json(const ClassificationRow& row) {
  auto opt = [](const auto& o) -> nlohmann::json {
    if (o) return nlohmann::json(*o);
    return nullptr;
  };
  return {{"descriptor", to_string(row.desc)},
          {"bieberbach_formula", row.bieberbach_formula},
          {"bieberbach_bruteforce", opt(row.bieberbach_bruteforce)},
          {"odd_lift_property", row.odd_lift_property},
          {"odd_lift_bruteforce", opt(row.odd_lift_bruteforce)},
          {"arrangement_size", row.arrangement_size},
          {"center_size", opt(row.center_size)}};
}

std::string format_table(const std::vector<ClassificationRow>& rows) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  auto oyn = [&](const std::optional<bool>& b) -> std::string { return b ? yn(*b) : "-"; };
  std::ostringstream out;
  out << std::left << std::setw(14) << "descriptor" << std::setw(12) << "bieb(form)" << std::setw(12) << "bieb(brute)"
      << std::setw(12) << "odd-lift" << std::setw(8) << "|A|" << "|Z(W)|\n";
  for (const auto& r : rows) {
    std::string odd = yn(r.odd_lift_property);
    if (r.odd_lift_bruteforce && *r.odd_lift_bruteforce != r.odd_lift_property) odd += "!";
    out << std::left << std::setw(14) << to_string(r.desc) << std::setw(12) << yn(r.bieberbach_formula)
        << std::setw(12) << oyn(r.bieberbach_bruteforce) << std::setw(12) << odd << std::setw(8)
        << r.arrangement_size << (r.center_size ? std::to_string(*r.center_size) : "-") << "\n";
  }
  return out.str();
}

}  // namespace reflift
