#pragma once

// JSON and table rendering of reports.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "reflift/lattice.hpp"
#include "reflift/lifting.hpp"

namespace reflift {

/// {"element": ..., "lifts": bool, "witness": {"hyperplane": "H[i,j;t]", "power": l} | null, "method": ...}
/// Subgroup witnesses carry an extra "element" key naming the offending element.
nlohmann::json to_json(const LiftReport& report);

/// Inverse of to_json for the fields that are text-encoded; the subject string
/// is kept verbatim.
LiftReport lift_report_from_json(const nlohmann::json& j, const GroupDescriptor& desc);

nlohmann::json to_json(const LatticeVector& v);

struct ClassificationRow {
  GroupDescriptor desc;
  bool bieberbach_formula = false;
  std::optional<bool> bieberbach_bruteforce;  // empty when above the guard
  bool odd_lift_property = false;
  std::optional<bool> odd_lift_bruteforce;
  std::size_t arrangement_size = 0;
  std::optional<std::size_t> center_size;
};

ClassificationRow classify_descriptor(const GroupDescriptor& desc, std::size_t guard = kDefaultGuard);

nlohmann::json to_json(const ClassificationRow& row);

/// Fixed-width table with a header line.
std::string format_table(const std::vector<ClassificationRow>& rows);

}  // namespace reflift
