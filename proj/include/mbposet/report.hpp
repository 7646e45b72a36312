#pragma once

#include "mbposet/cellular.hpp"
#include "mbposet/inequalities.hpp"
#include "mbposet/ls_category.hpp"
#include "mbposet/matching.hpp"
#include "mbposet/morse_bott.hpp"

#include <json.hpp>

namespace mbposet {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// {"schema_version": 1, "command": command}
Json report_document(const std::string& command);

Json to_json(const Integer& value);
Json to_json(const HomologySummary& h);
Json to_json(const Poset& poset, const CellularityReport& report);
/// Incidence table as [[x, w, eps], ...] plus boundary matrices per degree.
Json to_json(const CellularComplex& complex);
Json to_json(const Poset& poset, const BasicSetDecomposition& decomposition);
Json to_json(const Poset& poset, const ClosedOrbit& orbit);
Json to_json(const InequalityReport& report);
Json to_json(const Poset& poset, const IntervalCheck& check);
Json to_json(const PitcherSubcomplex& pitcher);
Json to_json(const FlowData& flow);
Json to_json(const LsReport& report);

/// Indented key/value rendering of a report document.
std::string render_table(const Json& doc);

}  // namespace mbposet
