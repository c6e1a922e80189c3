#pragma once

#include <string>

#include <json.hpp>

#include "greendt/central_charge.hpp"
#include "greendt/dt.hpp"
#include "greendt/green.hpp"
#include "greendt/qseries.hpp"
#include "greendt/quiver.hpp"

namespace greendt {

// Quiver file: {"vertices": n, "arrows": [[i, j, m], ...]} with 1-based
// vertices; m >= 1 may be omitted (default 1). Serialization is canonical:
// arrows sorted by (source, target), multiplicity always explicit.
Quiver quiver_from_json(const nlohmann::json& j);
nlohmann::json quiver_to_json(const Quiver& q);

// Charge file: {"z": [[re, im], ...]}, each component an integer or a
// string "p/q".
CentralCharge charge_from_json(const nlohmann::json& j);
nlohmann::json charge_to_json(const CentralCharge& z);

nlohmann::json run_to_json(const GreenRun& run);
nlohmann::json series_to_json(const QSeries& s);
nlohmann::json report_to_json(const IndependenceReport& report);
nlohmann::json mgs_to_json(const MgsEnumeration& e);

// Stable bytes: compact dump with object keys in sorted order.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path); // ParseError on failure

} // namespace greendt
