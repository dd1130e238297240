#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ribbonmod/moduli.hpp"

namespace ribbonmod {

using Json = nlohmann::ordered_json;

/// One table cell. monostate renders as JSON null and an empty CSV field.
using Cell = std::variant<std::monostate, Int, bool, std::string>;

enum class ReportStatus { Proved, Conjectural };
std::string_view to_string(ReportStatus s);

enum class ReportFormat { Text, Json, Csv };

struct Report {
    std::string command;
    Json query = Json::object();
    ReportStatus status = ReportStatus::Proved;
    std::string anchor;
    /// "components" for the component enumerator, "results" otherwise.
    std::string rows_key = "results";
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Free-form lines shown after the table in text output, and as
    /// "notes" in JSON. Not part of CSV.
    std::vector<std::string> notes;
};

inline const std::vector<std::string> kComponentColumns{"kind", "r0", "r1", "d0", "d1", "index", "dimension"};

std::vector<Cell> component_row(const ComponentDescriptor& c);

/// Report for a component list; always conjectural.
Report components_report(Json query, const std::vector<ComponentDescriptor>& components);

Json to_json(const Report& r);
/// Stable across runs: key order is insertion order, two-space indent,
/// trailing newline.
std::string format_report(const Report& r, ReportFormat format);

} // namespace ribbonmod
