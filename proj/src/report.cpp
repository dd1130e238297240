#include "ribbonmod/report.hpp"

#include <algorithm>
#include <sstream>

namespace ribbonmod {

namespace {

std::string cell_text(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(Int v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

Json cell_json(const Cell& c) {
    struct Visitor {
        Json operator()(std::monostate) const { return nullptr; }
        Json operator()(Int v) const { return v; }
        Json operator()(bool v) const { return v; }
        Json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << r.command << " [" << to_string(r.status) << "]\n";
    for (const auto& [key, value] : r.query.items()) os << "  " << key << " = " << value.dump() << "\n";
    if (!r.anchor.empty()) os << "  (" << r.anchor << ")\n";
    os << "\n";

    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : r.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(row[i].index() == 0 ? "-" : cell_text(row[i]));
            width[i] = std::max(width[i], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& line) {
        std::string out;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out += "  ";
            out += line[i];
            if (i + 1 < line.size()) out.append(width[i] - line[i].size(), ' ');
        }
        os << out << "\n";
    };
    emit(r.columns);
    if (r.rows.empty()) os << "(none)\n";
    for (const auto& line : cells) emit(line);
    for (const auto& n : r.notes) os << n << "\n";
    return os.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << csv_field(r.columns[i]);
    os << "\n";
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
        os << "\n";
    }
    return os.str();
}

} // namespace

std::string_view to_string(ReportStatus s) { return s == ReportStatus::Proved ? "proved" : "conjectural"; }

std::vector<Cell> component_row(const ComponentDescriptor& c) {
    Cell index = c.index ? Cell{*c.index} : Cell{};
    return {std::string(short_name(c.kind)), c.type.r0, c.type.r1, c.type.d0, c.type.d1, index, c.dimension};
}

Report components_report(Json query, const std::vector<ComponentDescriptor>& components) {
    Report r;
    r.command = "components";
    r.query = std::move(query);
    r.status = ReportStatus::Conjectural;
    r.anchor = "conjectural list of irreducible components of the moduli space of stable sheaves";
    r.rows_key = "components";
    r.columns = kComponentColumns;
    for (const auto& c : components) r.rows.push_back(component_row(c));
    return r;
}

Json to_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["query"] = r.query;
    j["status"] = to_string(r.status);
    j["anchor"] = r.anchor;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < r.columns.size(); ++i) obj[r.columns[i]] = cell_json(row.at(i));
        rows.push_back(std::move(obj));
    }
    j[r.rows_key] = std::move(rows);
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

std::string format_report(const Report& r, ReportFormat format) {
    switch (format) {
    case ReportFormat::Json: return to_json(r).dump(2) + "\n";
    case ReportFormat::Csv: return render_csv(r);
    case ReportFormat::Text: return render_text(r);
    }
    return {};
}

} // namespace ribbonmod
