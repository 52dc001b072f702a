#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "xspec/harness.hpp"

namespace xspec::harness {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_cell(const Cell& c) {
    struct {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(const std::string& s) const { return csv_field(s); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    } visit;
    return std::visit(visit, c);
}

nlohmann::ordered_json json_cell(const std::string& column, const Cell& c) {
    struct {
        const std::string& column;
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(const std::string& s) const {
            // Certificates are JSON already; embed them as objects.
            if (column.rfind("certificate", 0) == 0 && !s.empty() && s.front() == '{')
                return nlohmann::ordered_json::parse(s);
            return s;
        }
        nlohmann::ordered_json operator()(double d) const { return d; }
        nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
        nlohmann::ordered_json operator()(bool b) const { return b; }
    } visit{column};
    return std::visit(visit, c);
}

std::string render_csv(const Report& r) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
    out << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
    out << "# " << r.title << '\n';
    for (const auto& b : r.borderline) out << "# borderline " << b << '\n';
    for (const auto& note : r.notes) out << "# note " << note << '\n';
    out << "# summary";
    for (const auto& [key, value] : r.summary.fields()) out << ' ' << key << '=' << value;
    out << '\n';
    return out.str();
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["title"] = r.title;
    doc["columns"] = r.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < r.columns.size(); ++i)
            obj[r.columns[i]] = json_cell(r.columns[i], row[i]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["borderline"] = r.borderline;
    doc["notes"] = r.notes;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.summary.fields()) summary[key] = value;
    doc["summary"] = std::move(summary);
    doc["exit_code"] = r.exit_code;
    return doc.dump(2) + '\n';
}

}  // namespace

std::string render(const Report& r, Format f) { return f == Format::Csv ? render_csv(r) : render_json(r); }

}  // namespace xspec::harness
