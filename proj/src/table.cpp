#include "conekit/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "conekit/errors.hpp"

namespace conekit {

TableFormat parse_format(const std::string& s) {
    if (s == "csv") return TableFormat::csv;
    if (s == "json") return TableFormat::json;
    throw ValidationError("format must be csv or json");
}

void Table::add_column(std::string name, ColumnType t) {
    if (!rows.empty()) throw ValidationError("columns must be declared before rows");
    columns.push_back(std::move(name));
    types.push_back(t);
}

namespace {

bool matches(const Cell& c, ColumnType t) {
    switch (t) {
    case ColumnType::real: return std::holds_alternative<double>(c);
    case ColumnType::integer: return std::holds_alternative<long long>(c);
    case ColumnType::rational: return std::holds_alternative<Rational>(c);
    case ColumnType::text: return std::holds_alternative<std::string>(c);
    }
    return false;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string cell_text(const Cell& c) {
    if (auto d = std::get_if<double>(&c)) return format_real(*d);
    if (auto i = std::get_if<long long>(&c)) return std::to_string(*i);
    if (auto q = std::get_if<Rational>(&c)) return to_string(*q);
    return std::get<std::string>(c);
}

} // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw ValidationError("row width does not match the header");
    for (std::size_t i = 0; i < row.size(); ++i)
        if (!matches(row[i], types[i])) throw ValidationError("cell type does not match column " + columns[i]);
    rows.push_back(std::move(row));
}

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string render_table(const Table& t, TableFormat f) {
    std::ostringstream os;
    if (f == TableFormat::csv) {
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
        os << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
            os << "\n";
        }
        return os.str();
    }
    // JSON: floats are written as numbers with the same 17 digits; rationals as "n/d" strings
    nlohmann::ordered_json doc;
    doc["columns"] = t.columns;
    auto& types = doc["types"] = nlohmann::ordered_json::array();
    for (auto ty : t.types)
        types.push_back(ty == ColumnType::real ? "real" : ty == ColumnType::integer ? "integer"
                                                       : ty == ColumnType::rational ? "rational"
                                                                                    : "text");
    std::string body = "{\"columns\":" + doc["columns"].dump() + ",\"types\":" + doc["types"].dump() + ",\"rows\":[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        body += r ? ",{" : "{";
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            body += (i ? "," : "") + nlohmann::json(t.columns[i]).dump() + ":";
            const auto& c = t.rows[r][i];
            if (auto d = std::get_if<double>(&c))
                body += std::isfinite(*d) ? format_real(*d) : nlohmann::json(format_real(*d)).dump();
            else if (std::holds_alternative<long long>(c))
                body += cell_text(c);
            else
                body += nlohmann::json(cell_text(c)).dump();
        }
        body += "}";
    }
    body += "]}\n";
    return body;
}

void emit_table(const Table& t, TableFormat f, const std::string& path) {
    const std::string text = render_table(t, f);
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw Error("failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file " + path);
    out << text;
    if (!out) throw Error("failed writing " + path);
}

} // namespace conekit
