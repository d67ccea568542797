#pragma once

#include <string>
#include <variant>
#include <vector>

#include "conekit/toric_futaki.hpp"

namespace conekit {

enum class TableFormat { csv, json };
TableFormat parse_format(const std::string& s);

enum class ColumnType { real, integer, rational, text };

using Cell = std::variant<double, long long, Rational, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<ColumnType> types;
    std::vector<std::vector<Cell>> rows;

    void add_column(std::string name, ColumnType t);
    void add_row(std::vector<Cell> row);
};

// Floats with 17 significant digits, locale independent.
std::string format_real(double v);

std::string render_table(const Table& t, TableFormat f);
// Writes to path, or to stdout when path is empty or "-".
void emit_table(const Table& t, TableFormat f, const std::string& path);

} // namespace conekit
