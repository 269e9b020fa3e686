#pragma once
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rmlab/config.hpp"

namespace rmlab::cli {

// Tabular output with a trailing summary block. All floats are rendered
// with a fixed %.12e so identical runs produce byte-identical files.
struct Table {
    std::vector<std::string> columns;
    using Cell = std::variant<double, long, std::string>;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> summary;

    void add_summary(const std::string& key, const std::string& value) {
        summary.emplace_back(key, value);
    }
    void add_summary(const std::string& key, double value);
    void add_summary(const std::string& key, long value) {
        summary.emplace_back(key, std::to_string(value));
    }
};

std::string format_double(double v);

// CSV: header row, %.12e floats, '#'-prefixed summary lines at the end.
// JSON: one top-level object {"rows": [{column: value, ...}], "summary": {..}}.
std::string render_table(const Table& table, OutputFormat format);

// Renders to output_path, or stdout when the path is empty.
void write_table(const Table& table, const RunConfig& cfg);

} // namespace rmlab::cli
