#include "rmlab/emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "rmlab/errors.hpp"

namespace rmlab::cli {
namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string cell_text(const Table::Cell& cell) {
    if (std::holds_alternative<double>(cell)) return format_double(std::get<double>(cell));
    if (std::holds_alternative<long>(cell)) return std::to_string(std::get<long>(cell));
    return std::get<std::string>(cell);
}

std::string cell_json(const Table::Cell& cell) {
    if (std::holds_alternative<std::string>(cell))
        return "\"" + json_escape(std::get<std::string>(cell)) + "\"";
    return cell_text(cell);
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

void Table::add_summary(const std::string& key, double value) {
    summary.emplace_back(key, format_double(value));
}

std::string render_table(const Table& table, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::Csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) out.push_back(',');
            out += table.columns[c];
        }
        out.push_back('\n');
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out.push_back(',');
                out += cell_text(row[c]);
            }
            out.push_back('\n');
        }
        for (const auto& [key, value] : table.summary)
            out += "# " + key + " = " + value + "\n";
        return out;
    }

    out += "{\n  \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out += (r ? ",\n    {" : "\n    {");
        for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
            if (c) out += ", ";
            out += "\"" + json_escape(table.columns[c]) + "\": " + cell_json(table.rows[r][c]);
        }
        out += "}";
    }
    out += "\n  ],\n  \"summary\": {";
    for (std::size_t i = 0; i < table.summary.size(); ++i) {
        if (i) out += ",";
        out += "\n    \"" + json_escape(table.summary[i].first) + "\": \"" +
               json_escape(table.summary[i].second) + "\"";
    }
    out += "\n  }\n}\n";
    return out;
}

void write_table(const Table& table, const RunConfig& cfg) {
    const std::string text = render_table(table, cfg.format);
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw ConfigError("output: cannot open '" + cfg.output_path + "'");
    out << text;
}

} // namespace rmlab::cli
