#pragma once
// Locale-independent CSV/JSON emission for tabular results, plus the
// `key = value` config-file reader. Numbers are written with shortest
// round-trip formatting, so CSV and JSON carry bit-identical values.

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace gravtime::io {

inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> r) { rows.push_back(std::move(r)); }
};

inline std::string cell_text(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    return std::get<std::string>(c);
}

inline void write_csv(std::ostream& out, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << cell_text(row[i]);
        out << "\n";
    }
}

inline void write_json(std::ostream& out, const Table& t, const nlohmann::json& meta) {
    nlohmann::json j;
    j["meta"] = meta;
    j["columns"] = t.columns;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& c : row) {
            if (std::holds_alternative<double>(c))
                jr.push_back(std::get<double>(c));
            else
                jr.push_back(std::get<std::string>(c));
        }
        rows.push_back(std::move(jr));
    }
    out << j.dump(2) << "\n";
}

// `key = value` lines, '#' comments, whitespace-insensitive.
inline std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    auto trim = [](std::string s) {
        const char* ws = " \t\r\n";
        const auto b = s.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

}  // namespace gravtime::io
