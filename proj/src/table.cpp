// Copyright 2026 The entlife Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entlife/table.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace entlife::cli {

void ResultTable::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns.size()) {
        throw std::invalid_argument("ResultTable: row width differs from column count");
    }
    rows.push_back(std::move(cells));
}

Format format_from_name(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format: " + name);
}

std::string format_number(double x) {
    char buf[40];
    // '#' keeps trailing zeros so every value carries 12 significant digits.
    std::snprintf(buf, sizeof(buf), "%#.12g", x);
    return buf;
}

namespace {

std::string cell_text(const Cell& c) {
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    return std::to_string(std::get<long>(c));
}

std::string emit_csv(const ResultTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_text(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string emit_json(const ResultTable& t) {
    nlohmann::ordered_json j;
    j["command"] = t.command;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : t.params) j["params"][key] = value;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            if (const auto* s = std::get_if<std::string>(&c)) {
                jrow.push_back(*s);
            } else if (const auto* d = std::get_if<double>(&c)) {
                jrow.push_back(*d);
            } else {
                jrow.push_back(std::get<long>(c));
            }
        }
        j["rows"].push_back(std::move(jrow));
    }
    return j.dump() + "\n";
}

std::string emit_plain(const ResultTable& t) {
    std::vector<std::size_t> widths(t.columns.size());
    std::vector<std::vector<std::string>> texts;
    for (std::size_t i = 0; i < t.columns.size(); ++i) widths[i] = t.columns[i].size();
    for (const auto& row : t.rows) {
        std::vector<std::string> rt;
        for (std::size_t i = 0; i < row.size(); ++i) {
            rt.push_back(cell_text(row[i]));
            widths[i] = std::max(widths[i], rt.back().size());
        }
        texts.push_back(std::move(rt));
    }
    std::string out;
    const auto pad = [&](const std::string& s, std::size_t w, bool last) {
        out += s;
        if (!last) out.append(w - s.size() + 2, ' ');
    };
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        pad(t.columns[i], widths[i], i + 1 == t.columns.size());
    }
    out += '\n';
    for (const auto& rt : texts) {
        for (std::size_t i = 0; i < rt.size(); ++i) pad(rt[i], widths[i], i + 1 == rt.size());
        out += '\n';
    }
    return out;
}

}  // namespace

std::string emit_table(const ResultTable& t, Format format) {
    switch (format) {
        case Format::csv: return emit_csv(t);
        case Format::json: return emit_json(t);
        case Format::plain: return emit_plain(t);
    }
    throw std::invalid_argument("emit_table: bad format");
}

}  // namespace entlife::cli
