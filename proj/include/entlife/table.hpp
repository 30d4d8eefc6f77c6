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

#ifndef ENTLIFE_TABLE_HPP
#define ENTLIFE_TABLE_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace entlife::cli {

using Cell = std::variant<std::string, double, long>;

// Rectangular result table. The timestamp is bookkeeping only and is never
// emitted, so identical invocations stay byte-identical.
struct ResultTable {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::string timestamp;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells);
};

enum class Format { plain, csv, json };

Format format_from_name(const std::string& name);

// 12 significant digits, trailing zeros kept, '.' decimal separator.
std::string format_number(double x);

// csv: header row then rows; json: {"command","params","columns","rows"}
// with full-precision numbers; plain: aligned columns for the terminal.
std::string emit_table(const ResultTable& t, Format format);

}  // namespace entlife::cli

#endif
