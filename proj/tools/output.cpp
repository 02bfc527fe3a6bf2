// Copyright 2026 The qtcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "output.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace qtcert_cli {
namespace {

std::string cell_text(const Cell &c, int digits) {
    if (const auto *s = std::get_if<std::string>(&c)) {
        return *s;
    }
    if (const auto *d = std::get_if<double>(&c)) {
        return format_number(*d, digits);
    }
    if (const auto *i = std::get_if<long long>(&c)) {
        return std::to_string(*i);
    }
    return std::get<bool>(c) ? "true" : "false";
}

nlohmann::ordered_json cell_json(const Cell &c) {
    if (const auto *s = std::get_if<std::string>(&c)) {
        return *s;
    }
    if (const auto *d = std::get_if<double>(&c)) {
        // Round through the 12-digit text so JSON and CSV carry the same value.
        return std::stod(format_number(*d, 12));
    }
    if (const auto *i = std::get_if<long long>(&c)) {
        return *i;
    }
    return std::get<bool>(c);
}

}  // namespace

std::string format_number(double v, int digits) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of negative zero
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

void Table::render(std::ostream &out, Format format) const {
    switch (format) {
        case Format::csv: {
            for (std::size_t c = 0; c < columns_.size(); ++c) {
                out << (c ? "," : "") << columns_[c];
            }
            out << '\n';
            for (const auto &row : rows_) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    out << (c ? "," : "") << cell_text(row[c], 12);
                }
                out << '\n';
            }
            break;
        }
        case Format::json: {
            nlohmann::ordered_json doc;
            doc["rows"] = nlohmann::ordered_json::array();
            for (const auto &row : rows_) {
                nlohmann::ordered_json rec;
                for (std::size_t c = 0; c < row.size(); ++c) {
                    rec[columns_[c]] = cell_json(row[c]);
                }
                doc["rows"].push_back(std::move(rec));
            }
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::table: {
            std::vector<std::size_t> width(columns_.size());
            std::vector<std::vector<std::string>> text;
            for (std::size_t c = 0; c < columns_.size(); ++c) {
                width[c] = columns_[c].size();
            }
            for (const auto &row : rows_) {
                auto &t = text.emplace_back();
                for (std::size_t c = 0; c < row.size(); ++c) {
                    t.push_back(cell_text(row[c], 6));
                    width[c] = std::max(width[c], t.back().size());
                }
            }
            auto line = [&](const std::vector<std::string> &cells) {
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    out << (c ? "  " : "") << cells[c];
                    if (c + 1 < cells.size()) {
                        out << std::string(width[c] - cells[c].size(), ' ');
                    }
                }
                out << '\n';
            };
            line(columns_);
            for (const auto &t : text) {
                line(t);
            }
            break;
        }
    }
}

}  // namespace qtcert_cli
