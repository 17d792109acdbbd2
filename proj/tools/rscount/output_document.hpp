/*
   Copyright 2026 The rscount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RSCOUNT_TOOLS_OUTPUT_DOCUMENT_HPP
#define RSCOUNT_TOOLS_OUTPUT_DOCUMENT_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rscount::cli {

inline constexpr std::string_view kSchema = "rscount/1";

enum class Format { json, csv, markdown };

/// A command result: the JSON payload plus a flat table view of the same
/// data for csv/markdown. Integers that can outgrow 64 bits are decimal
/// strings in both views.
struct OutputDocument {
    std::string command;
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

inline void write_csv_row(std::ostringstream& os, const std::vector<std::string>& row)
{
    for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << csv_field(row[i]);
    }
    os << '\n';
}

inline void write_md_row(std::ostringstream& os, const std::vector<std::string>& row)
{
    os << '|';
    for (const auto& cell : row) {
        os << ' ' << cell << " |";
    }
    os << '\n';
}

}  // namespace detail

inline std::string render(const OutputDocument& doc, Format format, const nlohmann::ordered_json* meta = nullptr)
{
    std::ostringstream os;
    switch (format) {
        case Format::json: {
            nlohmann::ordered_json top;
            top["schema"] = kSchema;
            top["command"] = doc.command;
            top["result"] = doc.result;
            if (meta != nullptr) {
                top["meta"] = *meta;
            }
            os << top.dump(2) << '\n';
            break;
        }
        case Format::csv:
            detail::write_csv_row(os, doc.columns);
            for (const auto& row : doc.rows) {
                detail::write_csv_row(os, row);
            }
            break;
        case Format::markdown:
            detail::write_md_row(os, doc.columns);
            os << '|';
            for (std::size_t i = 0; i < doc.columns.size(); ++i) {
                os << " --- |";
            }
            os << '\n';
            for (const auto& row : doc.rows) {
                detail::write_md_row(os, row);
            }
            break;
    }
    return os.str();
}

}  // namespace rscount::cli

#endif  // RSCOUNT_TOOLS_OUTPUT_DOCUMENT_HPP
