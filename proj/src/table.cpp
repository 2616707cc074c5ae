// Copyright 2026 The Chronocycle Authors.
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

#include "chronocycle/table.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chronocycle/errors.hpp"

namespace chronocycle {

void ResultTable::check_rectangular() const {
    for (const auto& r : rows)
        if (r.size() != columns.size())
            throw SimError(ErrorCode::InvalidArgument, "table rows must match the column count");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fnv1a_hex(const std::string& payload) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void emit_table(const ResultTable& t, TableFormat format, const std::string& path) {
    t.check_rectangular();
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
    if (!out) throw SimError(ErrorCode::IoError, "cannot open for writing: " + path);

    if (format == TableFormat::csv) {
        out << "# chronocycle " << t.artifact_version << " config=" << t.config_hash << "\n";
        for (size_t c = 0; c < t.columns.size(); ++c)
            out << t.columns[c] << (c + 1 < t.columns.size() ? "," : "");
        out << "\n";
        for (const auto& row : t.rows) {
            for (size_t c = 0; c < row.size(); ++c)
                out << format_double(row[c]) << (c + 1 < row.size() ? "," : "");
            out << "\n";
        }
    } else {
        nlohmann::json j;
        j["provenance"] = {{"tool", "chronocycle"},
                           {"version", t.artifact_version},
                           {"config", t.config_hash}};
        nlohmann::json cols = nlohmann::json::object();
        for (size_t c = 0; c < t.columns.size(); ++c) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& row : t.rows) arr.push_back(row[c]);
            cols[t.columns[c]] = std::move(arr);
        }
        j["columns"] = t.columns;
        j["data"] = std::move(cols);
        out << j.dump(2) << "\n";
    }
    if (!out) throw SimError(ErrorCode::IoError, "write failed: " + path);
}

ResultTable read_csv_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SimError(ErrorCode::IoError, "cannot open for reading: " + path);
    ResultTable t;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            // provenance: "# chronocycle <version> config=<hash>"
            const auto pos = line.find("config=");
            if (pos != std::string::npos) t.config_hash = line.substr(pos + 7);
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        if (!have_header) {
            while (std::getline(ss, cell, ',')) t.columns.push_back(cell);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        t.rows.push_back(std::move(row));
    }
    if (!have_header) throw SimError(ErrorCode::IoError, "missing CSV header: " + path);
    t.check_rectangular();
    return t;
}

}  // namespace chronocycle
