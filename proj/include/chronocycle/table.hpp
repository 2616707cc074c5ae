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

#ifndef CHRONOCYCLE_TABLE_HPP
#define CHRONOCYCLE_TABLE_HPP

#include <string>
#include <vector>

namespace chronocycle {

/// Rectangular numeric result table. Column names carry unit suffixes
/// (e.g. tau_s, fsr_hz); the provenance header embeds the config hash so any
/// output file can be reproduced exactly.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::string config_hash;
    std::string artifact_version;

    void check_rectangular() const;
};

enum class TableFormat { csv, json };

/// CSV: '#'-prefixed provenance line, header row, '.' decimals, comma
/// delimiter, LF endings, 17 significant digits (round-trip exact).
/// JSON: provenance object plus one array per column.
void emit_table(const ResultTable& t, TableFormat format, const std::string& path);

/// Re-ingests a CSV written by emit_table (comment lines skipped).
ResultTable read_csv_table(const std::string& path);

/// 17-significant-digit formatting used for all file output.
std::string format_double(double v);

/// FNV-1a hash of a canonical string, hex-encoded.
std::string fnv1a_hex(const std::string& payload);

}  // namespace chronocycle

#endif
