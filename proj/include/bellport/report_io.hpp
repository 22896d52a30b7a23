// Copyright 2026 The Bellport Authors
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

#pragma once

// File formats for scan results. CSV files use ';' as the field separator and
// print floating values with 17 significant digits.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bellport/statistics.hpp"
#include "json.hpp"

namespace bellport::report_io {

enum class Format { Csv, Json };

std::string format_double(double v);

/// representative;orbit_size;Q;p_class;p_qm;p_approx;enhancement
void write_classes_csv(std::ostream& out, const statistics::ScanReport& report);
/// k;p_class;p_qm;p_approx for k = 1..n
void write_occupied_csv(std::ostream& out, const statistics::ScanReport& report);
/// k;p_class;p_qm;p_approx for k = 0..n
void write_occupancy_csv(std::ostream& out, const statistics::ScanReport& report);

nlohmann::ordered_json to_json(const statistics::ScanReport& report);
nlohmann::ordered_json to_json(const statistics::ClassCounts& counts);

struct Table1Row {
  int n = 0;
  statistics::ClassCounts counts;
};

/// n;N_class;N_quantum;N_law;N_supp, followed by a "# truncated ..." marker
/// row when `truncated_at` is set.
void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows, std::optional<int> truncated_at = {});

/// representative;compact;enhancement;enhancement_exact
void write_table2_csv(std::ostream& out, const std::vector<statistics::EnhancementRow>& rows);

/// classes_<n>.csv, dist_occupied_<n>.csv and dist_occupancy_<n>.csv, or
/// scan_<n>.json. Returns the paths written.
std::vector<std::filesystem::path> write_scan(const statistics::ScanReport& report, const std::filesystem::path& dir,
                                              Format format);

/// The two distribution files only.
std::vector<std::filesystem::path> write_distributions(const statistics::ScanReport& report,
                                                       const std::filesystem::path& dir, Format format);

}  // namespace bellport::report_io
