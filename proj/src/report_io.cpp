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

#include "bellport/report_io.hpp"

#include <cstdio>
#include <fstream>

#include "bellport/error.hpp"

namespace bellport::report_io {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

void write_law_rows(std::ostream& out, const statistics::LawVectors& d, int first_k) {
  out << "k;p_class;p_qm;p_approx\n";
  for (std::size_t i = 0; i < d.classical.size(); ++i) {
    out << static_cast<int>(i) + first_k << ';' << format_double(d.classical[i]) << ';' << format_double(d.quantum[i])
        << ';' << format_double(d.approx[i]) << '\n';
  }
}

nlohmann::ordered_json law_json(const statistics::LawVectors& d) {
  return {{"classical", d.classical}, {"quantum", d.quantum}, {"approx", d.approx}};
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_classes_csv(std::ostream& out, const statistics::ScanReport& report) {
  out << "representative;orbit_size;Q;p_class;p_qm;p_approx;enhancement\n";
  for (const auto& rec : report.classes) {
    out << rec.cls.representative.to_string() << ';' << rec.cls.orbit_size << ';' << rec.q << ';'
        << format_double(rec.p_class) << ';' << format_double(rec.p_qm) << ';' << format_double(rec.p_approx) << ';'
        << format_double(rec.enhancement) << '\n';
  }
}

void write_occupied_csv(std::ostream& out, const statistics::ScanReport& report) {
  write_law_rows(out, report.occupied_ports, 1);
}

void write_occupancy_csv(std::ostream& out, const statistics::ScanReport& report) {
  write_law_rows(out, report.port_occupancy, 0);
}

nlohmann::ordered_json to_json(const statistics::ClassCounts& counts) {
  return {{"n_class", counts.n_class}, {"n_quantum", counts.n_quantum}, {"n_law", counts.n_law}, {"n_supp", counts.n_supp}};
}

nlohmann::ordered_json to_json(const statistics::ScanReport& report) {
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& rec : report.classes) {
    const auto occ = rec.cls.representative.occupations();
    classes.push_back({{"representative", std::vector<int>(occ.begin(), occ.end())},
                       {"orbit_size", rec.cls.orbit_size},
                       {"q", rec.q},
                       {"p_class", rec.p_class},
                       {"p_qm", rec.p_qm},
                       {"p_approx", rec.p_approx},
                       {"enhancement", rec.enhancement},
                       {"suppressed", rec.suppressed},
                       {"zero_certified", rec.zero_certified}});
  }
  nlohmann::ordered_json law_check = {{"checked", report.law_check.checked},
                                      {"violations", report.law_check.violations},
                                      {"max_probability", report.law_check.max_probability}};
  if (report.law_check.first_violation) law_check["first_violation"] = report.law_check.first_violation->to_string();
  return {{"n", report.n},
          {"counts", to_json(report.counts)},
          {"mean_occupied_ports",
           {{"classical", report.mean_occupied_ports[0]},
            {"quantum", report.mean_occupied_ports[1]},
            {"approx", report.mean_occupied_ports[2]}}},
          {"occupied_ports", law_json(report.occupied_ports)},
          {"port_occupancy", law_json(report.port_occupancy)},
          {"law_check", law_check},
          {"classes", classes}};
}

void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows, std::optional<int> truncated_at) {
  out << "n;N_class;N_quantum;N_law;N_supp\n";
  for (const auto& r : rows) {
    out << r.n << ';' << r.counts.n_class << ';' << r.counts.n_quantum << ';' << r.counts.n_law << ';'
        << r.counts.n_supp << '\n';
  }
  if (truncated_at) out << "# truncated: budget exceeded at n=" << *truncated_at << '\n';
}

void write_table2_csv(std::ostream& out, const std::vector<statistics::EnhancementRow>& rows) {
  out << "representative;compact;enhancement;enhancement_exact\n";
  for (const auto& r : rows) {
    out << r.cls.representative.to_string() << ';' << r.cls.representative.compact() << ';' << format_double(r.ratio)
        << ';' << (r.exact ? r.exact->to_string() : std::string{}) << '\n';
  }
}

std::vector<std::filesystem::path> write_distributions(const statistics::ScanReport& report,
                                                       const std::filesystem::path& dir, Format format) {
  std::filesystem::create_directories(dir);
  const std::string n = std::to_string(report.n);
  if (format == Format::Json) {
    const auto path = dir / ("distributions_" + n + ".json");
    auto out = open_output(path);
    nlohmann::ordered_json j = {{"n", report.n},
                                {"occupied_ports", law_json(report.occupied_ports)},
                                {"port_occupancy", law_json(report.port_occupancy)}};
    out << j.dump(2) << '\n';
    return {path};
  }
  const auto occupied = dir / ("dist_occupied_" + n + ".csv");
  const auto occupancy = dir / ("dist_occupancy_" + n + ".csv");
  auto a = open_output(occupied);
  write_occupied_csv(a, report);
  auto b = open_output(occupancy);
  write_occupancy_csv(b, report);
  return {occupied, occupancy};
}

std::vector<std::filesystem::path> write_scan(const statistics::ScanReport& report, const std::filesystem::path& dir,
                                              Format format) {
  std::filesystem::create_directories(dir);
  const std::string n = std::to_string(report.n);
  if (format == Format::Json) {
    const auto path = dir / ("scan_" + n + ".json");
    auto out = open_output(path);
    out << to_json(report).dump(2) << '\n';
    return {path};
  }
  const auto classes = dir / ("classes_" + n + ".csv");
  auto out = open_output(classes);
  write_classes_csv(out, report);
  auto paths = write_distributions(report, dir, format);
  paths.insert(paths.begin(), classes);
  return paths;
}

}  // namespace bellport::report_io
