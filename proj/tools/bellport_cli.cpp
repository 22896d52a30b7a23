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

// bellport: command-line front end for arrangement queries, full scans,
// table / figure reproduction and the property suites.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "bellport/combinatorics.hpp"
#include "bellport/error.hpp"
#include "bellport/report_io.hpp"
#include "bellport/scattering.hpp"
#include "bellport/statistics.hpp"
#include "bellport/verify.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using namespace bellport;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::optional<int> n;
  std::string mode = "float";
  std::optional<int> threads;
  double tolerance = 1e-12;
  std::string format = "csv";
  fs::path out_dir = ".";
  std::optional<double> budget_seconds;
};

int resolve_threads(const RunConfig& cfg) {
  if (cfg.threads) return *cfg.threads;
  if (const char* env = std::getenv("BELLPORT_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("BELLPORT_THREADS must be a positive integer, got '") + env + "'");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

statistics::ScanOptions scan_options(const RunConfig& cfg) {
  statistics::ScanOptions opt;
  opt.mode = cfg.mode == "exact" ? statistics::KernelMode::Exact : statistics::KernelMode::Float;
  opt.threads = resolve_threads(cfg);
  opt.tolerance = cfg.tolerance;
  opt.budget_seconds = cfg.budget_seconds;
  return opt;
}

report_io::Format output_format(const RunConfig& cfg) {
  return cfg.format == "json" ? report_io::Format::Json : report_io::Format::Csv;
}

std::ofstream open_file(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

int require_n(const RunConfig& cfg, const char* command) {
  if (!cfg.n) throw InvalidArgument(std::string(command) + " requires --n");
  return *cfg.n;
}

int cmd_prob(const RunConfig& cfg, const std::string& literal) {
  const auto a = combinatorics::Arrangement::parse(literal);
  const int n = a.size();
  if (cfg.n && *cfg.n != n)
    throw InvalidArgument("arrangement has " + std::to_string(n) + " ports but --n is " + std::to_string(*cfg.n));
  if (n > scattering::kRyserMaxDim) throw InvalidArgument("single-event queries support n <= 30");

  const auto d = combinatorics::mode_assignment(a);
  const int q = combinatorics::suppression_q(a);
  const double p_class = combinatorics::classical_probability(a);
  const double p_approx = scattering::approx_probability(a);
  double p_qm = 0.0;
  bool suppressed = true;
  std::string source = "law";
  if (q == 0) {
    const bool exact = cfg.mode == "exact";
    if (exact) {
      const auto amp = scattering::quantum_amplitude_exact(a);
      p_qm = amp.probability(a);
      suppressed = amp.exactly_zero();
      source = "exact";
    } else {
      p_qm = scattering::quantum_probability(a, scattering::fourier_matrix(n));
      suppressed = p_qm < cfg.tolerance;
      source = "ryser";
      if (suppressed && n <= 12) {
        suppressed = scattering::quantum_amplitude_exact(a).exactly_zero();
        if (suppressed) p_qm = 0.0;
        source = "ryser+exact";
      }
    }
  }
  const double enhancement = p_qm / p_class;
  const auto exact_ratio = statistics::rationalize(enhancement);

  std::string d_text;
  for (std::size_t i = 0; i < d.ports.size(); ++i) d_text += (i ? "," : "") + std::to_string(d.ports[i]);

  if (cfg.format == "json") {
    nlohmann::ordered_json j = {{"n", n},
                                {"arrangement", a.to_string()},
                                {"d", d.ports},
                                {"Q", q},
                                {"p_class", p_class},
                                {"p_qm", p_qm},
                                {"p_approx", p_approx},
                                {"enhancement", enhancement},
                                {"enhancement_exact", exact_ratio ? exact_ratio->to_string() : ""},
                                {"suppressed", suppressed},
                                {"p_qm_source", source}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "arrangement;d;Q;p_class;p_qm;p_approx;enhancement;enhancement_exact;suppressed\n"
              << a.to_string() << ';' << d_text << ';' << q << ';' << report_io::format_double(p_class) << ';'
              << report_io::format_double(p_qm) << ';' << report_io::format_double(p_approx) << ';'
              << report_io::format_double(enhancement) << ';' << (exact_ratio ? exact_ratio->to_string() : "") << ';'
              << (suppressed ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_tables(const RunConfig& cfg, int from) {
  const int to = cfg.n.value_or(12);
  if (from < 1 || to < from) throw InvalidArgument("tables needs 1 <= --from <= --n");
  auto opt = scan_options(cfg);
  const auto start = std::chrono::steady_clock::now();
  fs::create_directories(cfg.out_dir);

  std::vector<report_io::Table1Row> rows;
  std::optional<int> truncated_at;
  for (int n = from; n <= to; ++n) {
    if (cfg.budget_seconds) {
      const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      opt.budget_seconds = *cfg.budget_seconds - used;
    }
    try {
      const auto report = statistics::scan(n, opt);
      rows.push_back({n, report.counts});
      std::cout << "n=" << n << " N_class=" << report.counts.n_class << " N_quantum=" << report.counts.n_quantum
                << " N_law=" << report.counts.n_law << " N_supp=" << report.counts.n_supp << '\n';
      if (n <= 10) {
        auto t2 = open_file(cfg.out_dir / ("table2_" + std::to_string(n) + ".csv"));
        report_io::write_table2_csv(t2, statistics::enhancement_table(report));
      }
    } catch (const BudgetExceeded&) {
      truncated_at = n;
      break;
    }
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      auto row = report_io::to_json(r.counts);
      row["n"] = r.n;
      j.push_back(row);
    }
    nlohmann::ordered_json doc = {{"table1", j}};
    if (truncated_at) doc["truncated_at"] = *truncated_at;
    open_file(cfg.out_dir / "table1.json") << doc.dump(2) << '\n';
  } else {
    auto t1 = open_file(cfg.out_dir / "table1.csv");
    report_io::write_table1_csv(t1, rows, truncated_at);
  }
  if (truncated_at) {
    std::cerr << "error: budget exceeded at n=" << *truncated_at << ", table output truncated\n";
    return kExitBudget;
  }
  return 0;
}

int cmd_figures(const RunConfig& cfg) {
  const int n = cfg.n.value_or(14);
  const auto report = statistics::scan(n, scan_options(cfg));
  for (const auto& p : report_io::write_distributions(report, cfg.out_dir, output_format(cfg))) std::cout << p.string() << '\n';
  return 0;
}

int cmd_scan(const RunConfig& cfg) {
  const int n = require_n(cfg, "scan");
  const auto report = statistics::scan(n, scan_options(cfg));
  for (const auto& p : report_io::write_scan(report, cfg.out_dir, output_format(cfg))) std::cout << p.string() << '\n';
  std::cout << "n=" << n << " N_class=" << report.counts.n_class << " N_quantum=" << report.counts.n_quantum
            << " N_law=" << report.counts.n_law << " N_supp=" << report.counts.n_supp << '\n';
  if (report.law_check.violations) {
    std::cerr << "error: suppression law violated numerically at " << report.law_check.first_violation->to_string()
              << '\n';
    return kExitFailure;
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite_name) {
  const auto suite = verify::parse_suite(suite_name);
  const int n = require_n(cfg, "verify");
  verify::SuiteOptions opt;
  opt.threads = resolve_threads(cfg);
  opt.tolerance = cfg.tolerance;
  const auto results = verify::run_suite(suite, n, opt);
  for (const auto& r : results) std::cout << verify::format_result(r) << '\n';
  for (const auto& r : results) {
    if (!r.passed) {
      std::cerr << "error: property " << r.name << " failed"
                << (r.counterexample ? " at " + r.counterexample->to_string() : std::string{}) << '\n';
      return kExitFailure;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell multiport beam splitter simulator"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--n", cfg.n, "Number of particles / ports")->check(CLI::Range(1, 30));
  app.add_option("--mode", cfg.mode, "Amplitude kernel")->check(CLI::IsMember({"float", "exact"}));
  app.add_option("--threads", cfg.threads, "Worker threads (fallback: BELLPORT_THREADS)")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", cfg.tolerance, "Numerical zero threshold")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out_dir, "Output directory");
  app.add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock budget")->check(CLI::PositiveNumber);

  std::string arrangement;
  auto* prob = app.add_subcommand("prob", "Probabilities of a single output arrangement");
  prob->add_option("--arrangement", arrangement, "Comma-separated occupations, e.g. 2,1,2,1,0,0")->required();

  int from = 2;
  auto* tables = app.add_subcommand("tables", "Class counts (table1.csv) and enhancements (table2_<n>.csv)");
  tables->add_option("--from", from, "Smallest n (largest is --n, default 12)");

  auto* figures = app.add_subcommand("figures", "Occupied-ports and port-occupancy distributions (default n=14)");
  auto* scan = app.add_subcommand("scan", "Full per-class scan for one n");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("--suite", suite, "law, oracle, appendix or all")
      ->check(CLI::IsMember({"law", "oracle", "appendix", "all"}));

  for (auto* sub : {prob, tables, figures, scan, verify_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (auto& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "error: " << msg << '\n';
    return kExitUsage;
  }

  try {
    if (*prob) return cmd_prob(cfg, arrangement);
    if (*tables) return cmd_tables(cfg, from);
    if (*figures) return cmd_figures(cfg);
    if (*scan) return cmd_scan(cfg);
    if (*verify_cmd) return cmd_verify(cfg, suite);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
