// Command-line front end: `rmtlab run` executes experiments and persists
// CSV + JSON, `rmtlab report` renders (and optionally audits) saved results.

#include <csignal>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "rmtlab/report_io.hpp"

namespace {

enum Exit { kPass = 0, kGateFailure = 1, kConfigError = 2, kIoError = 3 };

extern "C" void on_interrupt(int) { rmtlab::stop_requested().store(true); }

int print_audit(const rmtlab::RunReport& r, const std::vector<std::string>& issues) {
  if (issues.empty()) {
    std::cout << "  audit: " << r.table.rows.size() << " rows recomputed, summary matches\n";
    return kPass;
  }
  for (const auto& i : issues) std::cout << "  audit mismatch: " << i << '\n';
  return kGateFailure;
}

int run_command(const std::map<std::string, std::string>& flags, const std::string& config_file, bool audit_after,
                bool quiet) {
  rmtlab::RunConfig cfg;
  cfg.out = rmtlab::default_output_dir();
  if (!config_file.empty()) rmtlab::load_config_file(cfg, config_file);
  for (const auto& [k, v] : flags) rmtlab::apply_setting(cfg, k, v);
  cfg.validate();

  std::signal(SIGINT, on_interrupt);
  int status = kPass;
  for (const auto e : rmtlab::expand(cfg.experiment)) {
    if (rmtlab::stop_requested()) break;
    if (!quiet) std::cerr << "running " << rmtlab::to_string(e) << " (" << cfg.trials_for(e) << " trials)\n";
    const auto report = rmtlab::run_experiment(e, cfg);
    const auto path = rmtlab::write_report(cfg.out, report);
    std::cout << rmtlab::render(report);
    std::cout << "  wrote " << path.string() << '\n';
    if (audit_after) {
      const auto loaded = rmtlab::load_report(path);
      if (print_audit(loaded.report, rmtlab::audit(loaded.report)) != kPass) status = kGateFailure;
    }
    if (!report.passed()) status = kGateFailure;
  }
  if (rmtlab::stop_requested()) {
    std::cerr << "interrupted: partial results were flushed\n";
    status = kGateFailure;
  }
  return status;
}

int report_command(const std::string& path, bool audit_after) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw rmtlab::IoError("no reports found in " + path);
  } else {
    files.emplace_back(path);
  }
  int status = kPass;
  for (const auto& f : files) {
    const auto loaded = rmtlab::load_report(f);
    std::cout << rmtlab::render(loaded.report);
    if (audit_after && print_audit(loaded.report, rmtlab::audit(loaded.report)) != kPass) status = kGateFailure;
    if (!loaded.report.passed()) status = kGateFailure;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-matrix spectral laboratory"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run experiments and write <experiment>.csv / .json");
  std::map<std::string, std::string> flags;
  const std::vector<std::pair<std::string, std::string>> settings{
      {"experiment", "localaw, rigidity, edge, greencmp, moments or all (default all)"},
      {"n", "number of columns N (default 200)"},
      {"m", "number of rows M (default 800)"},
      {"dist", "entry distribution: gaussian, rademacher, exponential, uniform"},
      {"trials", "Monte Carlo trials (default depends on the experiment)"},
      {"seed", "base seed (default 1)"},
      {"epsilon", "z = lambda_+ + i N^{-2/3-epsilon} (default 0.05)"},
      {"out", "output directory (default $RMTLAB_OUT or ./results)"},
      {"workers", "worker threads (default: hardware concurrency)"},
      {"functional", "telescoping test functional: identity, square, tanh"},
      {"edge-k", "extreme eigenvalues kept per edge (default 2)"},
  };
  for (const auto& [name, help] : settings) {
    run->add_option_function<std::string>(
        "--" + name,
        [&flags, key = name](const std::string& v) {
          std::string k = key;
          std::replace(k.begin(), k.end(), '-', '_');
          flags[k] = v;
        },
        help);
  }
  std::string config_file;
  bool audit_after = false, quiet = false;
  run->add_option("--config", config_file, "key = value file; command-line flags take precedence");
  run->add_flag("--audit", audit_after, "re-read the CSV and verify every aggregate in the JSON summary");
  run->add_flag("-q,--quiet", quiet, "no progress messages");

  auto* report = app.add_subcommand("report", "print gate-by-gate results of saved reports");
  std::string report_path;
  bool report_audit = false;
  report->add_option("path", report_path, "report JSON file or output directory")->required();
  report->add_flag("--audit", report_audit, "recompute aggregates from the CSV rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    if (*run) return run_command(flags, config_file, audit_after, quiet);
    return report_command(report_path, report_audit);
  } catch (const rmtlab::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const rmtlab::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGateFailure;
  }
}
