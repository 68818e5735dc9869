#pragma once

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmtlab/errors.hpp"
#include "rmtlab/experiments.hpp"

namespace rmtlab {

namespace fs = std::filesystem;

inline constexpr int kReportVersion = 1;

// CSV -------------------------------------------------------------------------------

/// %.17g round-trips every double exactly, so aggregates recomputed from the
/// CSV match the ones computed in memory bit for bit.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_csv(const fs::path& path, const Table& t) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (std::size_t j = 0; j < t.columns.size(); ++j) out << (j ? "," : "") << t.columns[j];
  out << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? "," : "") << format_double(r[j]);
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

inline Table read_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw IoError(path.string() + ": missing header line");
  {
    std::stringstream ss(line);
    for (std::string col; std::getline(ss, col, ',');) t.columns.push_back(col);
  }
  for (long lineno = 2; std::getline(in, line); ++lineno) {
    std::vector<double> row;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || *end != '\0') throw IoError(path.string() + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
      row.push_back(v);
    }
    if (row.size() != t.columns.size()) {
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected " + std::to_string(t.columns.size()) +
                    " fields, got " + std::to_string(row.size()));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

// JSON ------------------------------------------------------------------------------

inline nlohmann::ordered_json config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["experiment"] = to_string(c.experiment);
  j["n"] = c.n;
  j["m"] = c.m;
  j["dist"] = to_string(c.dist);
  j["trials"] = c.trials_for(c.experiment);
  j["seed"] = c.seed;
  j["epsilon"] = c.epsilon;
  j["eta_exponent"] = c.eta_exponent;
  j["envelope_exponent"] = c.envelope_exponent;
  j["shift_exponent"] = c.shift_exponent;
  j["edge_k"] = c.edge_k;
  j["functional"] = to_string(c.functional);
  return j;
}

inline RunConfig config_from_json(const nlohmann::ordered_json& j) {
  RunConfig c;
  c.experiment = parse_experiment(j.at("experiment").get<std::string>());
  c.n = j.at("n").get<long>();
  c.m = j.at("m").get<long>();
  c.dist = parse_distribution(j.at("dist").get<std::string>());
  c.trials = j.at("trials").get<long>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.epsilon = j.at("epsilon").get<double>();
  c.eta_exponent = j.at("eta_exponent").get<double>();
  c.envelope_exponent = j.at("envelope_exponent").get<double>();
  c.shift_exponent = j.at("shift_exponent").get<double>();
  c.edge_k = j.at("edge_k").get<long>();
  c.functional = parse_functional(j.at("functional").get<std::string>());
  return c;
}

namespace detail {

// JSON has no NaN or infinity; store those as strings so they survive a round trip.
inline nlohmann::ordered_json number_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline double number_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw IoError("report: unexpected string '" + s + "' where a number was expected");
  }
  return j.get<double>();
}

inline std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace detail

inline std::string csv_name(Experiment e) { return std::string(to_string(e)) + ".csv"; }
inline std::string json_name(Experiment e) { return std::string(to_string(e)) + ".json"; }

inline nlohmann::ordered_json report_to_json(const RunReport& r, const std::string& created = detail::utc_timestamp()) {
  nlohmann::ordered_json j;
  j["format"] = "rmtlab-report";
  j["version"] = kReportVersion;
  j["experiment"] = to_string(r.experiment);
  j["config"] = config_to_json(r.config);
  j["provenance"] = {{"seed", r.config.seed},
                     {"seed_rule", "trial t uses derive_seed(seed, stream, t); streams are fixed per experiment"},
                     {"created", created},
                     {"wall_seconds", r.wall_seconds}};
  j["csv"] = csv_name(r.experiment);
  j["rows"] = r.table.rows.size();
  nlohmann::ordered_json agg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.summary.aggregates) agg[k] = detail::number_to_json(v);
  j["aggregates"] = agg;
  nlohmann::ordered_json gates = nlohmann::ordered_json::array();
  for (const auto& g : r.summary.gates) {
    gates.push_back({{"name", g.name},
                     {"measured", detail::number_to_json(g.measured)},
                     {"relation", g.relation},
                     {"bound", detail::number_to_json(g.bound)},
                     {"passed", g.passed}});
  }
  j["gates"] = gates;
  j["interrupted"] = r.interrupted;
  j["passed"] = r.passed();
  return j;
}

/// Writes <experiment>.csv and <experiment>.json into `dir`.
inline fs::path write_report(const fs::path& dir, const RunReport& r) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  write_csv(dir / csv_name(r.experiment), r.table);
  const fs::path jp = dir / json_name(r.experiment);
  std::ofstream out(jp, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + jp.string() + " for writing");
  out << report_to_json(r).dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("write failed for " + jp.string());
  return jp;
}

struct LoadedReport {
  RunReport report;
  nlohmann::ordered_json json;
  fs::path path;
};

inline nlohmann::ordered_json parse_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open report " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return nlohmann::ordered_json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path.string() + ": JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

/// Reads a JSON summary and the CSV it names.
inline LoadedReport load_report(const fs::path& path) {
  LoadedReport out;
  out.path = path;
  out.json = parse_json_file(path);
  try {
    const auto& j = out.json;
    if (j.at("format") != "rmtlab-report") throw IoError(path.string() + ": not an rmtlab report");
    if (j.at("version").get<int>() != kReportVersion) throw IoError(path.string() + ": unsupported report version");
    auto& r = out.report;
    r.experiment = parse_experiment(j.at("experiment").get<std::string>());
    r.config = config_from_json(j.at("config"));
    r.wall_seconds = j.at("provenance").at("wall_seconds").get<double>();
    r.interrupted = j.at("interrupted").get<bool>();
    for (const auto& [k, v] : j.at("aggregates").items()) r.summary.aggregates.emplace_back(k, detail::number_from_json(v));
    for (const auto& g : j.at("gates")) {
      r.summary.gates.push_back({g.at("name").get<std::string>(), detail::number_from_json(g.at("measured")),
                                 g.at("relation").get<std::string>(), detail::number_from_json(g.at("bound")),
                                 g.at("passed").get<bool>()});
    }
    r.table = read_csv(path.parent_path() / j.at("csv").get<std::string>());
    if (r.table.rows.size() != j.at("rows").get<std::size_t>()) throw IoError(path.string() + ": row count does not match the CSV");
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path.string() + ": malformed report: " + e.what());
  } catch (const ConfigError& e) {
    throw IoError(path.string() + ": malformed report: " + e.what());
  }
  return out;
}

/// Recomputes every aggregate and gate from the CSV rows and lists any
/// disagreement with the stored summary. Empty means the audit passed.
inline std::vector<std::string> audit(const RunReport& r) {
  const Summary fresh = summarize(r.experiment, r.config, r.table);
  std::vector<std::string> issues;
  const auto same = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
  if (fresh.aggregates.size() != r.summary.aggregates.size()) issues.push_back("aggregate count differs");
  for (std::size_t i = 0; i < std::min(fresh.aggregates.size(), r.summary.aggregates.size()); ++i) {
    const auto& [k, v] = r.summary.aggregates[i];
    if (fresh.aggregates[i].first != k || !same(fresh.aggregates[i].second, v)) {
      issues.push_back("aggregate " + k + ": stored " + format_double(v) + ", recomputed " + format_double(fresh.aggregates[i].second));
    }
  }
  if (fresh.gates.size() != r.summary.gates.size()) issues.push_back("gate count differs");
  for (std::size_t i = 0; i < std::min(fresh.gates.size(), r.summary.gates.size()); ++i) {
    const auto& a = r.summary.gates[i];
    const auto& b = fresh.gates[i];
    if (a.name != b.name || !same(a.measured, b.measured) || !same(a.bound, b.bound) || a.passed != b.passed) {
      issues.push_back("gate " + a.name + ": stored " + format_double(a.measured) + " " + a.relation + " " +
                       format_double(a.bound) + ", recomputed " + format_double(b.measured) + " " + b.relation + " " +
                       format_double(b.bound));
    }
  }
  return issues;
}

inline std::string render(const RunReport& r) {
  std::ostringstream os;
  os << "experiment " << to_string(r.experiment) << ": N=" << r.config.n << " M=" << r.config.m
     << " dist=" << to_string(r.config.dist) << " trials=" << r.config.trials_for(r.experiment)
     << " seed=" << r.config.seed << " rows=" << r.table.rows.size() << (r.interrupted ? " (interrupted)" : "") << '\n';
  char buf[256];
  for (const auto& g : r.summary.gates) {
    std::snprintf(buf, sizeof buf, "  %s  %-32s %.6g %s %.6g\n", g.passed ? "PASS" : "FAIL", g.name.c_str(), g.measured,
                  g.relation.c_str(), g.bound);
    os << buf;
  }
  for (const auto& [k, v] : r.summary.aggregates) {
    std::snprintf(buf, sizeof buf, "    %-34s %.6g\n", k.c_str(), v);
    os << buf;
  }
  os << "  overall: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace rmtlab
