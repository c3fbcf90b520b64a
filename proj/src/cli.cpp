// Copyright 2026 The qslkit Authors
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

#include "qslkit/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <string_view>

#include "qslkit/errors.hpp"
#include "qslkit/metrics.hpp"

namespace qslkit::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kErrorToken = "error";
constexpr std::string_view kPoleToken = "pole";
constexpr std::string_view kSkippedToken = "na";

Cell optional_cell(const std::optional<double>& value) {
  if (value) return *value;
  return std::string(kSkippedToken);
}

// Rounds to `precision` significant digits so that JSON numbers carry the
// same information as CSV cells.
double rounded(double value, int precision) {
  return std::strtod(format_number(value, precision).c_str(), nullptr);
}

json cell_to_json(const Cell& cell, int precision) {
  if (const double* v = std::get_if<double>(&cell)) {
    if (!std::isfinite(*v)) return std::string(kErrorToken);
    return rounded(*v, precision);
  }
  return std::get<std::string>(cell);
}

struct CommonFlags {
  double lambda = 50.0;
  double omega0 = 1.0;
  double tau = 1.0;
  double tol = 0.0;  // 0 selects the environment or the default
  std::string format;
  int precision = 12;
  std::string output;
};

struct RangeFlags {
  double gamma0_min = 0.1;
  double gamma0_max = 500.0;
  std::size_t points = 60;
  std::string spacing = "log";
  std::vector<double> gamma0_list;
  std::vector<std::string> norms{"op", "hs", "tr"};
  std::size_t workers = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags, const std::string& default_format) {
  flags.format = default_format;
  cmd->add_option("--lambda", flags.lambda, "Spectral width of the bath")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--omega0", flags.omega0, "Qubit frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tau", flags.tau, "Driving time")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol", flags.tol,
                  "Absolute quadrature tolerance (default: $QSLKIT_TOL or 1e-9*tau)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--precision", flags.precision, "Significant digits")
      ->check(CLI::Range(6, 17))
      ->capture_default_str();
  cmd->add_option("--output", flags.output, "Output path (default: stdout)");
}

void add_range(CLI::App* cmd, RangeFlags& flags) {
  cmd->add_option("--gamma0-min", flags.gamma0_min, "Smallest coupling strength")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--gamma0-max", flags.gamma0_max, "Largest coupling strength")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--points", flags.points, "Number of coupling values")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--spacing", flags.spacing, "Spacing of the coupling grid")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();
  cmd->add_option("--gamma0-list", flags.gamma0_list,
                  "Explicit comma-separated coupling values")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--norms", flags.norms, "Norms to evaluate (op,hs,tr)")
      ->delimiter(',')
      ->check(CLI::IsMember({"op", "hs", "tr"}));
  cmd->add_option("--workers", flags.workers, "Parallel sweep workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// Thrown for flag combinations CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double resolve_tol(const CommonFlags& flags) {
  if (flags.tol > 0.0) return flags.tol;
  if (const char* env = std::getenv("QSLKIT_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !std::isfinite(value) || value <= 0.0) {
      throw UsageError("QSLKIT_TOL must be a positive number, got '" +
                       std::string(env) + "'");
    }
    return value;
  }
  return default_tolerance(flags.tau);
}

OutputFormat resolve_format(const CommonFlags& flags) {
  OutputFormat format;
  format.kind = flags.format == "json" ? Format::kJson : Format::kCsv;
  format.precision = flags.precision;
  format.validate();
  return format;
}

SweepConfig sweep_config(const CommonFlags& common, const RangeFlags& range) {
  SweepConfig config;
  config.lambda = common.lambda;
  config.omega0 = common.omega0;
  config.tau = common.tau;
  config.tol = resolve_tol(common);
  config.gamma0_values = range.gamma0_list;
  config.gamma0_min = range.gamma0_min;
  config.gamma0_max = range.gamma0_max;
  config.count = range.points;
  config.spacing = range.spacing == "linear" ? Spacing::kLinear : Spacing::kLog;
  config.norms.clear();
  for (const std::string& n : range.norms) {
    const NormKind kind = parse_norm_kind(n);
    if (!config.uses(kind)) config.norms.push_back(kind);
  }
  config.workers = range.workers;
  try {
    config.validate();
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  return config;
}

PureState initial_state(const std::string& name) {
  if (name == "plus") {
    return PureState::normalized({1.0, 1.0});
  }
  return excited_state();
}

// Writes to --output when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit(std::ostream& out, const std::string& command, const Table& table,
          const OutputFormat& format) {
  if (format.kind == Format::kJson) {
    write_json(out, command, table, format.precision);
  } else {
    write_csv(out, table, format.precision);
  }
}

}  // namespace

void OutputFormat::validate() const {
  if (precision < 6 || precision > 17) {
    throw InvalidInput("precision must lie in [6, 17]");
  }
}

std::string format_number(double value, int precision) {
  if (!std::isfinite(value)) return std::string(kErrorToken);
  if (value == 0.0) return "0";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
  return buffer;
}

void write_csv(std::ostream& out, const Table& table, int precision) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const double* v = std::get_if<double>(&row[i])) {
        out << format_number(*v, precision);
      } else {
        out << std::get<std::string>(row[i]);
      }
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::string& command,
                const Table& table, int precision) {
  json doc;
  doc["schema"] = kJsonSchemaVersion;
  doc["command"] = command;
  doc["columns"] = table.columns;
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.columns[i]] = cell_to_json(row[i], precision);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

Table sweep_table(const std::vector<SweepRow>& rows) {
  Table table;
  table.columns = {"gamma0",   "regime",   "lambda_op", "lambda_hs",
                   "lambda_tr", "sin2",    "bound_op",  "bound_hs",
                   "bound_tr", "tau_qsl", "fidelity"};
  for (const SweepRow& row : rows) {
    std::vector<Cell> cells{row.gamma0, std::string(to_string(row.regime))};
    if (row.error) {
      cells.resize(table.columns.size(), std::string(kErrorToken));
    } else {
      for (NormKind kind : kAllNorms) cells.push_back(optional_cell(row.lambda(kind)));
      cells.push_back(row.sin2);
      for (NormKind kind : kAllNorms) cells.push_back(optional_cell(row.bound(kind)));
      cells.push_back(row.tau_qsl);
      cells.push_back(row.fidelity);
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

Table norms_table(const std::vector<NormRow>& rows) {
  Table table;
  table.columns = {"gamma0", "avg_op_norm", "plateau_op", "fidelity"};
  for (const NormRow& row : rows) {
    std::vector<Cell> cells{row.gamma0};
    if (row.error) {
      cells.resize(table.columns.size(), std::string(kErrorToken));
    } else {
      cells.push_back(row.averaged_op_norm);
      cells.push_back(row.plateau_prediction);
      cells.push_back(row.fidelity);
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

Table trajectory_table(const JcmTrajectory& dump) {
  const Trajectory& traj = dump.trajectory;
  Table table;
  table.columns = {"t",       "rho11",   "re_rho10", "im_rho10",
                   "gamma_t", "norm_op", "norm_hs",  "norm_tr"};
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const DensityMatrix& rho = traj.states[i];
    std::vector<Cell> cells{traj.times[i], rho(kExcited, kExcited).real(),
                            rho(kExcited, kGround).real(),
                            rho(kExcited, kGround).imag()};
    if (dump.decay_rate[i]) {
      cells.push_back(*dump.decay_rate[i]);
    } else {
      cells.push_back(std::string(kPoleToken));
    }
    for (NormKind kind : kAllNorms) cells.push_back(traj.norm(kind)[i]);
    table.rows.push_back(std::move(cells));
  }
  return table;
}

void write_report(std::ostream& out, const JcmParams& params,
                  const QslReport& report, double fidelity, double tol,
                  const OutputFormat& format) {
  const int p = format.precision;
  if (format.kind == Format::kJson) {
    json doc;
    doc["schema"] = kJsonSchemaVersion;
    doc["command"] = "bound";
    doc["params"] = {{"gamma0", rounded(params.gamma0, p)},
                     {"lambda", rounded(params.lambda, p)},
                     {"omega0", rounded(params.omega0, p)},
                     {"hbar", rounded(params.hbar, p)},
                     {"tau", rounded(report.tau, p)},
                     {"tol", rounded(tol, p)}};
    doc["regime"] = std::string(to_string(params.regime()));
    doc["bures_angle"] = rounded(report.bures.radians, p);
    doc["sin2"] = rounded(report.sin2, p);
    doc["fidelity"] = rounded(fidelity, p);
    doc["lambda_op"] = rounded(report.norms.lambda_op, p);
    doc["lambda_hs"] = rounded(report.norms.lambda_hs, p);
    doc["lambda_tr"] = rounded(report.norms.lambda_tr, p);
    doc["quadrature_error_estimate"] =
        rounded(report.norms.quadrature_error_estimate, p);
    doc["bound_op"] = rounded(report.bound_op, p);
    doc["bound_hs"] = rounded(report.bound_hs, p);
    doc["bound_tr"] = rounded(report.bound_tr, p);
    doc["tau_qsl"] = rounded(report.tau_qsl, p);
    doc["attained_by"] = std::string(to_string(report.attained_by));
    out << doc.dump(2) << '\n';
    return;
  }
  Table table;
  table.columns = {"gamma0",   "lambda",   "omega0",    "tau",       "regime",
                   "bures_angle", "sin2",  "fidelity",  "lambda_op", "lambda_hs",
                   "lambda_tr", "bound_op", "bound_hs", "bound_tr",  "tau_qsl",
                   "attained_by"};
  table.rows.push_back({params.gamma0, params.lambda, params.omega0, report.tau,
                        std::string(to_string(params.regime())),
                        report.bures.radians, report.sin2, fidelity,
                        report.norms.lambda_op, report.norms.lambda_hs,
                        report.norms.lambda_tr, report.bound_op, report.bound_hs,
                        report.bound_tr, report.tau_qsl,
                        std::string(to_string(report.attained_by))});
  write_csv(out, table, p);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum speed limits for the damped Jaynes-Cummings model",
               "qslkit"};
  app.require_subcommand(1, 1);

  CommonFlags bound_common;
  double bound_gamma0 = 0.0;
  std::string bound_initial = "excited";
  CLI::App* bound = app.add_subcommand("bound", "Speed-limit report for one coupling");
  bound->add_option("--gamma0", bound_gamma0, "Coupling strength")
      ->required()
      ->check(CLI::NonNegativeNumber);
  bound->add_option("--initial", bound_initial, "Initial pure state")
      ->check(CLI::IsMember({"excited", "plus"}))
      ->capture_default_str();
  add_common(bound, bound_common, "json");

  CommonFlags sweep_common;
  RangeFlags sweep_range;
  CLI::App* sweep = app.add_subcommand("sweep", "Speed-limit times versus coupling");
  add_common(sweep, sweep_common, "csv");
  add_range(sweep, sweep_range);

  CommonFlags norms_common;
  RangeFlags norms_range;
  CLI::App* norms = app.add_subcommand(
      "norms", "Averaged operator norm versus the Markovian plateau");
  add_common(norms, norms_common, "csv");
  add_range(norms, norms_range);

  CommonFlags traj_common;
  double traj_gamma0 = 0.0;
  std::size_t traj_samples = 201;
  std::string traj_initial = "excited";
  CLI::App* trajectory =
      app.add_subcommand("trajectory", "Sampled state, decay rate and norms");
  trajectory->add_option("--gamma0", traj_gamma0, "Coupling strength")
      ->required()
      ->check(CLI::NonNegativeNumber);
  trajectory->add_option("--samples", traj_samples, "Number of time samples")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}))
      ->capture_default_str();
  trajectory->add_option("--initial", traj_initial, "Initial pure state")
      ->check(CLI::IsMember({"excited", "plus"}))
      ->capture_default_str();
  add_common(trajectory, traj_common, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string stage = "setup";
  try {
    if (bound->parsed()) {
      JcmParams params{bound_gamma0, bound_common.lambda, bound_common.omega0};
      const double tol = resolve_tol(bound_common);
      const OutputFormat format = resolve_format(bound_common);
      Sink sink(bound_common.output, out);
      const PureState psi0 = initial_state(bound_initial);
      stage = "state evolution";
      const DensityMatrix rho0 = psi0.projector();
      const DensityMatrix rho_tau = jcm_state(params, rho0, bound_common.tau);
      stage = "norm quadrature";
      const AveragedNorms avg =
          jcm_averaged_norms(params, rho0, bound_common.tau, tol);
      stage = "bound assembly";
      const QslReport report = qsl_time(psi0, rho_tau, avg);
      write_report(sink.stream(), params, report, fidelity(psi0, rho_tau), tol,
                   format);
      return kExitOk;
    }
    if (sweep->parsed() || norms->parsed()) {
      const bool is_sweep = sweep->parsed();
      const CommonFlags& common = is_sweep ? sweep_common : norms_common;
      const SweepConfig config =
          sweep_config(common, is_sweep ? sweep_range : norms_range);
      const OutputFormat format = resolve_format(common);
      Sink sink(common.output, out);
      stage = is_sweep ? "coupling sweep" : "norm sweep";
      std::size_t failures = 0;
      std::size_t total = 0;
      Table table;
      if (is_sweep) {
        const std::vector<SweepRow> rows = sweep_coupling(config);
        for (const SweepRow& row : rows) {
          if (row.error) {
            ++failures;
            err << "gamma0 = " << format_number(row.gamma0, format.precision)
                << ": " << *row.error << '\n';
          }
        }
        total = rows.size();
        table = sweep_table(rows);
      } else {
        const std::vector<NormRow> rows = norm_vs_coupling(config);
        for (const NormRow& row : rows) {
          if (row.error) {
            ++failures;
            err << "gamma0 = " << format_number(row.gamma0, format.precision)
                << ": " << *row.error << '\n';
          }
        }
        total = rows.size();
        table = norms_table(rows);
      }
      emit(sink.stream(), is_sweep ? "sweep" : "norms", table, format);
      if (failures == total && total > 0) {
        err << "numerical failure in " << stage << ": every point failed\n";
        return kExitNumerical;
      }
      return kExitOk;
    }
    if (trajectory->parsed()) {
      JcmParams params{traj_gamma0, traj_common.lambda, traj_common.omega0};
      const OutputFormat format = resolve_format(traj_common);
      Sink sink(traj_common.output, out);
      stage = "trajectory sampling";
      const JcmTrajectory dump =
          trajectory_dump(params, initial_state(traj_initial).projector(),
                          traj_common.tau, traj_samples);
      emit(sink.stream(), "trajectory", trajectory_table(dump), format);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    if (stage == "setup") {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "numerical failure in " << stage << ": " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical failure in " << stage << ": " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace qslkit::cli
