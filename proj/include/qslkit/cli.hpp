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

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "qslkit/experiments.hpp"
#include "qslkit/qsl.hpp"

namespace qslkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kJsonSchemaVersion = 1;

enum class Format { kCsv, kJson };

struct OutputFormat {
  Format kind = Format::kCsv;
  /// Significant digits, within [6, 17].
  int precision = 12;

  void validate() const;
};

/// A cell is either a number or a sentinel token such as "pole" or "error".
using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest "%.{precision}g" rendering; never produces nan/inf text (those
/// become the "error" token) and never "-0".
std::string format_number(double value, int precision);

/// Comma-separated, '.' decimal point, LF line endings, header first.
void write_csv(std::ostream& out, const Table& table, int precision);
/// {"schema": 1, "command": ..., "columns": [...], "rows": [{...}, ...]}.
void write_json(std::ostream& out, const std::string& command,
                const Table& table, int precision);

Table sweep_table(const std::vector<SweepRow>& rows);
Table norms_table(const std::vector<NormRow>& rows);
Table trajectory_table(const JcmTrajectory& dump);

/// Serializes a single bound report.
void write_report(std::ostream& out, const JcmParams& params,
                  const QslReport& report, double fidelity, double tol,
                  const OutputFormat& format);

/// Entry point shared by the executable and the tests. Data goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qslkit::cli
