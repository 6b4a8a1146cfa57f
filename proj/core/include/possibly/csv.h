// Copyright 2026 The Possibly Authors
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

#ifndef POSSIBLY_CSV_H_
#define POSSIBLY_CSV_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "possibly/harness.h"
#include "possibly/simulation.h"

namespace possibly {

// Shortest decimal that parses back to exactly `value`.
std::string FormatDouble(double value);
// Throws std::invalid_argument unless the whole string is a number.
double ParseDouble(const std::string& text);

// run,step,mean_poss_best,mean_nec_best (possibilistic) or
// run,step,mean_prob_best (probabilistic); one row per (run, step).
std::string TrajectoryHeader(BeliefModel model);
std::string FormatTrajectoryCsv(std::span<const RunResult> runs,
                                BeliefModel model);

// x,metric,mean,p10,p90
inline constexpr const char* kAggregateHeader = "x,metric,mean,p10,p90";
std::string FormatAggregateCsv(std::span<const AggregateRecord> records);
// Throws std::invalid_argument on a malformed document.
std::vector<AggregateRecord> ParseAggregateCsv(const std::string& text);

// bin_lower,count
inline constexpr const char* kHistogramHeader = "bin_lower,count";
std::string FormatHistogramCsv(std::span<const HistogramBin> bins);
std::vector<HistogramBin> ParseHistogramCsv(const std::string& text);

struct TrajectoryRow {
  std::uint64_t run = 0;
  int step = 0;
  std::vector<double> values;
};
std::vector<TrajectoryRow> ParseTrajectoryCsv(const std::string& text);

// Writes `contents` to a sibling temporary file and renames it over `path`,
// so readers never observe a partial file. Throws std::runtime_error naming
// the path on I/O failure.
void WriteFileAtomically(const std::string& path, const std::string& contents);
std::string ReadFile(const std::string& path);

void EmitTrajectoryCsv(std::span<const RunResult> runs, BeliefModel model,
                       const std::string& path);
void EmitAggregateCsv(std::span<const AggregateRecord> records,
                      const std::string& path);
void EmitHistogramCsv(std::span<const HistogramBin> bins,
                      const std::string& path);

}  // namespace possibly

#endif  // POSSIBLY_CSV_H_
