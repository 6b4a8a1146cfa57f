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

#include "possibly/csv.h"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace possibly {

std::string FormatDouble(double value) {
  std::array<char, 32> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(),
                                 value);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buffer.data(), ptr);
}

double ParseDouble(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return value;
}

namespace {

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

// Returns data lines after checking the header.
std::vector<std::string> DataLines(const std::string& text,
                                   const std::string& header) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw std::invalid_argument("expected CSV header '" + header + "'");
  }
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

template <typename Int>
Int ParseInteger(const std::string& text) {
  Int value{};
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return value;
}

}  // namespace

std::string TrajectoryHeader(BeliefModel model) {
  return model == BeliefModel::kPossibilistic
             ? "run,step,mean_poss_best,mean_nec_best"
             : "run,step,mean_prob_best";
}

std::string FormatTrajectoryCsv(std::span<const RunResult> runs,
                                BeliefModel model) {
  const auto metrics = MetricNames(model);
  std::string out = TrajectoryHeader(model) + "\n";
  for (std::size_t r = 0; r < runs.size(); ++r) {
    for (const MetricsRecord& record : runs[r].records) {
      out += std::to_string(r);
      out += ',';
      out += std::to_string(record.step);
      for (const std::string& metric : metrics) {
        out += ',';
        out += FormatDouble(MetricValue(record, metric));
      }
      out += '\n';
    }
  }
  return out;
}

std::string FormatAggregateCsv(std::span<const AggregateRecord> records) {
  std::string out = std::string(kAggregateHeader) + "\n";
  for (const AggregateRecord& r : records) {
    out += FormatDouble(r.x) + ',' + r.metric + ',' + FormatDouble(r.mean) +
           ',' + FormatDouble(r.p10) + ',' + FormatDouble(r.p90) + '\n';
  }
  return out;
}

std::vector<AggregateRecord> ParseAggregateCsv(const std::string& text) {
  std::vector<AggregateRecord> records;
  for (const std::string& line : DataLines(text, kAggregateHeader)) {
    const auto f = SplitFields(line);
    if (f.size() != 5) throw std::invalid_argument("bad aggregate row: " + line);
    records.push_back({ParseDouble(f[0]), f[1], ParseDouble(f[2]),
                       ParseDouble(f[3]), ParseDouble(f[4])});
  }
  return records;
}

std::string FormatHistogramCsv(std::span<const HistogramBin> bins) {
  std::string out = std::string(kHistogramHeader) + "\n";
  for (const HistogramBin& b : bins) {
    out += FormatDouble(b.lower) + ',' + std::to_string(b.count) + '\n';
  }
  return out;
}

std::vector<HistogramBin> ParseHistogramCsv(const std::string& text) {
  std::vector<HistogramBin> bins;
  for (const std::string& line : DataLines(text, kHistogramHeader)) {
    const auto f = SplitFields(line);
    if (f.size() != 2) throw std::invalid_argument("bad histogram row: " + line);
    bins.push_back({ParseDouble(f[0]), ParseInteger<std::uint64_t>(f[1])});
  }
  return bins;
}

std::vector<TrajectoryRow> ParseTrajectoryCsv(const std::string& text) {
  const std::string header = text.substr(0, text.find('\n'));
  std::vector<TrajectoryRow> rows;
  std::size_t width = 0;
  if (header == TrajectoryHeader(BeliefModel::kPossibilistic)) {
    width = 4;
  } else if (header == TrajectoryHeader(BeliefModel::kProbabilistic)) {
    width = 3;
  } else {
    throw std::invalid_argument("unrecognised trajectory header: " + header);
  }
  for (const std::string& line : DataLines(text, header)) {
    const auto f = SplitFields(line);
    if (f.size() != width) {
      throw std::invalid_argument("bad trajectory row: " + line);
    }
    TrajectoryRow row;
    row.run = ParseInteger<std::uint64_t>(f[0]);
    row.step = ParseInteger<int>(f[1]);
    for (std::size_t i = 2; i < f.size(); ++i) {
      row.values.push_back(ParseDouble(f[i]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteFileAtomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path temp = target.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw std::runtime_error("write failed: " + path);
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw std::runtime_error("cannot rename into place: " + path);
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void EmitTrajectoryCsv(std::span<const RunResult> runs, BeliefModel model,
                       const std::string& path) {
  WriteFileAtomically(path, FormatTrajectoryCsv(runs, model));
}

void EmitAggregateCsv(std::span<const AggregateRecord> records,
                      const std::string& path) {
  WriteFileAtomically(path, FormatAggregateCsv(records));
}

void EmitHistogramCsv(std::span<const HistogramBin> bins,
                      const std::string& path) {
  WriteFileAtomically(path, FormatHistogramCsv(bins));
}

}  // namespace possibly
