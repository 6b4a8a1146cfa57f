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

#ifndef POSSIBLY_HARNESS_H_
#define POSSIBLY_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "possibly/simulation.h"

namespace possibly {

// Linear-interpolation percentile at rank q * (N - 1) of the sorted samples.
// Throws std::invalid_argument for empty input or q outside [0, 1].
double Percentile(std::span<const double> samples, double q);

struct HistogramBin {
  double lower = 0.0;
  std::uint64_t count = 0;
};

// Equal-width bins over [0, 1]; the last bin is closed on the right.
// Samples outside [0, 1] are clamped into the end bins.
std::vector<HistogramBin> Histogram(std::span<const double> samples,
                                    std::size_t bins);

// Mean and 10th/90th percentiles of one metric across runs.
struct AggregateRecord {
  double x = 0.0;  // swept value, or step for trajectories
  std::string metric;
  double mean = 0.0;
  double p10 = 0.0;
  double p90 = 0.0;

  friend bool operator==(const AggregateRecord&,
                         const AggregateRecord&) = default;
};

AggregateRecord Aggregate(double x, std::string metric,
                          std::span<const double> samples);

enum class SweepParameter {
  kNone,  // a single point at the base parameters
  kTheta,
  kNoise,
  kEvidenceRate,
  kAgents,
  kSteps,
};

std::string ToString(SweepParameter parameter);
// Accepts the CLI flag names: theta, noise, evidence-rate, agents, steps.
SweepParameter ParseSweepParameter(const std::string& text);

// Returns `base` with `parameter` set to `value`.
SimParams WithParameter(SimParams base, SweepParameter parameter,
                        double value);

struct SweepSpec {
  SimParams base;
  SweepParameter parameter = SweepParameter::kNone;
  std::vector<double> grid = {0.0};
  int runs = 100;
  Capture capture = Capture::kFinalStep;

  // Throws std::invalid_argument for an empty grid, runs < 1, an invalid
  // base, or trajectory capture over more than one grid point.
  void Validate() const;
};

// Metric names reported for a model.
std::vector<std::string> MetricNames(BeliefModel model);
// Value of `metric` in a record; throws if the record lacks it.
double MetricValue(const MetricsRecord& record, const std::string& metric);

struct PointResult {
  double x = 0.0;
  std::vector<RunResult> runs;  // in run-index order
};

struct SweepResult {
  std::vector<PointResult> points;  // in grid order
  // Final-step aggregates per grid point, or per-step aggregates for
  // trajectory capture.
  std::vector<AggregateRecord> aggregates;
  std::uint64_t degenerate_fusions = 0;
};

// Seed of grid point `grid_index`; run r of that point uses run index r.
std::uint64_t PointSeed(std::uint64_t base_seed, std::size_t grid_index);

// Executes every (grid point, run) pair on up to `workers` threads (0 means
// hardware concurrency). Results do not depend on the worker count.
SweepResult Sweep(const SweepSpec& spec, unsigned workers = 0);

// Final-step values of `metric` for every run at one grid point.
std::vector<double> FinalValues(const PointResult& point,
                                const std::string& metric);

// Fused values of the two three-state example beliefs (1, 0.8, 0.7) and
// (0.4, 0.9, 1) across theta, as metrics fused_s1..fused_s3 and normaliser.
std::vector<AggregateRecord> FusionCurve(std::span<const double> thetas);

// Reversal probability of the best and second-best of five states against
// sigma.
std::vector<AggregateRecord> ReversalCurve(std::span<const double> sigmas,
                                           std::uint64_t samples,
                                           std::uint64_t seed);

enum class PresetKind {
  kFusionCurve,
  kReversalCurve,
  kTrajectory,
  kSweep,
  kHistogram,
};

struct Experiment {
  std::string label;  // empty for single-experiment presets
  SweepSpec spec;
};

// A figure reproduction: one or more experiments plus, for the curve
// presets, their grid.
struct Preset {
  std::string id;
  PresetKind kind = PresetKind::kSweep;
  std::vector<Experiment> experiments;
  std::vector<double> curve_grid;
  std::uint64_t samples = 0;
  std::size_t histogram_bins = 20;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultPresetSeed = 2019;

std::vector<std::string> PresetIds();
// Throws std::invalid_argument for an unknown id.
Preset GetPreset(const std::string& id,
                 std::uint64_t seed = kDefaultPresetSeed);

// Runs a preset and writes its CSV files into `out_dir`. Returns the paths
// written.
std::vector<std::string> RunPreset(const Preset& preset,
                                   const std::string& out_dir,
                                   unsigned workers = 0);

}  // namespace possibly

#endif  // POSSIBLY_HARNESS_H_
