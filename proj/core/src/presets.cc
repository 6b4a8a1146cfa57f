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

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "possibly/csv.h"
#include "possibly/harness.h"

namespace possibly {

namespace {

// start, start + step, ..., count values; computed from integers so that
// e.g. 0.3 prints as 0.3.
std::vector<double> LinearGrid(int first, int count, double divisor) {
  std::vector<double> grid;
  for (int i = 0; i < count; ++i) grid.push_back((first + i) / divisor);
  return grid;
}

std::vector<double> FusionCurveGrid() {
  std::vector<double> positive;
  for (int i = 0; i <= 30; ++i) positive.push_back(std::pow(10.0, -1.0 + i / 10.0));
  std::vector<double> grid;
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    grid.push_back(-*it);
  }
  grid.insert(grid.end(), positive.begin(), positive.end());
  return grid;
}

SimParams BaseParams(std::uint64_t seed) {
  SimParams p;  // k=100, n=5, rho=0.05, sigma=0, theta=20, 1500 steps
  p.seed = seed;
  return p;
}

SimParams Probabilistic(SimParams p) {
  p.model = BeliefModel::kProbabilistic;
  return p;
}

SweepSpec Trajectory(SimParams base) {
  SweepSpec spec;
  spec.base = base;
  spec.capture = Capture::kEveryStep;
  return spec;
}

SweepSpec FinalSweep(SimParams base, SweepParameter parameter,
                     std::vector<double> grid) {
  SweepSpec spec;
  spec.base = base;
  spec.parameter = parameter;
  spec.grid = std::move(grid);
  return spec;
}

std::string Stem(const Preset& preset, const Experiment& e) {
  return e.label.empty() ? preset.id : preset.id + "_" + e.label;
}

}  // namespace

std::vector<std::string> PresetIds() {
  return {"fig2",  "fig3",  "fig4a", "fig4b", "fig5a", "fig5b",
          "fig6a", "fig6b", "fig7",  "fig8",  "fig9",  "fig10"};
}

Preset GetPreset(const std::string& id, std::uint64_t seed) {
  Preset preset;
  preset.id = id;
  preset.seed = seed;
  const SimParams base = BaseParams(seed);

  if (id == "fig2") {
    preset.kind = PresetKind::kFusionCurve;
    preset.curve_grid = FusionCurveGrid();
  } else if (id == "fig3") {
    preset.kind = PresetKind::kReversalCurve;
    preset.curve_grid = LinearGrid(0, 11, 20.0);
    preset.samples = 1'000'000;
  } else if (id == "fig4a" || id == "fig4b") {
    preset.kind = PresetKind::kTrajectory;
    SimParams p = base;
    p.fusion_enabled = id == "fig4a";
    preset.experiments.push_back({"", Trajectory(p)});
  } else if (id == "fig5a" || id == "fig5b") {
    preset.kind = PresetKind::kSweep;
    SimParams p = base;
    p.noise = id == "fig5a" ? 0.0 : 0.3;
    preset.experiments.push_back(
        {"", FinalSweep(p, SweepParameter::kTheta,
                        {-10, -1, 0.1, 1, 5, 10, 20, 50, 100})});
  } else if (id == "fig6a" || id == "fig6b") {
    preset.kind = PresetKind::kSweep;
    SimParams p = base;
    p.fusion_enabled = id == "fig6a";
    preset.experiments.push_back(
        {"", FinalSweep(p, SweepParameter::kNoise, LinearGrid(0, 11, 20.0))});
  } else if (id == "fig7") {
    preset.kind = PresetKind::kSweep;
    SimParams p = base;
    p.noise = 0.3;
    std::vector<double> full = {0.01, 0.05};
    for (double v : LinearGrid(1, 10, 10.0)) full.push_back(v);
    const std::vector<double> zoom = LinearGrid(1, 11, 100.0);
    preset.experiments.push_back(
        {"possibilistic_full",
         FinalSweep(p, SweepParameter::kEvidenceRate, full)});
    preset.experiments.push_back(
        {"probabilistic_full",
         FinalSweep(Probabilistic(p), SweepParameter::kEvidenceRate, full)});
    preset.experiments.push_back(
        {"possibilistic_zoom",
         FinalSweep(p, SweepParameter::kEvidenceRate, zoom)});
    preset.experiments.push_back(
        {"probabilistic_zoom",
         FinalSweep(Probabilistic(p), SweepParameter::kEvidenceRate, zoom)});
  } else if (id == "fig8" || id == "fig10") {
    preset.kind = PresetKind::kTrajectory;
    SimParams p = base;
    p.noise = 0.3;
    if (id == "fig10") {
      p.evidence_rate = 0.5;
      p.steps = 3500;
    }
    preset.experiments.push_back({"possibilistic", Trajectory(p)});
    preset.experiments.push_back({"probabilistic", Trajectory(Probabilistic(p))});
  } else if (id == "fig9") {
    preset.kind = PresetKind::kHistogram;
    preset.histogram_bins = 20;
    SimParams p = base;
    p.noise = 0.3;
    // Same seeds and run indices as fig8, so these are fig8's final states.
    preset.experiments.push_back(
        {"possibilistic", FinalSweep(p, SweepParameter::kNone, {0.0})});
    preset.experiments.push_back(
        {"probabilistic",
         FinalSweep(Probabilistic(p), SweepParameter::kNone, {0.0})});
  } else {
    throw std::invalid_argument("unknown preset '" + id + "'");
  }
  return preset;
}

std::vector<std::string> RunPreset(const Preset& preset,
                                   const std::string& out_dir,
                                   unsigned workers) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const auto path = [&](const std::string& name) {
    return (fs::path(out_dir) / name).string();
  };
  std::vector<std::string> written;

  switch (preset.kind) {
    case PresetKind::kFusionCurve: {
      written.push_back(path(preset.id + "_aggregate.csv"));
      EmitAggregateCsv(FusionCurve(preset.curve_grid), written.back());
      break;
    }
    case PresetKind::kReversalCurve: {
      written.push_back(path(preset.id + "_aggregate.csv"));
      EmitAggregateCsv(
          ReversalCurve(preset.curve_grid, preset.samples, preset.seed),
          written.back());
      break;
    }
    case PresetKind::kTrajectory:
    case PresetKind::kSweep: {
      for (const Experiment& e : preset.experiments) {
        const SweepResult result = Sweep(e.spec, workers);
        if (preset.kind == PresetKind::kTrajectory) {
          written.push_back(path(Stem(preset, e) + "_trajectory.csv"));
          EmitTrajectoryCsv(result.points.front().runs, e.spec.base.model,
                            written.back());
        }
        written.push_back(path(Stem(preset, e) + "_aggregate.csv"));
        EmitAggregateCsv(result.aggregates, written.back());
      }
      break;
    }
    case PresetKind::kHistogram: {
      for (const Experiment& e : preset.experiments) {
        const SweepResult result = Sweep(e.spec, workers);
        for (const std::string& metric : MetricNames(e.spec.base.model)) {
          const auto values = FinalValues(result.points.front(), metric);
          written.push_back(
              path(Stem(preset, e) + "_" + metric + "_histogram.csv"));
          EmitHistogramCsv(Histogram(values, preset.histogram_bins),
                           written.back());
        }
      }
      break;
    }
  }
  return written;
}

}  // namespace possibly
