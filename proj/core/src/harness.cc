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

#include "possibly/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "possibly/environment.h"
#include "possibly/random.h"

namespace possibly {

double Percentile(std::span<const double> samples, double q) {
  if (samples.empty()) throw std::invalid_argument("percentile of no samples");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("percentile fraction must lie in [0, 1]");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double rank = q * static_cast<double>(sorted.size() - 1);
  const auto below = static_cast<std::size_t>(std::floor(rank));
  const std::size_t above = std::min(below + 1, sorted.size() - 1);
  const double frac = rank - static_cast<double>(below);
  return sorted[below] + frac * (sorted[above] - sorted[below]);
}

std::vector<HistogramBin> Histogram(std::span<const double> samples,
                                    std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("histogram needs bins >= 1");
  std::vector<HistogramBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].lower = static_cast<double>(b) / static_cast<double>(bins);
  }
  for (double v : samples) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    auto b = static_cast<std::size_t>(clamped * static_cast<double>(bins));
    ++out[std::min(b, bins - 1)].count;
  }
  return out;
}

AggregateRecord Aggregate(double x, std::string metric,
                          std::span<const double> samples) {
  AggregateRecord record;
  record.x = x;
  record.metric = std::move(metric);
  record.mean = std::accumulate(samples.begin(), samples.end(), 0.0) /
                static_cast<double>(samples.size());
  record.p10 = Percentile(samples, 0.1);
  record.p90 = Percentile(samples, 0.9);
  return record;
}

std::string ToString(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kNone:
      return "none";
    case SweepParameter::kTheta:
      return "theta";
    case SweepParameter::kNoise:
      return "noise";
    case SweepParameter::kEvidenceRate:
      return "evidence-rate";
    case SweepParameter::kAgents:
      return "agents";
    case SweepParameter::kSteps:
      return "steps";
  }
  return "none";
}

SweepParameter ParseSweepParameter(const std::string& text) {
  for (auto p : {SweepParameter::kNone, SweepParameter::kTheta,
                 SweepParameter::kNoise, SweepParameter::kEvidenceRate,
                 SweepParameter::kAgents, SweepParameter::kSteps}) {
    if (ToString(p) == text) return p;
  }
  throw std::invalid_argument(
      "unknown sweep parameter '" + text +
      "' (expected theta|noise|evidence-rate|agents|steps)");
}

SimParams WithParameter(SimParams base, SweepParameter parameter,
                        double value) {
  switch (parameter) {
    case SweepParameter::kNone:
      break;
    case SweepParameter::kTheta:
      base.theta = FrankParameter(value);
      break;
    case SweepParameter::kNoise:
      base.noise = value;
      break;
    case SweepParameter::kEvidenceRate:
      base.evidence_rate = value;
      break;
    case SweepParameter::kAgents:
      base.agents = static_cast<int>(std::lround(value));
      break;
    case SweepParameter::kSteps:
      base.steps = static_cast<int>(std::lround(value));
      break;
  }
  return base;
}

void SweepSpec::Validate() const {
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (capture == Capture::kEveryStep && grid.size() != 1) {
    throw std::invalid_argument(
        "trajectory capture needs a single grid point");
  }
  for (double v : grid) WithParameter(base, parameter, v).Validate();
}

std::vector<std::string> MetricNames(BeliefModel model) {
  if (model == BeliefModel::kPossibilistic) {
    return {"mean_poss_best", "mean_nec_best"};
  }
  return {"mean_prob_best"};
}

double MetricValue(const MetricsRecord& record, const std::string& metric) {
  const std::optional<double>* field = nullptr;
  if (metric == "mean_poss_best") {
    field = &record.mean_poss_best;
  } else if (metric == "mean_nec_best") {
    field = &record.mean_nec_best;
  } else if (metric == "mean_prob_best") {
    field = &record.mean_prob_best;
  }
  if (field == nullptr || !field->has_value()) {
    throw std::invalid_argument("record has no metric '" + metric + "'");
  }
  return **field;
}

std::uint64_t PointSeed(std::uint64_t base_seed, std::size_t grid_index) {
  return DeriveKey({base_seed, static_cast<std::uint64_t>(grid_index)});
}

namespace {

// Runs jobs [0, count) on a bounded pool; each job writes only its own slot.
template <typename Job>
void ParallelFor(std::size_t count, unsigned workers, const Job& job) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          job(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

SweepResult Sweep(const SweepSpec& spec, unsigned workers) {
  spec.Validate();
  const std::size_t points = spec.grid.size();
  const auto runs = static_cast<std::size_t>(spec.runs);

  SweepResult result;
  result.points.resize(points);
  std::vector<SimParams> params(points);
  for (std::size_t g = 0; g < points; ++g) {
    result.points[g].x = spec.grid[g];
    result.points[g].runs.resize(runs);
    params[g] = WithParameter(spec.base, spec.parameter, spec.grid[g]);
    params[g].seed = PointSeed(spec.base.seed, g);
  }

  ParallelFor(points * runs, workers, [&](std::size_t job) {
    const std::size_t g = job / runs;
    const std::size_t r = job % runs;
    RunOptions options;
    options.run_index = r;
    options.capture = spec.capture;
    result.points[g].runs[r] = Run(params[g], options);
  });

  const auto metrics = MetricNames(spec.base.model);
  std::vector<double> samples(runs);
  for (const PointResult& point : result.points) {
    for (const RunResult& run : point.runs) {
      result.degenerate_fusions += run.degenerate_fusions;
    }
    const std::size_t records = point.runs.front().records.size();
    for (std::size_t i = 0; i < records; ++i) {
      const double x = spec.capture == Capture::kEveryStep
                           ? point.runs.front().records[i].step
                           : point.x;
      for (const std::string& metric : metrics) {
        for (std::size_t r = 0; r < runs; ++r) {
          samples[r] = MetricValue(point.runs[r].records[i], metric);
        }
        result.aggregates.push_back(Aggregate(x, metric, samples));
      }
    }
  }
  return result;
}

std::vector<double> FinalValues(const PointResult& point,
                                const std::string& metric) {
  std::vector<double> values;
  values.reserve(point.runs.size());
  for (const RunResult& run : point.runs) {
    values.push_back(MetricValue(run.records.back(), metric));
  }
  return values;
}

std::vector<AggregateRecord> FusionCurve(std::span<const double> thetas) {
  const PossibilityDistribution first{1.0, 0.8, 0.7};
  const PossibilityDistribution second{0.4, 0.9, 1.0};
  std::vector<AggregateRecord> out;
  for (double theta : thetas) {
    const FrankParameter parameter(theta);
    const PossibilityDistribution fused = Fuse(parameter, first, second);
    const double normaliser = 1.0 - Consistency(parameter, first, second);
    for (std::size_t i = 0; i < fused.size(); ++i) {
      out.push_back({theta, "fused_s" + std::to_string(i + 1), fused[i],
                     fused[i], fused[i]});
    }
    out.push_back({theta, "normaliser", normaliser, normaliser, normaliser});
  }
  return out;
}

std::vector<AggregateRecord> ReversalCurve(std::span<const double> sigmas,
                                           std::uint64_t samples,
                                           std::uint64_t seed) {
  const EnvironmentSpec env = EnvironmentSpec::Uniform(5);
  std::vector<AggregateRecord> out;
  for (double sigma : sigmas) {
    // Common random numbers across sigma values.
    RandomStream rng({seed});
    const double p = ReversalProbability(env, NoiseSpec::Gaussian(sigma), 4, 3,
                                         samples, rng);
    out.push_back({sigma, "reversal_probability", p, p, p});
  }
  return out;
}

}  // namespace possibly
