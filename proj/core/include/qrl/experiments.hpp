// Copyright 2026 The qrl-thermal Authors
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

// Ensemble, sweep and heatmap drivers. Realization j of an ensemble always
// draws from make_rng(master_seed, j), so every result is a pure function of
// its spec no matter how many worker threads run it.

#include <array>
#include <vector>

#include "qrl/channel.hpp"
#include "qrl/metrics.hpp"
#include "qrl/protocol.hpp"

namespace qrl {

struct EnsembleSpec {
  BathSpec bath{};
  LearningConfig learn{};
  int n_realizations = 1000;

  void validate() const;
};

struct ExecutionOptions {
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

enum class SweepAxis { temperature, tau };

struct SweepSpec {
  SweepAxis axis = SweepAxis::temperature;
  // Strictly increasing, nonempty, positive.
  std::vector<double> grid;
  EnsembleSpec base{};
  double window_fraction = kDefaultWindowFraction;

  void validate() const;
};

struct SweepPoint {
  double x = 0.0;
  AsymptoticSummary summary;
};

struct HeatmapSpec {
  std::vector<double> gamma0_grid;
  std::vector<double> temp_grid;
  double tau_dimless = 1.0;
  EigenBasis basis{};

  void validate() const;
};

struct HeatmapCell {
  double gamma0 = 0.0;
  double temp = 0.0;
  double fid_plus_fp = 1.0;
  double fid_minus_fp = 1.0;
};

std::vector<TrajectoryResult> run_trajectories(const EnsembleSpec& spec,
                                               const ExecutionOptions& exec = {});

EnsembleCurves run_ensemble(const EnsembleSpec& spec, const ExecutionOptions& exec = {});

// Point i runs the base ensemble with the swept parameter set to grid[i] and
// master seed derive_seed(base.learn.master_seed, i).
std::vector<SweepPoint> run_sweep(const SweepSpec& spec, const ExecutionOptions& exec = {});

// Row-major over gamma0 (outer) then temperature (inner).
std::vector<HeatmapCell> analytic_heatmap(const HeatmapSpec& spec);

// min, min + step, ... up to max (inclusive within step * 1e-9).
std::vector<double> linear_grid(double min, double max, double step);

// points values from min to max inclusive.
std::vector<double> evenly_spaced(double min, double max, int points);

std::vector<double> default_temperature_grid();  // 0.05 .. 2.0, step 0.05
std::vector<double> default_tau_grid();          // pi/16 .. 4 pi, step pi/16
HeatmapSpec default_heatmap_spec();              // 64 x 64, gamma0 in [0, 2], T in [0.01, 2]

// Dissipative temperatures compared on the tau sweep at gamma0 = 0.5.
inline constexpr std::array<double, 3> kTauSweepTemperatures{0.01, 1.0, 10.0};

unsigned resolve_thread_count(unsigned requested);

}  // namespace qrl
