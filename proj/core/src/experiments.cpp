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

#include "qrl/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <numbers>
#include <thread>

#include "qrl/errors.hpp"
#include "qrl/rng.hpp"

namespace qrl {

namespace {

void require_increasing(const std::vector<double>& grid, const char* name) {
  if (grid.empty()) throw InvalidArgument(std::string(name) + " grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw InvalidArgument(std::string(name) + " grid is not finite");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw InvalidArgument(std::string(name) + " grid must be strictly increasing");
    }
  }
}

}  // namespace

void EnsembleSpec::validate() const {
  bath.validate();
  learn.validate();
  if (n_realizations < 1) throw InvalidArgument("ensemble needs at least one realization");
}

void SweepSpec::validate() const {
  require_increasing(grid, "sweep");
  if (!(grid.front() > 0.0)) throw InvalidArgument("sweep grid values must be positive");
  if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
    throw InvalidArgument("window fraction must lie in (0, 1]");
  }
  base.validate();
}

void HeatmapSpec::validate() const {
  require_increasing(gamma0_grid, "gamma0");
  require_increasing(temp_grid, "temperature");
  if (gamma0_grid.front() < 0.0) throw InvalidArgument("gamma0 grid must be >= 0");
  if (temp_grid.front() < 0.0) throw InvalidArgument("temperature grid must be >= 0");
  if (!(tau_dimless > 0.0) || !std::isfinite(tau_dimless)) {
    throw InvalidArgument("evolution time must be finite and > 0");
  }
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TrajectoryResult> run_trajectories(const EnsembleSpec& spec,
                                               const ExecutionOptions& exec) {
  spec.validate();
  const GadChannel channel = build_channel(spec.bath);
  const auto n = static_cast<std::size_t>(spec.n_realizations);
  std::vector<TrajectoryResult> out(n);

  const unsigned workers = std::min<std::size_t>(resolve_thread_count(exec.threads), n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t j = next++; j < n; j = next++) {
      try {
        out[j] = run_realization(channel, spec.learn, j);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

EnsembleCurves run_ensemble(const EnsembleSpec& spec, const ExecutionOptions& exec) {
  return aggregate_ensemble(run_trajectories(spec, exec));
}

std::vector<SweepPoint> run_sweep(const SweepSpec& spec, const ExecutionOptions& exec) {
  spec.validate();
  std::vector<SweepPoint> out;
  out.reserve(spec.grid.size());
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    EnsembleSpec point = spec.base;
    if (spec.axis == SweepAxis::temperature) {
      point.bath.t_dimless = spec.grid[i];
    } else {
      point.bath.tau_dimless = spec.grid[i];
    }
    point.learn.master_seed = derive_seed(spec.base.learn.master_seed, i);
    out.push_back({spec.grid[i], asymptotic_summary(run_ensemble(point, exec), spec.window_fraction)});
  }
  return out;
}

std::vector<HeatmapCell> analytic_heatmap(const HeatmapSpec& spec) {
  spec.validate();
  std::vector<HeatmapCell> out;
  out.reserve(spec.gamma0_grid.size() * spec.temp_grid.size());
  for (const double g0 : spec.gamma0_grid) {
    for (const double t : spec.temp_grid) {
      const BathSpec bath{t, g0, spec.tau_dimless, spec.basis};
      const FixedPointFidelities fp = fixed_point_fidelities(derive_params(bath));
      out.push_back({g0, t, fp.plus, fp.minus});
    }
  }
  return out;
}

std::vector<double> linear_grid(double min, double max, double step) {
  if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step)) {
    throw InvalidArgument("grid bounds must be finite");
  }
  if (!(step > 0.0)) throw InvalidArgument("grid step must be > 0");
  if (max < min) throw InvalidArgument("grid max must be >= grid min");
  std::vector<double> grid;
  const double slack = step * 1e-9;
  for (std::size_t i = 0;; ++i) {
    const double x = min + static_cast<double>(i) * step;
    if (x > max + slack) break;
    grid.push_back(x);
  }
  return grid;
}

std::vector<double> default_temperature_grid() { return linear_grid(0.05, 2.0, 0.05); }

std::vector<double> default_tau_grid() {
  constexpr double step = std::numbers::pi / 16;
  return linear_grid(step, 4 * std::numbers::pi, step);
}

std::vector<double> evenly_spaced(double min, double max, int points) {
  if (points < 2) throw InvalidArgument("need at least two grid points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[i] = min + (max - min) * i / (points - 1);
  grid.back() = max;
  return grid;
}

HeatmapSpec default_heatmap_spec() {
  HeatmapSpec spec;
  spec.gamma0_grid = evenly_spaced(0.0, 2.0, 64);
  spec.temp_grid = evenly_spaced(0.01, 2.0, 64);
  return spec;
}

}  // namespace qrl
