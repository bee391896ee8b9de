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

#include "qrl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrl/errors.hpp"

namespace qrl {

namespace {

// Mean and standard error of `values`, which is sorted in place so that the
// result does not depend on input order.
void mean_and_se(std::vector<double>& values, double& mean, double& se) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() < 2) {
    se = 0.0;
    return;
  }
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
}

void resize(Curve& c, std::size_t k) {
  c.mean.assign(k, 0.0);
  c.se.assign(k, 0.0);
}

double window_mean(const std::vector<double>& v, std::size_t start) {
  const double sum = std::accumulate(v.begin() + static_cast<std::ptrdiff_t>(start), v.end(), 0.0);
  return sum / static_cast<double>(v.size() - start);
}

}  // namespace

FidelityTriplet fidelity_triplet(const PureState& phi, const EigenBasis& basis) {
  const double fm = overlap_fidelity(basis.minus(), phi);
  const double fp = overlap_fidelity(basis.plus(), phi);
  return {std::max(fm, fp), fm, fp};
}

EnsembleCurves aggregate_ensemble(std::span<const TrajectoryResult> trajectories) {
  if (trajectories.empty()) throw InvalidArgument("cannot aggregate an empty ensemble");
  const std::size_t k_len = trajectories.front().records.size();
  for (const auto& t : trajectories) {
    if (t.records.size() != k_len) {
      throw InvalidArgument("trajectories have mismatched iteration counts");
    }
  }

  EnsembleCurves out;
  out.n_realizations = static_cast<int>(trajectories.size());
  for (Curve* c : {&out.f, &out.w, &out.f_minus, &out.f_plus}) resize(*c, k_len);

  std::vector<double> column(trajectories.size());
  auto fill = [&](std::size_t k, Curve& curve, double IterationRecord::*field) {
    for (std::size_t j = 0; j < trajectories.size(); ++j) {
      column[j] = trajectories[j].records[k].*field;
    }
    mean_and_se(column, curve.mean[k], curve.se[k]);
  };
  for (std::size_t k = 0; k < k_len; ++k) {
    fill(k, out.f, &IterationRecord::f);
    fill(k, out.w, &IterationRecord::w);
    fill(k, out.f_minus, &IterationRecord::f_minus);
    fill(k, out.f_plus, &IterationRecord::f_plus);
  }
  return out;
}

AsymptoticSummary asymptotic_summary(const EnsembleCurves& curves, double window_fraction) {
  if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
    throw InvalidArgument("window fraction must lie in (0, 1]");
  }
  const std::size_t k_len = curves.n_iterations();
  if (k_len == 0) throw InvalidArgument("cannot summarize empty curves");

  // Guard against ceil(0.2 * 500) landing on 101 through rounding.
  const double scaled = window_fraction * static_cast<double>(k_len);
  std::size_t window = static_cast<std::size_t>(std::ceil(scaled - 1e-9 * scaled));
  window = std::clamp<std::size_t>(window, 1, k_len);
  const std::size_t start = k_len - window;

  AsymptoticSummary s;
  s.window_fraction = window_fraction;
  s.window_start_k = static_cast<int>(start) + 1;
  s.f_a = window_mean(curves.f.mean, start);
  s.w_a = window_mean(curves.w.mean, start);
  s.f_a_minus = window_mean(curves.f_minus.mean, start);
  s.f_a_plus = window_mean(curves.f_plus.mean, start);
  s.f_a_se = window_mean(curves.f.se, start);
  s.w_a_se = window_mean(curves.w.se, start);
  return s;
}

}  // namespace qrl
