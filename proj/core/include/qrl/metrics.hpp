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

#include <span>
#include <vector>

#include "qrl/protocol.hpp"
#include "qrl/qalg.hpp"

namespace qrl {

struct FidelityTriplet {
  double f = 0.0;        // max(f_minus, f_plus)
  double f_minus = 0.0;  // |<-|phi>|
  double f_plus = 0.0;   // |<+|phi>|
};

FidelityTriplet fidelity_triplet(const PureState& phi, const EigenBasis& basis);

// Per-iteration ensemble mean and standard error (sample sd / sqrt(N)).
struct Curve {
  std::vector<double> mean;
  std::vector<double> se;
};

struct EnsembleCurves {
  int n_realizations = 0;
  Curve f;
  Curve w;
  Curve f_minus;
  Curve f_plus;

  std::size_t n_iterations() const { return f.mean.size(); }
};

// Aggregation is exactly permutation invariant: per-iteration samples are
// summed in sorted order. Throws InvalidArgument on empty input or mismatched
// trajectory lengths.
EnsembleCurves aggregate_ensemble(std::span<const TrajectoryResult> trajectories);

inline constexpr double kDefaultWindowFraction = 0.2;

struct AsymptoticSummary {
  double f_a = 0.0;
  double w_a = 0.0;
  double f_a_minus = 0.0;
  double f_a_plus = 0.0;
  // Window means of the per-iteration standard errors. Averaging correlated
  // samples cannot increase the spread, so these bound the standard error of
  // f_a and w_a from above.
  double f_a_se = 0.0;
  double w_a_se = 0.0;
  int window_start_k = 1;
  double window_fraction = kDefaultWindowFraction;
};

// Means over the final ceil(window_fraction * K) iterations. Throws
// InvalidArgument unless 0 < window_fraction <= 1.
AsymptoticSummary asymptotic_summary(const EnsembleCurves& curves,
                                     double window_fraction = kDefaultWindowFraction);

}  // namespace qrl
