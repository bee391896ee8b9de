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

#include "qrl/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qrl/errors.hpp"
#include "qrl/metrics.hpp"

namespace qrl {

void LearningConfig::validate() const {
  if (!std::isfinite(reward_rate) || !std::isfinite(punish_rate)) {
    throw InvalidArgument("reward and punishment rates must be finite");
  }
  if (!(reward_rate > 0.0 && reward_rate < 1.0)) {
    throw InvalidArgument("reward rate must lie in (0, 1)");
  }
  if (!(punish_rate > 1.0)) throw InvalidArgument("punishment rate must be > 1");
  if (n_iterations <= 0) throw InvalidArgument("iteration count must be positive");
}

void AgentFrame::accept_rotation(const UnitaryMatrix& rotation) {
  d_ = d_ * rotation;
  if (++rotations_since_reunitarize_ == kReunitarizeInterval) {
    d_ = reunitarize(d_.matrix());
    rotations_since_reunitarize_ = 0;
  }
}

Measurement measure_and_collapse(const DensityMatrix& rho_tau, const AgentFrame& frame,
                                 RngStream& rng) {
  const double p0 = expectation(rho_tau, frame.state());
  const double xi = rng.uniform();
  return {measurement_outcome(xi, p0), p0};
}

double update_exploration(double w, int m, const LearningConfig& cfg) {
  const double factor = m == 0 ? cfg.reward_rate : cfg.punish_rate;
  return std::min(1.0, factor * w);
}

RotationAngles sample_rotation_angles(double w, RngStream& rng) {
  const double half_width = w * std::numbers::pi;
  RotationAngles a;
  a.ax = (2.0 * rng.uniform() - 1.0) * half_width;
  a.ay = (2.0 * rng.uniform() - 1.0) * half_width;
  a.az = (2.0 * rng.uniform() - 1.0) * half_width;
  return a;
}

UnitaryMatrix sample_breve_rotation(double w, RngStream& rng) {
  const RotationAngles a = sample_rotation_angles(w, rng);
  return composite_rotation(a.ax, a.az, a.ay);
}

TrajectoryResult run_realization(const BathSpec& spec, const LearningConfig& cfg,
                                 std::uint64_t realization_index) {
  return run_realization(build_channel(spec), cfg, realization_index);
}

TrajectoryResult run_realization(const GadChannel& channel, const LearningConfig& cfg,
                                 std::uint64_t realization_index) {
  cfg.validate();
  RngStream rng = make_rng(cfg.master_seed, realization_index);
  AgentFrame frame;

  TrajectoryResult result;
  result.realization_index = realization_index;
  result.records.reserve(static_cast<std::size_t>(cfg.n_iterations));

  for (int k = 1; k <= cfg.n_iterations; ++k) {
    const PureState phi = frame.state();
    const FidelityTriplet fid = fidelity_triplet(phi, channel.spec.basis);

    const DensityMatrix rho_tau = apply_channel(channel, DensityMatrix::pure(phi));
    const Measurement meas = measure_and_collapse(rho_tau, frame, rng);

    const double w = frame.w();
    result.records.push_back({k, meas.m, meas.p0, w, fid.f, fid.f_minus, fid.f_plus});

    frame.set_w(update_exploration(w, meas.m, cfg));
    if (meas.m == 1) frame.accept_rotation(sample_breve_rotation(w, rng));
    frame.advance();
  }
  return result;
}

}  // namespace qrl
