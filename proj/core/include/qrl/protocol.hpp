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

// One realization of the measurement-feedback learning loop: evolve the agent
// through the thermal channel, measure in the agent frame, reward or punish,
// and rotate the frame on punishment.

#include <cstdint>
#include <vector>

#include "qrl/channel.hpp"
#include "qrl/qalg.hpp"
#include "qrl/rng.hpp"

namespace qrl {

struct LearningConfig {
  double reward_rate = 0.9;
  double punish_rate = 2.0 / 0.9;
  int n_iterations = 500;
  std::uint64_t master_seed = 1;

  // Requires 0 < r < 1 < p (finite) and n_iterations > 0.
  void validate() const;
};

// The frame is re-unitarized after this many accepted rotations.
inline constexpr int kReunitarizeInterval = 64;

// Accumulated frame D with |phi> = D|0>, plus the exploration width w.
class AgentFrame {
 public:
  AgentFrame() = default;

  const UnitaryMatrix& d_matrix() const { return d_; }
  double w() const { return w_; }
  int k() const { return k_; }
  int rotations_since_reunitarize() const { return rotations_since_reunitarize_; }

  PureState state() const { return d_ * PureState::zero(); }

  // D <- D * rotation
  void accept_rotation(const UnitaryMatrix& rotation);
  void set_w(double w) { w_ = w; }
  void advance() { ++k_; }

 private:
  UnitaryMatrix d_{};
  double w_ = 1.0;
  int k_ = 1;
  int rotations_since_reunitarize_ = 0;
};

struct IterationRecord {
  int k = 0;
  int m = 0;
  double p0 = 0.0;
  double w = 0.0;  // width in force during this iteration
  double f = 0.0;
  double f_minus = 0.0;
  double f_plus = 0.0;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct TrajectoryResult {
  std::vector<IterationRecord> records;
  std::uint64_t realization_index = 0;

  friend bool operator==(const TrajectoryResult&, const TrajectoryResult&) = default;
};

struct Measurement {
  int m = 0;
  double p0 = 0.0;
};

// m = 0 iff xi <= p0 (the boundary counts as a reward).
constexpr int measurement_outcome(double xi, double p0) { return xi <= p0 ? 0 : 1; }

// P0 = <0|D^dagger rho D|0>; draws one uniform xi and returns m = 0 iff
// xi <= P0. The post-measurement state D|0> is rebuilt by the caller.
Measurement measure_and_collapse(const DensityMatrix& rho_tau, const AgentFrame& frame,
                                 RngStream& rng);

// min{1, [(1-m) r + m p] w}
double update_exploration(double w, int m, const LearningConfig& cfg);

struct RotationAngles {
  double ax = 0.0;
  double ay = 0.0;
  double az = 0.0;
};

// Draws ax, ay, az, in that order, each (2u - 1) w pi with u uniform on [0, 1).
RotationAngles sample_rotation_angles(double w, RngStream& rng);

// composite_rotation(ax, az, ay) of freshly drawn angles.
UnitaryMatrix sample_breve_rotation(double w, RngStream& rng);

TrajectoryResult run_realization(const BathSpec& spec, const LearningConfig& cfg,
                                 std::uint64_t realization_index);

// Same, reusing a prebuilt channel.
TrajectoryResult run_realization(const GadChannel& channel, const LearningConfig& cfg,
                                 std::uint64_t realization_index);

}  // namespace qrl
