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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qrl/channel.hpp"
#include "qrl/errors.hpp"
#include "qrl/protocol.hpp"
#include "qrl/rng.hpp"

namespace qrl {
namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
const double kInvSqrt2 = 1 / std::sqrt(2.0);

TEST(Measurement, BoundaryIsReward) {
  EXPECT_EQ(measurement_outcome(0.5, 0.5), 0);
  EXPECT_EQ(measurement_outcome(std::nextafter(0.5, 1.0), 0.5), 1);
  EXPECT_EQ(measurement_outcome(0.0, 0.0), 0);
  EXPECT_EQ(measurement_outcome(0.999, 1.0), 0);
}

TEST(Measurement, CertainOutcomes) {
  AgentFrame frame;
  RngStream rng(9);
  const DensityMatrix ground = DensityMatrix::pure(PureState::zero());
  const DensityMatrix excited = DensityMatrix::pure(PureState::one());
  for (int i = 0; i < 1000; ++i) {
    const Measurement a = measure_and_collapse(ground, frame, rng);
    EXPECT_EQ(a.m, 0);
    EXPECT_DOUBLE_EQ(a.p0, 1.0);
    const Measurement b = measure_and_collapse(excited, frame, rng);
    EXPECT_EQ(b.m, 1);
    EXPECT_NEAR(b.p0, 0.0, 1e-15);
  }
}

TEST(Measurement, UndampedUnitTimeProbability) {
  const GadChannel ch = build_channel({0.3, 0.0, 1.0, {}});
  AgentFrame frame;
  RngStream rng(1);
  const DensityMatrix out = apply_channel(ch, DensityMatrix::pure(frame.state()));
  EXPECT_NEAR(measure_and_collapse(out, frame, rng).p0, 0.77015115293406986, 1e-12);
}

TEST(Measurement, EmpiricalRewardRate) {
  const GadChannel ch = build_channel({0.3, 0.0, 1.0, {}});
  AgentFrame frame;
  RngStream rng(2);
  const DensityMatrix out = apply_channel(ch, DensityMatrix::pure(frame.state()));
  constexpr int kDraws = 20000;
  int rewards = 0;
  for (int i = 0; i < kDraws; ++i) rewards += measure_and_collapse(out, frame, rng).m == 0;
  const double p = 0.77015115293406986;
  EXPECT_NEAR(static_cast<double>(rewards) / kDraws, p, 4 * std::sqrt(p * (1 - p) / kDraws));
}

TEST(Exploration, UpdateExamples) {
  const LearningConfig cfg;
  EXPECT_DOUBLE_EQ(update_exploration(1.0, 0, cfg), 0.9);
  EXPECT_DOUBLE_EQ(update_exploration(0.9, 1, cfg), 1.0);
  EXPECT_DOUBLE_EQ(update_exploration(0.5, 0, cfg), 0.45);
  EXPECT_DOUBLE_EQ(update_exploration(0.1, 1, cfg), 0.1 * 2 / 0.9);
  EXPECT_EQ(update_exploration(1.0, 1, cfg), 1.0);
}

TEST(Exploration, ZeroWidthGivesIdentity) {
  RngStream rng(4);
  for (int i = 0; i < 20; ++i) {
    EXPECT_LT((sample_breve_rotation(0.0, rng).matrix() - Matrix2::identity()).max_abs(), 1e-15);
  }
}

TEST(Exploration, AnglesAreUniformOnWidth) {
  RngStream rng(8);
  constexpr int kDraws = 10000;
  for (double w : {1.0, 0.25}) {
    double sx = 0, sy = 0, sz = 0;
    for (int i = 0; i < kDraws; ++i) {
      const RotationAngles a = sample_rotation_angles(w, rng);
      ASSERT_LE(std::abs(a.ax), w * std::numbers::pi);
      ASSERT_LE(std::abs(a.ay), w * std::numbers::pi);
      ASSERT_LE(std::abs(a.az), w * std::numbers::pi);
      sx += std::abs(a.ax);
      sy += std::abs(a.ay);
      sz += std::abs(a.az);
    }
    // |alpha| is uniform on [0, w pi]: mean w pi / 2, sd w pi / sqrt(12).
    const double mean = w * std::numbers::pi / 2;
    const double tol = 3 * w * std::numbers::pi / std::sqrt(12.0) / std::sqrt(kDraws);
    EXPECT_NEAR(sx / kDraws, mean, tol);
    EXPECT_NEAR(sy / kDraws, mean, tol);
    EXPECT_NEAR(sz / kDraws, mean, tol);
  }
}

TEST(Exploration, RotationUsesSampledAngles) {
  RngStream a(12);
  RngStream b(12);
  for (int i = 0; i < 50; ++i) {
    const RotationAngles ang = sample_rotation_angles(0.7, a);
    const UnitaryMatrix r = sample_breve_rotation(0.7, b);
    EXPECT_EQ(r.matrix(), composite_rotation(ang.ax, ang.az, ang.ay).matrix());
  }
}

TEST(AgentFrame, ReunitarizesOnSchedule) {
  AgentFrame frame;
  const UnitaryMatrix r = rotation_gate(Axis::y, 0.1);
  for (int i = 1; i <= 2 * kReunitarizeInterval + 3; ++i) {
    frame.accept_rotation(r);
    EXPECT_EQ(frame.rotations_since_reunitarize(), i % kReunitarizeInterval);
  }
  EXPECT_LT(frame.d_matrix().unitarity_defect(), 1e-14);
}

TEST(Realization, PeriodicEvolutionNeverPunishes) {
  LearningConfig cfg;
  cfg.n_iterations = 200;
  const TrajectoryResult tr = run_realization(BathSpec{0.3, 0.0, kTwoPi, {}}, cfg, 0);
  ASSERT_EQ(tr.records.size(), 200u);
  for (const auto& rec : tr.records) {
    EXPECT_EQ(rec.m, 0);
    EXPECT_NEAR(rec.f, kInvSqrt2, 1e-12);
    EXPECT_NEAR(rec.w, std::pow(0.9, rec.k - 1), 1e-12 * std::pow(0.9, rec.k - 1));
  }
}

TEST(Realization, SingleIteration) {
  LearningConfig cfg;
  cfg.n_iterations = 1;
  const TrajectoryResult tr = run_realization(BathSpec{}, cfg, 3);
  ASSERT_EQ(tr.records.size(), 1u);
  EXPECT_EQ(tr.records[0].k, 1);
  EXPECT_EQ(tr.records[0].w, 1.0);
  EXPECT_NEAR(tr.records[0].f, kInvSqrt2, 1e-15);
  EXPECT_EQ(tr.realization_index, 3u);
}

TEST(Realization, RejectsBadConfig) {
  LearningConfig cfg;
  cfg.n_iterations = 0;
  EXPECT_THROW(run_realization(BathSpec{}, cfg, 0), InvalidArgument);
  cfg = {};
  cfg.reward_rate = 1.0;
  EXPECT_THROW(run_realization(BathSpec{}, cfg, 0), InvalidArgument);
  cfg = {};
  cfg.punish_rate = 1.0;
  EXPECT_THROW(run_realization(BathSpec{}, cfg, 0), InvalidArgument);
  EXPECT_THROW(run_realization(BathSpec{-1.0, 0.5, 1.0, {}}, LearningConfig{}, 0), InvalidArgument);
}

TEST(Realization, Reproducible) {
  const BathSpec spec{0.3, 0.5, 1.0, {}};
  LearningConfig cfg;
  cfg.n_iterations = 300;
  cfg.master_seed = 77;
  EXPECT_EQ(run_realization(spec, cfg, 5), run_realization(spec, cfg, 5));
  EXPECT_NE(run_realization(spec, cfg, 5), run_realization(spec, cfg, 6));
}

TEST(Realization, RecordsAreConsistent) {
  const BathSpec spec{0.3, 0.5, 1.0, {1.0, 0.5}};
  LearningConfig cfg;
  cfg.n_iterations = 500;
  const TrajectoryResult tr = run_realization(spec, cfg, 0);
  double prev_w = 1.0;
  int prev_m = -1;
  for (const auto& rec : tr.records) {
    EXPECT_EQ(rec.f, std::max(rec.f_minus, rec.f_plus));
    EXPECT_NEAR(rec.f_minus * rec.f_minus + rec.f_plus * rec.f_plus, 1.0, 1e-9);
    EXPECT_GT(rec.w, 0.0);
    EXPECT_LE(rec.w, 1.0);
    EXPECT_GE(rec.p0, 0.0);
    EXPECT_LE(rec.p0, 1.0);
    if (prev_m >= 0) EXPECT_DOUBLE_EQ(rec.w, update_exploration(prev_w, prev_m, cfg));
    prev_w = rec.w;
    prev_m = rec.m;
  }
}

// Lab-frame formulation: R = D Rb D^dagger, D <- R D. D^dagger stands in for
// D^{-1}, so D is re-unitarized after every update.
struct LabFrameRecord {
  int m;
  double f;
};

std::vector<LabFrameRecord> lab_frame_loop(const GadChannel& ch, const LearningConfig& cfg,
                                           std::uint64_t index) {
  RngStream rng = make_rng(cfg.master_seed, index);
  Matrix2 d = Matrix2::identity();
  double w = 1.0;
  std::vector<LabFrameRecord> out;
  for (int k = 1; k <= cfg.n_iterations; ++k) {
    const PureState phi{d(0, 0), d(1, 0)};
    const DensityMatrix rho = apply_channel(ch, DensityMatrix::pure(phi));
    const double p0 = expectation(rho, phi);
    const int m = rng.uniform() <= p0 ? 0 : 1;
    out.push_back({m, std::max(overlap_fidelity(ch.spec.basis.minus(), phi),
                               overlap_fidelity(ch.spec.basis.plus(), phi))});
    const double w_old = w;
    w = std::min(1.0, (m ? cfg.punish_rate : cfg.reward_rate) * w);
    if (m) {
      const Matrix2 rb = sample_breve_rotation(w_old, rng).matrix();
      const Matrix2 r = d * rb * d.adjoint();
      d = reunitarize(r * d).matrix();
    }
  }
  return out;
}

TEST(Realization, AgentFrameMatchesLabFrame) {
  for (const BathSpec& spec : {BathSpec{0.3, 0.5, 1.0, {}}, BathSpec{1.5, 1.0, 2.0, {0.8, 2.1}}}) {
    LearningConfig cfg;
    cfg.n_iterations = 300;
    const GadChannel ch = build_channel(spec);
    for (std::uint64_t j = 0; j < 5; ++j) {
      const TrajectoryResult tr = run_realization(ch, cfg, j);
      const auto ref = lab_frame_loop(ch, cfg, j);
      for (std::size_t i = 0; i < ref.size(); ++i) {
        ASSERT_EQ(tr.records[i].m, ref[i].m) << "j=" << j << " k=" << i + 1;
        ASSERT_NEAR(tr.records[i].f, ref[i].f, 1e-8) << "j=" << j << " k=" << i + 1;
      }
    }
  }
}

TEST(Realization, LearnsColdBathEigenstate) {
  const GadChannel ch = build_channel({0.3, 1.0, 1.0, {}});
  const LearningConfig cfg;
  int converged = 0;
  for (std::uint64_t j = 0; j < 100; ++j) converged += run_realization(ch, cfg, j).records.back().f > 0.9;
  EXPECT_GE(converged, 80);
}

}  // namespace
}  // namespace qrl
