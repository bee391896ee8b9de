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
#include <limits>
#include <numbers>

#include "oracle/high_precision.hpp"
#include "qrl/channel.hpp"
#include "qrl/errors.hpp"
#include "qrl/lindblad.hpp"
#include "qrl/rng.hpp"
#include "qrl/sampling.hpp"

namespace qrl {
namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

DensityMatrix thermal_state(const BathSpec& spec) {
  const double p = derive_params(spec).p_plus;
  const PureState plus = spec.basis.plus();
  const PureState minus = spec.basis.minus();
  return DensityMatrix::from_matrix(p * Matrix2::outer(plus, plus) +
                                    (1 - p) * Matrix2::outer(minus, minus));
}

TEST(DeriveParams, ZeroTemperatureLimit) {
  const auto p = derive_params({0.0, 0.7, 1.0, {}});
  EXPECT_EQ(p.p_plus, 0.0);
  EXPECT_EQ(p.gamma_minus, 0.0);
  EXPECT_DOUBLE_EQ(p.gamma_plus, 0.7);
  EXPECT_DOUBLE_EQ(p.gamma_total, 0.7);
  EXPECT_NEAR(p.gamma, 1 - std::exp(-0.7), 1e-15);
}

TEST(DeriveParams, NoDissipationMeansNoDamping) {
  for (double t : {0.0, 0.01, 0.3, 1.5, 10.0, 1e3}) {
    for (double tau : {0.1, 1.0, kTwoPi, 50.0}) EXPECT_EQ(derive_params({t, 0.0, tau, {}}).gamma, 0.0);
  }
}

TEST(DeriveParams, MatchesHighPrecisionReference) {
  // Frozen 50-digit values at T=0.3, G0=0.5, tau=1.
  const auto p = derive_params({0.3, 0.5, 1.0, {}});
  EXPECT_NEAR(p.p_plus, 0.034445195666211169, 1e-15);
  EXPECT_NEAR(p.gamma_plus, 0.51849685329501776, 1e-15);
  EXPECT_NEAR(p.gamma_minus, 0.018496853295017764, 1e-15);
  EXPECT_NEAR(p.gamma_total, 0.53699370659003553, 1e-15);
  EXPECT_NEAR(p.gamma, 0.41549719937324304, 1e-15);
  EXPECT_NEAR(p.p_plus, p.gamma_minus / (p.gamma_plus + p.gamma_minus), 1e-12);
}

TEST(DeriveParams, AgreesWithHyperbolicFormsAcrossRegimes) {
  for (double t : {0.02, 0.05, 0.1, 0.3, 0.7, 1.5, 4.0, 10.0, 100.0}) {
    for (double g0 : {0.1, 0.5, 1.0, 2.0}) {
      for (double tau : {0.1, 1.0, kTwoPi}) {
        const auto got = derive_params({t, g0, tau, {}});
        const auto ref = oracle::thermal_rates(t, g0, tau);
        const double tol = 1e-13 * std::max(1.0, static_cast<double>(ref.gamma_total));
        EXPECT_NEAR(got.p_plus, static_cast<double>(ref.p_plus), 1e-15);
        EXPECT_NEAR(got.gamma_plus, static_cast<double>(ref.gamma_plus), tol);
        EXPECT_NEAR(got.gamma_minus, static_cast<double>(ref.gamma_minus), tol);
        EXPECT_NEAR(got.gamma_total, static_cast<double>(ref.gamma_total), tol);
        EXPECT_NEAR(got.gamma, static_cast<double>(ref.gamma), 1e-14);
      }
    }
  }
}

TEST(DeriveParams, NoOverflowAtTinyTemperature) {
  for (double t : {1e-3, 1e-5, 1e-300}) {
    const auto p = derive_params({t, 0.5, 1.0, {}});
    EXPECT_TRUE(std::isfinite(p.gamma_plus));
    EXPECT_EQ(p.gamma_minus, 0.0);
    EXPECT_DOUBLE_EQ(p.gamma_plus, 0.5);
    EXPECT_EQ(p.p_plus, 0.0);
  }
}

TEST(DeriveParams, RejectsInvalidInputs) {
  EXPECT_THROW(derive_params({-0.1, 0.5, 1.0, {}}), InvalidArgument);
  EXPECT_THROW(derive_params({0.3, -0.5, 1.0, {}}), InvalidArgument);
  EXPECT_THROW(derive_params({0.3, 0.5, 0.0, {}}), InvalidArgument);
  EXPECT_THROW(derive_params({std::numeric_limits<double>::quiet_NaN(), 0.5, 1.0, {}}), InvalidArgument);
  EXPECT_THROW(derive_params({0.3, std::numeric_limits<double>::infinity(), 1.0, {}}), InvalidArgument);
}

TEST(DeriveParams, DetailedBalance) {
  for (double t : {0.05, 0.3, 1.0, 3.0, 30.0}) {
    for (double g0 : {0.01, 0.5, 2.0}) {
      const auto p = derive_params({t, g0, 1.0, {}});
      EXPECT_NEAR(p.p_plus, p.gamma_minus / (p.gamma_plus + p.gamma_minus), 1e-12);
    }
  }
}

TEST(DeriveParams, GammaStrictlyIncreasingInEachArgument) {
  std::vector<double> temps, rates, taus;
  for (int i = 0; i < 20; ++i) {
    temps.push_back(0.1 + 0.15 * i);
    rates.push_back(0.02 + 0.05 * i);
    taus.push_back(0.05 + 0.1 * i);
  }
  auto gamma = [](double t, double g0, double tau) { return derive_params({t, g0, tau, {}}).gamma; };
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      for (int k = 0; k + 1 < 20; ++k) {
        EXPECT_LT(gamma(temps[k], rates[i], taus[j]), gamma(temps[k + 1], rates[i], taus[j]));
        EXPECT_LT(gamma(temps[i], rates[k], taus[j]), gamma(temps[i], rates[k + 1], taus[j]));
        EXPECT_LT(gamma(temps[i], rates[j], taus[k]), gamma(temps[i], rates[j], taus[k + 1]));
      }
    }
  }
}

TEST(BuildChannel, NoDissipationKrausAreScaledIdentities) {
  const GadChannel ch = build_channel({0.3, 0.0, 1.0, {}});
  const double p = ch.params.p_plus;
  EXPECT_LT((ch.kraus.ops[0] - std::sqrt(p) * Matrix2::identity()).max_abs(), 1e-15);
  EXPECT_LT((ch.kraus.ops[2] - std::sqrt(1 - p) * Matrix2::identity()).max_abs(), 1e-15);
  EXPECT_EQ(ch.kraus.ops[1].max_abs(), 0.0);
  EXPECT_EQ(ch.kraus.ops[3].max_abs(), 0.0);
}

TEST(BuildChannel, CompletenessHoldsForRandomSpecs) {
  RngStream rng = make_rng(21, 0);
  for (int i = 0; i < 500; ++i) {
    const BathSpec spec{rng.uniform() * 5, rng.uniform() * 3, 0.01 + rng.uniform() * 10,
                        {rng.uniform() * 6.3, rng.uniform() * 6.3}};
    const GadChannel ch = build_channel(spec);
    EXPECT_LT(ch.kraus.completeness_defect(), 1e-10);
    EXPECT_LT(ch.u_evolution.unitarity_defect(), 1e-10);
  }
}

TEST(BuildChannel, MatchesOuterProductAssembly) {
  const BathSpec spec{0.3, 0.5, 1.0, {}};
  const GadChannel ch = build_channel(spec);
  const oracle::Channel ref = oracle::channel(0.3, 0.5, 1.0, spec.basis.theta, spec.basis.phi);
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      const Complex got = ch.kraus.ops[j](i / 2, i % 2);
      EXPECT_NEAR(got.real(), static_cast<double>(ref.kraus[j][i].real()), 1e-15) << "E" << j;
      EXPECT_NEAR(got.imag(), static_cast<double>(ref.kraus[j][i].imag()), 1e-15) << "E" << j;
    }
  }
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(ch.u_evolution(i / 2, i % 2) -
                         Complex(static_cast<double>(ref.u[i].real()), static_cast<double>(ref.u[i].imag()))),
                0.0, 1e-15);
  }
  // Frozen spot values of E0 and E3 in the sigma_x basis.
  EXPECT_NEAR(ch.kraus.ops[0](0, 0).real(), 0.16374303824480358, 1e-15);
  EXPECT_NEAR(ch.kraus.ops[0](0, 1).real(), 0.021851131023013585, 1e-15);
  EXPECT_NEAR(ch.kraus.ops[3](1, 0).real(), -0.31669595712689047, 1e-15);
}

TEST(BuildChannel, MatchesOuterProductAssemblyInGenericBasis) {
  const BathSpec spec{0.8, 1.2, 2.5, {1.1, -0.4}};
  const GadChannel ch = build_channel(spec);
  const oracle::Channel ref = oracle::channel(0.8, 1.2, 2.5, 1.1, -0.4);
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      const Complex want(static_cast<double>(ref.kraus[j][i].real()),
                         static_cast<double>(ref.kraus[j][i].imag()));
      EXPECT_NEAR(std::abs(ch.kraus.ops[j](i / 2, i % 2) - want), 0.0, 1e-14);
    }
  }
}

TEST(ApplyChannel, NoDissipationIsUnitaryConjugation) {
  RngStream rng = make_rng(22, 0);
  const GadChannel ch = build_channel({0.3, 0.0, 1.0, {}});
  const Matrix2& u = ch.u_evolution.matrix();
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_density_matrix(rng);
    EXPECT_LT((apply_channel(ch, rho).matrix() - u * rho.matrix() * u.adjoint()).max_abs(), 1e-15);
  }
}

TEST(ApplyChannel, GroundStatePopulationMatchesFormula) {
  for (double t : {0.0, 0.3, 1.5}) {
    const BathSpec spec{t, 0.5, 1.0, {}};
    const GadChannel ch = build_channel(spec);
    const PureState minus = spec.basis.minus();
    const double got = expectation(apply_channel(ch, DensityMatrix::pure(minus)), minus);
    EXPECT_NEAR(got, 1 - ch.params.p_plus * ch.params.gamma, 1e-14);
  }
}

TEST(ApplyChannel, ThermalStateIsStationary) {
  for (double t : {0.0, 0.1, 0.3, 1.5, 10.0}) {
    for (double g0 : {0.5, 1.0}) {
      const BathSpec spec{t, g0, 1.0, {0.7, 0.2}};
      const DensityMatrix thermal = thermal_state(spec);
      EXPECT_LT(trace_distance(apply_channel(build_channel(spec), thermal), thermal), 1e-14);
    }
  }
}

TEST(ApplyChannel, TracePreservingAndPositive) {
  RngStream rng = make_rng(23, 0);
  for (int i = 0; i < 1000; ++i) {
    const BathSpec spec{rng.uniform() * 3, rng.uniform() * 2, 0.05 + rng.uniform() * 7,
                        {rng.uniform() * 3.2, rng.uniform() * 6.3}};
    const DensityMatrix out = apply_channel(build_channel(spec), random_density_matrix(rng));
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-10);
    EXPECT_GE(out.eigenvalues().first, -1e-9);
  }
}

TEST(FixedPointFidelities, NoDampingGivesUnity) {
  const auto fp = fixed_point_fidelities(derive_params({0.7, 0.0, 3.0, {}}));
  EXPECT_EQ(fp.plus, 1.0);
  EXPECT_EQ(fp.minus, 1.0);
}

TEST(FixedPointFidelities, GroundStateExactAtZeroTemperature) {
  for (double g0 : {0.1, 0.5, 2.0}) {
    for (double tau : {0.1, 1.0, 10.0}) {
      EXPECT_EQ(fixed_point_fidelities(derive_params({0.0, g0, tau, {}})).minus, 1.0);
    }
  }
}

TEST(FixedPointFidelities, ReferencePointAndChannelCrossCheck) {
  const BathSpec spec{0.3, 0.5, 1.0, {}};
  const GadChannel ch = build_channel(spec);
  const auto fp = fixed_point_fidelities(ch.params);
  EXPECT_NEAR(fp.plus, 0.59881468295793106, 1e-14);
  EXPECT_NEAR(fp.minus, 0.98568811766882589, 1e-14);
  const PureState plus = spec.basis.plus();
  const PureState minus = spec.basis.minus();
  EXPECT_NEAR(expectation(apply_channel(ch, DensityMatrix::pure(plus)), plus), fp.plus, 1e-14);
  EXPECT_NEAR(expectation(apply_channel(ch, DensityMatrix::pure(minus)), minus), fp.minus, 1e-14);
}

TEST(FixedPointFidelities, GroundStateNeverWorse) {
  for (double t : {0.0, 0.05, 0.3, 1.0, 5.0, 100.0}) {
    for (double g0 : {0.0, 0.2, 1.0}) {
      const auto p = derive_params({t, g0, 1.0, {}});
      const auto fp = fixed_point_fidelities(p);
      EXPECT_GE(fp.minus, fp.plus);
      if (p.gamma > 0.0 && t < 10.0) EXPECT_GT(fp.minus, fp.plus);
    }
  }
}

TEST(NondissipativeApply, ZeroTimeIsIdentity) {
  RngStream rng = make_rng(24, 0);
  const DensityMatrix rho = random_density_matrix(rng);
  EXPECT_LT((nondissipative_apply(0.0, {}, rho).matrix() - rho.matrix()).max_abs(), 1e-16);
}

TEST(NondissipativeApply, PeriodicInTwoPi) {
  RngStream rng = make_rng(25, 0);
  for (int i = 0; i < 200; ++i) {
    const double tau = rng.uniform() * 12;
    const EigenBasis b{rng.uniform() * 3.2, rng.uniform() * 6.3};
    const DensityMatrix rho = random_density_matrix(rng);
    EXPECT_LT((nondissipative_apply(tau, b, rho).matrix() -
               nondissipative_apply(tau + kTwoPi, b, rho).matrix()).max_abs(),
              1e-12);
  }
}

TEST(NondissipativeApply, EqualsKrausChannelWithoutDamping) {
  RngStream rng = make_rng(26, 0);
  for (int i = 0; i < 200; ++i) {
    const BathSpec spec{rng.uniform() * 2, 0.0, 0.01 + rng.uniform() * 12,
                        {rng.uniform() * 3.2, rng.uniform() * 6.3}};
    const DensityMatrix rho = random_density_matrix(rng);
    EXPECT_LT((nondissipative_apply(spec.tau_dimless, spec.basis, rho).matrix() -
               apply_channel(build_channel(spec), rho).matrix()).max_abs(),
              1e-10);
  }
}

TEST(ApplyChannel, AgreesWithLindbladIntegration) {
  RngStream rng = make_rng(27, 0);
  const std::vector<double> temps{0.0, 0.2, 0.5, 1.5, 5.0};
  const std::vector<double> rates{0.0, 0.25, 0.5, 1.0, 1.5};
  const std::vector<double> taus{0.1, 0.5, 1.0, 3.0, kTwoPi};
  for (double t : temps) {
    for (double g0 : rates) {
      for (double tau : taus) {
        const BathSpec spec{t, g0, tau, {}};
        const GadChannel ch = build_channel(spec);
        for (int s = 0; s < 20; ++s) {
          const DensityMatrix rho = random_density_matrix(rng);
          EXPECT_LT(trace_distance(apply_channel(ch, rho), integrate_lindblad(rho, spec)), 1e-6);
        }
      }
    }
  }
}

}  // namespace
}  // namespace qrl
