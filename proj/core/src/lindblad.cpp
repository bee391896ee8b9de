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

#include "qrl/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrl/errors.hpp"

namespace qrl {

namespace {

constexpr double kMaxTraceDrift = 1e-8;

struct Operators {
  Matrix2 hamiltonian;
  // s_+ = |+><-| and s_- = |-><+|
  Matrix2 s_plus;
  Matrix2 s_minus;
};

Operators make_operators(const EigenBasis& basis) {
  const PureState plus = basis.plus();
  const PureState minus = basis.minus();
  return {0.5 * (Matrix2::outer(plus, plus) - Matrix2::outer(minus, minus)),
          Matrix2::outer(plus, minus), Matrix2::outer(minus, plus)};
}

Matrix2 dissipator(const Matrix2& rho, const Matrix2& s, double rate) {
  const Matrix2 sd = s.adjoint();
  return rate * (sd * rho * s - 0.5 * anticommutator(s * sd, rho));
}

Matrix2 rhs(const Matrix2& rho, const Operators& ops, const DerivedChannelParams& params) {
  constexpr Complex minus_i{0.0, -1.0};
  return minus_i * commutator(ops.hamiltonian, rho) +
         dissipator(rho, ops.s_plus, params.gamma_plus) +
         dissipator(rho, ops.s_minus, params.gamma_minus);
}

}  // namespace

Matrix2 lindblad_rhs(const Matrix2& rho, const BathSpec& spec, const DerivedChannelParams& params) {
  return rhs(rho, make_operators(spec.basis), params);
}

IntegrationReport integrate_lindblad_report(const DensityMatrix& rho0, const BathSpec& spec,
                                            const IntegratorConfig& cfg) {
  if (cfg.n_steps < 10) throw InvalidArgument("integrator needs n_steps >= 10");
  const DerivedChannelParams params = derive_params(spec);
  const Operators ops = make_operators(spec.basis);

  IntegrationReport report;
  if (cfg.record_trace_drift) report.drift_history.reserve(cfg.n_steps);

  const double h = spec.tau_dimless / cfg.n_steps;
  Matrix2 rho = rho0.matrix();
  for (int step = 0; step < cfg.n_steps; ++step) {
    const Matrix2 k1 = rhs(rho, ops, params);
    const Matrix2 k2 = rhs(rho + (h / 2) * k1, ops, params);
    const Matrix2 k3 = rhs(rho + (h / 2) * k2, ops, params);
    const Matrix2 k4 = rhs(rho + h * k3, ops, params);
    rho += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    report.max_hermiticity_defect = std::max(report.max_hermiticity_defect, rho.hermiticity_defect());
    if (cfg.record_trace_drift) report.drift_history.push_back(std::abs(rho.trace() - 1.0));
  }

  report.trace_drift = std::abs(rho.trace() - 1.0);
  if (!(report.trace_drift < kMaxTraceDrift)) {
    throw IntegrationAccuracyError("Lindblad integration trace drift " +
                                   std::to_string(report.trace_drift) + " with " +
                                   std::to_string(cfg.n_steps) + " steps; increase n_steps");
  }

  Matrix2 hermitized = 0.5 * (rho + rho.adjoint());
  hermitized *= 1.0 / hermitized.trace().real();
  // RK4 truncation can push a pure state's smaller eigenvalue slightly below 0.
  report.rho = DensityMatrix::from_matrix(hermitized, 1e-7);
  return report;
}

DensityMatrix integrate_lindblad(const DensityMatrix& rho0, const BathSpec& spec,
                                 const IntegratorConfig& cfg) {
  return integrate_lindblad_report(rho0, spec, cfg).rho;
}

}  // namespace qrl
