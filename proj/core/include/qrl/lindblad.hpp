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

// Fixed-step RK4 integration of the thermal Lindblad master equation. Used as
// an independent check on the closed-form channel, never in the learning loop.

#include <vector>

#include "qrl/channel.hpp"
#include "qrl/qalg.hpp"

namespace qrl {

struct IntegratorConfig {
  int n_steps = 2000;
  bool record_trace_drift = false;
};

struct IntegrationReport {
  DensityMatrix rho;
  // |tr(rho) - 1| at t = tau, before renormalization.
  double trace_drift = 0.0;
  // Largest |rho - rho^dagger| entry seen at any step.
  double max_hermiticity_defect = 0.0;
  // Per-step |tr(rho) - 1|, filled only when record_trace_drift is set.
  std::vector<double> drift_history;
};

// Time derivative of rho:
//   -i[H, rho] + sum_{j=+-} G_j (s_j^dagger rho s_j - {s_j s_j^dagger, rho}/2)
// with s_- = |-><+| = s_+^dagger.
Matrix2 lindblad_rhs(const Matrix2& rho, const BathSpec& spec, const DerivedChannelParams& params);

// Integrates from 0 to spec.tau_dimless. Throws InvalidArgument if
// n_steps < 10 and IntegrationAccuracyError if the trace drifts by >= 1e-8.
IntegrationReport integrate_lindblad_report(const DensityMatrix& rho0, const BathSpec& spec,
                                            const IntegratorConfig& cfg = {});

DensityMatrix integrate_lindblad(const DensityMatrix& rho0, const BathSpec& spec,
                                 const IntegratorConfig& cfg = {});

}  // namespace qrl
