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

// Thermal generalized amplitude damping channel of a qubit with Hamiltonian
// H = (|+><+| - |-><-|)/2 in units of hbar*omega. All rates, times and
// temperatures are dimensionless: T = kB T / (hbar omega), Gamma0 / omega,
// tau = omega tau.

#include <array>

#include "qrl/qalg.hpp"

namespace qrl {

struct BathSpec {
  double t_dimless = 0.3;
  double gamma0_dimless = 0.0;
  double tau_dimless = 1.0;
  EigenBasis basis{};

  // Throws InvalidArgument on non-finite values, negative temperature or
  // decay rate, or non-positive tau.
  void validate() const;
};

struct DerivedChannelParams {
  double p_plus = 0.0;       // thermal population of |+>
  double gamma = 0.0;        // 1 - exp(-gamma_total * tau)
  double gamma_plus = 0.0;   // decay rate |+> -> |->
  double gamma_minus = 0.0;  // excitation rate |-> -> |+>
  double gamma_total = 0.0;  // gamma_plus + gamma_minus
};

// Kraus operators E0..E3 expressed in the computational basis.
struct KrausSet {
  std::array<Matrix2, 4> ops{};

  // max |sum_j E_j^dagger E_j - I| entry
  double completeness_defect() const;
};

struct GadChannel {
  BathSpec spec;
  DerivedChannelParams params;
  KrausSet kraus;
  UnitaryMatrix u_evolution;
  // U E_j, cached for apply_channel.
  std::array<Matrix2, 4> evolved_kraus{};
};

DerivedChannelParams derive_params(const BathSpec& spec);

GadChannel build_channel(const BathSpec& spec);

// sum_j U E_j rho E_j^dagger U^dagger
DensityMatrix apply_channel(const GadChannel& ch, const DensityMatrix& rho0);

struct FixedPointFidelities {
  double plus = 1.0;   // <+|E(|+><+|)|+> = 1 - (1 - p+) gamma
  double minus = 1.0;  // <-|E(|-><-|)|-> = 1 - p+ gamma
};

FixedPointFidelities fixed_point_fidelities(const DerivedChannelParams& params);

// Closed form of the dissipation-free channel exp(-i tau H) rho exp(i tau H),
// written with S = |+><+| - |-><-|:
//   (rho + S rho S)/2 + cos(tau)(rho - S rho S)/2 + i sin(tau) [rho, S]/2
DensityMatrix nondissipative_apply(double tau_dimless, const EigenBasis& basis,
                                   const DensityMatrix& rho0);

}  // namespace qrl
