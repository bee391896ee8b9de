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

#include "qrl/channel.hpp"

#include <algorithm>
#include <cmath>

#include "qrl/errors.hpp"

namespace qrl {

void BathSpec::validate() const {
  if (!std::isfinite(t_dimless) || !std::isfinite(gamma0_dimless) ||
      !std::isfinite(tau_dimless) || !std::isfinite(basis.theta) || !std::isfinite(basis.phi)) {
    throw InvalidArgument("bath parameters must be finite");
  }
  if (t_dimless < 0.0) throw InvalidArgument("temperature must be >= 0");
  if (gamma0_dimless < 0.0) throw InvalidArgument("decay rate must be >= 0");
  if (!(tau_dimless > 0.0)) throw InvalidArgument("evolution time must be > 0");
}

double KrausSet::completeness_defect() const {
  Matrix2 sum;
  for (const auto& e : ops) sum += e.adjoint() * e;
  return (sum - Matrix2::identity()).max_abs();
}

DerivedChannelParams derive_params(const BathSpec& spec) {
  spec.validate();
  DerivedChannelParams out;
  const double g0 = spec.gamma0_dimless;
  if (spec.t_dimless == 0.0) {
    out.p_plus = 0.0;
    out.gamma_plus = g0;
    out.gamma_minus = 0.0;
  } else {
    // x = hbar omega / (kB T); exp(-x) underflows harmlessly to 0.
    const double x = 1.0 / spec.t_dimless;
    const double boltzmann = std::exp(-x);
    out.p_plus = boltzmann / (1.0 + boltzmann);
    out.gamma_plus = g0 / -std::expm1(-x);
    out.gamma_minus = g0 / std::expm1(x);
  }
  out.gamma_total = out.gamma_plus + out.gamma_minus;
  out.gamma = std::clamp(-std::expm1(-out.gamma_total * spec.tau_dimless), 0.0, 1.0);
  return out;
}

GadChannel build_channel(const BathSpec& spec) {
  GadChannel ch;
  ch.spec = spec;
  ch.params = derive_params(spec);

  const double p = ch.params.p_plus;
  const double g = ch.params.gamma;
  const double keep = std::sqrt(1.0 - g);

  // Eigenbasis representation: index 0 is |+>, index 1 is |->.
  const Matrix2 sigma_plus{0.0, 1.0, 0.0, 0.0};   // |+><-|
  const Matrix2 sigma_minus{0.0, 0.0, 1.0, 0.0};  // |-><+|
  const std::array<Matrix2, 4> eigen_ops{
      std::sqrt(p) * Matrix2::diagonal(1.0, keep),
      std::sqrt(p * g) * sigma_plus,
      std::sqrt(1.0 - p) * Matrix2::diagonal(keep, 1.0),
      std::sqrt((1.0 - p) * g) * sigma_minus,
  };

  const UnitaryMatrix v = eigenbasis_unitary(spec.basis);
  const Matrix2& vm = v.matrix();
  const Matrix2 vd = vm.adjoint();
  for (std::size_t j = 0; j < eigen_ops.size(); ++j) ch.kraus.ops[j] = vm * eigen_ops[j] * vd;

  const double half = spec.tau_dimless / 2;
  const Matrix2 phases = Matrix2::diagonal(std::polar(1.0, -half), std::polar(1.0, half));
  ch.u_evolution = UnitaryMatrix(vm * phases * vd);

  for (std::size_t j = 0; j < ch.kraus.ops.size(); ++j) {
    ch.evolved_kraus[j] = ch.u_evolution.matrix() * ch.kraus.ops[j];
  }
  return ch;
}

DensityMatrix apply_channel(const GadChannel& ch, const DensityMatrix& rho0) {
  Matrix2 out;
  for (const auto& k : ch.evolved_kraus) out += k * rho0.matrix() * k.adjoint();
  return DensityMatrix::from_matrix(out);
}

FixedPointFidelities fixed_point_fidelities(const DerivedChannelParams& params) {
  return {std::clamp(1.0 - (1.0 - params.p_plus) * params.gamma, 0.0, 1.0),
          std::clamp(1.0 - params.p_plus * params.gamma, 0.0, 1.0)};
}

DensityMatrix nondissipative_apply(double tau_dimless, const EigenBasis& basis,
                                   const DensityMatrix& rho0) {
  if (!std::isfinite(tau_dimless)) throw InvalidArgument("evolution time must be finite");
  const Matrix2 s = Matrix2::outer(basis.plus(), basis.plus()) -
                    Matrix2::outer(basis.minus(), basis.minus());
  const Matrix2& rho = rho0.matrix();
  const Matrix2 srs = s * rho * s;
  const Matrix2 out = 0.5 * (rho + srs) + (0.5 * std::cos(tau_dimless)) * (rho - srs) +
                      Complex{0.0, 0.5 * std::sin(tau_dimless)} * commutator(rho, s);
  return DensityMatrix::from_matrix(out);
}

}  // namespace qrl
