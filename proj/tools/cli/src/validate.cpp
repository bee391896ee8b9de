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

#include "qrl/cli/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "qrl/lindblad.hpp"
#include "qrl/rng.hpp"
#include "qrl/sampling.hpp"

namespace qrl::cli {

namespace {

// Worst |<s|E(|s><s|)|s> - formula| over s = |+>, |->.
double fixed_point_error(const GadChannel& ch) {
  const EigenBasis& b = ch.spec.basis;
  const auto fp = fixed_point_fidelities(ch.params);
  const double plus = expectation(apply_channel(ch, DensityMatrix::pure(b.plus())), b.plus());
  const double minus = expectation(apply_channel(ch, DensityMatrix::pure(b.minus())), b.minus());
  return std::max(std::abs(plus - fp.plus), std::abs(minus - fp.minus));
}

DensityMatrix thermal_state(const GadChannel& ch) {
  const EigenBasis& b = ch.spec.basis;
  const double p = ch.params.p_plus;
  return DensityMatrix::from_matrix(p * Matrix2::outer(b.plus(), b.plus()) +
                                    (1.0 - p) * Matrix2::outer(b.minus(), b.minus()));
}

}  // namespace

std::vector<BathSpec> validation_grid() {
  std::vector<BathSpec> grid;
  for (const double t : {0.0, 0.1, 0.3, 1.5, 10.0}) {
    for (const double g0 : {0.0, 0.5, 1.0}) {
      for (const double tau : {0.1, 1.0, 2 * std::numbers::pi}) grid.push_back({t, g0, tau, {}});
    }
  }
  return grid;
}

std::vector<ValidationCheck> run_validation(const ValidationOptions& opts) {
  ValidationCheck completeness{"Kraus completeness", 0.0, 1e-10};
  ValidationCheck fixed_points{"fixed-point fidelities vs channel", 0.0, 1e-10};
  ValidationCheck balance{"detailed balance", 0.0, 1e-12};
  ValidationCheck stationary{"thermal state stationary", 0.0, 1e-10};
  ValidationCheck oracle{"channel vs Lindblad RK4 (trace distance)", 0.0, 1e-6};
  ValidationCheck periodic{"nondissipative period 2 pi", 0.0, 1e-12};
  ValidationCheck closed_form{"nondissipative closed form vs Kraus", 0.0, 1e-10};

  const IntegratorConfig rk4{opts.rk4_steps, false};
  std::uint64_t stream = 0;
  for (const BathSpec& spec : validation_grid()) {
    const GadChannel ch = build_channel(spec);

    completeness.worst = std::max(completeness.worst, ch.kraus.completeness_defect());
    ++completeness.cases;

    fixed_points.worst = std::max(fixed_points.worst, fixed_point_error(ch));
    ++fixed_points.cases;

    if (spec.gamma0_dimless > 0.0 && spec.t_dimless > 0.0) {
      const auto& p = ch.params;
      balance.worst = std::max(balance.worst,
                               std::abs(p.p_plus - p.gamma_minus / (p.gamma_plus + p.gamma_minus)));
      ++balance.cases;
    }

    const DensityMatrix thermal = thermal_state(ch);
    stationary.worst = std::max(stationary.worst, trace_distance(apply_channel(ch, thermal), thermal));
    ++stationary.cases;

    RngStream rng = make_rng(opts.seed, stream++);
    const BathSpec closed{spec.t_dimless, 0.0, spec.tau_dimless, spec.basis};
    const GadChannel unitary_ch = build_channel(closed);
    for (int s = 0; s < opts.states_per_point; ++s) {
      const DensityMatrix rho0 = random_density_matrix(rng);
      const DensityMatrix exact = apply_channel(ch, rho0);
      oracle.worst = std::max(oracle.worst, trace_distance(exact, integrate_lindblad(rho0, spec, rk4)));
      ++oracle.cases;

      const DensityMatrix a = nondissipative_apply(spec.tau_dimless, spec.basis, rho0);
      const DensityMatrix b =
          nondissipative_apply(spec.tau_dimless + 2 * std::numbers::pi, spec.basis, rho0);
      periodic.worst = std::max(periodic.worst, (a.matrix() - b.matrix()).max_abs());
      ++periodic.cases;

      closed_form.worst =
          std::max(closed_form.worst, (a.matrix() - apply_channel(unitary_ch, rho0).matrix()).max_abs());
      ++closed_form.cases;
    }
  }
  return {completeness, fixed_points, balance, stationary, oracle, periodic, closed_form};
}

void print_validation_table(std::ostream& out, const std::vector<ValidationCheck>& checks) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-44s %6s %12s %10s  %s\n", "check", "cases", "worst",
                "tolerance", "result");
  out << line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof(line), "%-44s %6d %12.3e %10.1e  %s\n", c.name.c_str(), c.cases,
                  c.worst, c.tolerance, c.passed() ? "PASS" : "FAIL");
    out << line;
  }
}

}  // namespace qrl::cli
