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

#include "qrl/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qrl {

namespace {

struct Direction {
  double x, y, z;
};

Direction random_direction(RngStream& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double azimuth = 2.0 * std::numbers::pi * rng.uniform();
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {rho * std::cos(azimuth), rho * std::sin(azimuth), z};
}

}  // namespace

PureState random_pure_state(RngStream& rng) {
  const Direction d = random_direction(rng);
  const double theta = std::acos(d.z);
  const double phi = std::atan2(d.y, d.x);
  return {std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2)};
}

DensityMatrix random_density_matrix(RngStream& rng) {
  const Direction d = random_direction(rng);
  const double r = std::cbrt(rng.uniform());
  return density_from_bloch(r * d.x, r * d.y, r * d.z);
}

DensityMatrix density_from_bloch(double rx, double ry, double rz) {
  const Matrix2 m{Complex{0.5 * (1.0 + rz)}, Complex{0.5 * rx, -0.5 * ry},
                  Complex{0.5 * rx, 0.5 * ry}, Complex{0.5 * (1.0 - rz)}};
  return DensityMatrix::from_matrix(m);
}

}  // namespace qrl
