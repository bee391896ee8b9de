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

// Seeded random qubit states for property checks and validation grids.

#include "qrl/qalg.hpp"
#include "qrl/rng.hpp"

namespace qrl {

// Haar-random pure state (uniform on the Bloch sphere).
PureState random_pure_state(RngStream& rng);

// Bloch vector uniform in the unit ball.
DensityMatrix random_density_matrix(RngStream& rng);

// (I + r . sigma)/2; throws InvalidState if |r| > 1 + 1e-9.
DensityMatrix density_from_bloch(double rx, double ry, double rz);

}  // namespace qrl
