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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qrl/channel.hpp"

namespace qrl::cli {

struct ValidationOptions {
  int rk4_steps = 2000;
  int states_per_point = 20;
  std::uint64_t seed = 1;
};

struct ValidationCheck {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  int cases = 0;

  bool passed() const { return worst <= tolerance; }
};

// T in {0, 0.1, 0.3, 1.5, 10} x Gamma0 in {0, 0.5, 1} x tau in {0.1, 1, 2 pi}.
std::vector<BathSpec> validation_grid();

std::vector<ValidationCheck> run_validation(const ValidationOptions& opts);

void print_validation_table(std::ostream& out, const std::vector<ValidationCheck>& checks);

}  // namespace qrl::cli
