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

#include <stdexcept>
#include <string>

namespace qrl {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied scalar or configuration is out of its domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A state or density matrix violates its invariants (norm, Hermiticity,
// trace, positivity).
class InvalidState : public Error {
 public:
  using Error::Error;
};

// A matrix is too close to singular for the requested operation.
class DegenerateMatrix : public Error {
 public:
  using Error::Error;
};

// The Lindblad integrator drifted beyond its trace tolerance; raise n_steps.
class IntegrationAccuracyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qrl
