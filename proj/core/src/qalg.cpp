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

#include "qrl/qalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrl/errors.hpp"

namespace qrl {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_normalized(const PureState& s, const char* what) {
  if (!s.is_normalized()) {
    throw InvalidState(std::string(what) + ": state is not normalized (norm^2 = " +
                       std::to_string(s.norm_squared()) + ")");
  }
}

}  // namespace

bool PureState::is_normalized(double tol) const {
  const double n = norm_squared();
  return std::isfinite(n) && std::abs(n - 1.0) <= tol;
}

Complex inner_product(const PureState& a, const PureState& b) {
  return std::conj(a.a0) * b.a0 + std::conj(a.a1) * b.a1;
}

Matrix2 Matrix2::outer(const PureState& ket, const PureState& bra) {
  return {ket.a0 * std::conj(bra.a0), ket.a0 * std::conj(bra.a1),
          ket.a1 * std::conj(bra.a0), ket.a1 * std::conj(bra.a1)};
}

Matrix2 Matrix2::adjoint() const {
  return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
}

double Matrix2::max_abs() const {
  double m = 0.0;
  for (const auto& z : e_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix2::hermiticity_defect() const { return (*this - adjoint()).max_abs(); }

Matrix2& Matrix2::operator+=(const Matrix2& o) {
  for (int i = 0; i < 4; ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix2& Matrix2::operator-=(const Matrix2& o) {
  for (int i = 0; i < 4; ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix2& Matrix2::operator*=(Complex s) {
  for (auto& z : e_) z *= s;
  return *this;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

PureState operator*(const Matrix2& m, const PureState& v) {
  return {m(0, 0) * v.a0 + m(0, 1) * v.a1, m(1, 0) * v.a0 + m(1, 1) * v.a1};
}

Matrix2 commutator(const Matrix2& a, const Matrix2& b) { return a * b - b * a; }

Matrix2 anticommutator(const Matrix2& a, const Matrix2& b) { return a * b + b * a; }

std::pair<double, double> hermitian_eigenvalues(const Matrix2& m) {
  const double d0 = m(0, 0).real();
  const double d1 = m(1, 1).real();
  const Complex off = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double mean = 0.5 * (d0 + d1);
  const double radius = std::hypot(0.5 * (d0 - d1), std::abs(off));
  return {mean - radius, mean + radius};
}

UnitaryMatrix::UnitaryMatrix(const Matrix2& m, double tol) : m_(m) {
  const double defect = unitarity_defect();
  if (!(defect <= tol)) {
    throw InvalidArgument("matrix is not unitary (max |U^dagger U - I| = " +
                          std::to_string(defect) + ")");
  }
}

double UnitaryMatrix::unitarity_defect() const {
  return (m_.adjoint() * m_ - Matrix2::identity()).max_abs();
}

DensityMatrix DensityMatrix::from_matrix(const Matrix2& m, double tol) {
  const double herm = m.hermiticity_defect();
  if (!(herm <= tol)) {
    throw InvalidState("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const Complex tr = m.trace();
  if (!(std::abs(tr - 1.0) <= tol)) {
    throw InvalidState("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  const auto [lo, hi] = hermitian_eigenvalues(m);
  if (!(lo >= -tol)) {
    throw InvalidState("density matrix has negative eigenvalue " + std::to_string(lo));
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  require_normalized(psi, "DensityMatrix::pure");
  return DensityMatrix(Matrix2::outer(psi, psi));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  const auto [lo, hi] = hermitian_eigenvalues(a.matrix() - b.matrix());
  return 0.5 * (std::abs(lo) + std::abs(hi));
}

PureState EigenBasis::plus() const {
  return {std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2)};
}

PureState EigenBasis::minus() const {
  return {std::sin(theta / 2), -std::polar(1.0, phi) * std::cos(theta / 2)};
}

UnitaryMatrix pauli(Axis axis) {
  switch (axis) {
    case Axis::x:
      return UnitaryMatrix(Matrix2{0.0, 1.0, 1.0, 0.0});
    case Axis::y:
      return UnitaryMatrix(Matrix2{0.0, -kI, kI, 0.0});
    case Axis::z:
      return UnitaryMatrix(Matrix2{1.0, 0.0, 0.0, -1.0});
  }
  throw InvalidArgument("unknown Pauli axis");
}

UnitaryMatrix rotation_gate(Axis axis, double angle) {
  if (!std::isfinite(angle)) throw InvalidArgument("rotation angle must be finite");
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  // cos(a/2) I - i sin(a/2) sigma
  switch (axis) {
    case Axis::x:
      return UnitaryMatrix(Matrix2{c, -kI * s, -kI * s, c});
    case Axis::y:
      return UnitaryMatrix(Matrix2{c, -s, s, c});
    case Axis::z:
      return UnitaryMatrix(Matrix2{Complex{c, -s}, 0.0, 0.0, Complex{c, s}});
  }
  throw InvalidArgument("unknown rotation axis");
}

UnitaryMatrix composite_rotation(double ax, double az, double ay) {
  return rotation_gate(Axis::y, ay) * rotation_gate(Axis::z, az) * rotation_gate(Axis::x, ax);
}

UnitaryMatrix eigenbasis_unitary(const EigenBasis& basis) {
  const PureState p = basis.plus();
  const PureState m = basis.minus();
  return UnitaryMatrix(Matrix2{p.a0, m.a0, p.a1, m.a1});
}

UnitaryMatrix reunitarize(const Matrix2& m) {
  // For 2x2, M = W P with P = sqrt(M^dagger M) gives
  //   W = (M + |det M| (M^dagger)^{-1}) / sqrt(tr(M^dagger M) + 2 |det M|).
  const Complex det = m.determinant();
  const double abs_det = std::abs(det);
  if (!(abs_det > 1e-12)) {
    throw DegenerateMatrix("reunitarize: matrix is singular (|det| = " + std::to_string(abs_det) +
                           ")");
  }
  const Matrix2 adj{m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)};
  const Matrix2 inv_adjoint = adj.adjoint() * (1.0 / std::conj(det));
  const double frob2 = (m.adjoint() * m).trace().real();
  const double scale = std::sqrt(frob2 + 2.0 * abs_det);
  return UnitaryMatrix(UnitaryMatrix::Trusted{}, (m + inv_adjoint * abs_det) * (1.0 / scale));
}

double overlap_fidelity(const PureState& a, const PureState& b) {
  require_normalized(a, "overlap_fidelity");
  require_normalized(b, "overlap_fidelity");
  return std::clamp(std::abs(inner_product(a, b)), 0.0, 1.0);
}

double expectation(const DensityMatrix& rho, const PureState& psi) {
  require_normalized(psi, "expectation");
  const Complex value = inner_product(psi, rho.matrix() * psi);
  return std::clamp(value.real(), 0.0, 1.0);
}

}  // namespace qrl
