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

// Exact 2x2 complex linear algebra for a single qubit: pure states, density
// matrices, unitaries, Pauli rotations and basis changes.

#include <array>
#include <complex>
#include <numbers>
#include <utility>

namespace qrl {

using Complex = std::complex<double>;

inline constexpr double kUnitaryTolerance = 1e-9;
inline constexpr double kDensityTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-6;

// Amplitudes on the computational basis |0>, |1>. Normalization is checked by
// the operations that require it, not on construction.
struct PureState {
  Complex a0{1.0, 0.0};
  Complex a1{0.0, 0.0};

  static constexpr PureState zero() { return {Complex{1.0}, Complex{0.0}}; }
  static constexpr PureState one() { return {Complex{0.0}, Complex{1.0}}; }

  double norm_squared() const { return std::norm(a0) + std::norm(a1); }
  bool is_normalized(double tol = kNormTolerance) const;
};

// <a|b>
Complex inner_product(const PureState& a, const PureState& b);

// Dense row-major 2x2 complex matrix. Default-constructs to zero.
class Matrix2 {
 public:
  constexpr Matrix2() = default;
  constexpr Matrix2(Complex a00, Complex a01, Complex a10, Complex a11)
      : e_{a00, a01, a10, a11} {}

  static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Matrix2 diagonal(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }
  // |ket><bra|
  static Matrix2 outer(const PureState& ket, const PureState& bra);

  Complex operator()(int row, int col) const { return e_[2 * row + col]; }
  Complex& operator()(int row, int col) { return e_[2 * row + col]; }

  Matrix2 adjoint() const;
  Complex trace() const { return e_[0] + e_[3]; }
  Complex determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  // Largest entry modulus.
  double max_abs() const;
  // Largest entry modulus of (M - M^dagger).
  double hermiticity_defect() const;

  Matrix2& operator+=(const Matrix2& o);
  Matrix2& operator-=(const Matrix2& o);
  Matrix2& operator*=(Complex s);

  friend Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
  friend Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
  friend Matrix2 operator*(Matrix2 a, Complex s) { return a *= s; }
  friend Matrix2 operator*(Complex s, Matrix2 a) { return a *= s; }
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend PureState operator*(const Matrix2& m, const PureState& v);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;

 private:
  std::array<Complex, 4> e_{};
};

Matrix2 commutator(const Matrix2& a, const Matrix2& b);
Matrix2 anticommutator(const Matrix2& a, const Matrix2& b);
// Eigenvalues (ascending) of the Hermitian part (M + M^dagger)/2.
std::pair<double, double> hermitian_eigenvalues(const Matrix2& m);

// A 2x2 matrix known to satisfy U^dagger U = I within kUnitaryTolerance.
class UnitaryMatrix {
 public:
  UnitaryMatrix() : m_(Matrix2::identity()) {}
  // Throws InvalidArgument if m is not unitary within tol.
  explicit UnitaryMatrix(const Matrix2& m, double tol = kUnitaryTolerance);

  static UnitaryMatrix identity() { return {}; }

  const Matrix2& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }
  UnitaryMatrix adjoint() const { return UnitaryMatrix(Trusted{}, m_.adjoint()); }
  // max |U^dagger U - I| entry
  double unitarity_defect() const;

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(Trusted{}, a.m_ * b.m_);
  }
  friend PureState operator*(const UnitaryMatrix& u, const PureState& v) { return u.m_ * v; }

 private:
  struct Trusted {};
  UnitaryMatrix(Trusted, const Matrix2& m) : m_(m) {}
  friend UnitaryMatrix reunitarize(const Matrix2& m);

  Matrix2 m_;
};

// Hermitian, unit-trace, positive semidefinite 2x2 matrix.
class DensityMatrix {
 public:
  // |0><0|
  DensityMatrix() : m_(Matrix2::diagonal(1.0, 0.0)) {}

  // Throws InvalidState unless m is Hermitian, has unit trace and eigenvalues
  // >= -tol, all within tol.
  static DensityMatrix from_matrix(const Matrix2& m, double tol = kDensityTolerance);
  // |psi><psi|; throws InvalidState if psi is not normalized within kNormTolerance.
  static DensityMatrix pure(const PureState& psi);
  static DensityMatrix maximally_mixed() { return DensityMatrix(Matrix2::diagonal(0.5, 0.5)); }

  const Matrix2& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }
  std::pair<double, double> eigenvalues() const { return hermitian_eigenvalues(m_); }
  double purity() const;

 private:
  explicit DensityMatrix(const Matrix2& m) : m_(m) {}
  Matrix2 m_;
};

// (1/2) || a - b ||_1
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Orthonormal qubit basis
//   |+> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
//   |-> = sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>
// The default is the sigma_x eigenbasis |+-> = (|0> +- |1>)/sqrt(2).
struct EigenBasis {
  double theta = std::numbers::pi / 2;
  double phi = 0.0;

  PureState plus() const;
  PureState minus() const;
};

enum class Axis { x, y, z };

UnitaryMatrix pauli(Axis axis);

// exp(-i angle sigma_axis / 2). Throws InvalidArgument for non-finite angles.
UnitaryMatrix rotation_gate(Axis axis, double angle);

// exp(-i ay sy/2) exp(-i az sz/2) exp(-i ax sx/2); the x factor acts first.
UnitaryMatrix composite_rotation(double ax, double az, double ay);

// V with V|0> = |+> and V|1> = |->.
UnitaryMatrix eigenbasis_unitary(const EigenBasis& basis);

// Unitary factor of the polar decomposition of m. Throws DegenerateMatrix if
// |det m| <= 1e-12.
UnitaryMatrix reunitarize(const Matrix2& m);

// |<a|b>| (the modulus, not its square). Throws InvalidState if either input
// is off unit norm by more than kNormTolerance.
double overlap_fidelity(const PureState& a, const PureState& b);

// <psi|rho|psi> clamped to [0, 1].
double expectation(const DensityMatrix& rho, const PureState& psi);

}  // namespace qrl
