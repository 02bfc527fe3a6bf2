// Copyright 2026 The qtcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>

#include "qtcert/linalg.hpp"

namespace qtcert {

/// Bloch vector of a qubit density operator ½(1 + t·σ).
using BlochVector = Vec3;

/// 3x3 correlation matrix r_ij = Tr(ρ σ_i ⊗ σ_j).
using CorrelationMatrix = Mat3;

/// Explicit two-qubit density matrix in the |00>,|01>,|10>,|11> basis.
using DensityMatrix4 = Mat4c;

inline constexpr double kPhysicalNormSlack = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;

inline bool is_physical(const BlochVector &t, double slack = kPhysicalNormSlack) { return norm(t) <= 1.0 + slack; }

/// Fano form of a two-qubit state: local Bloch vectors of A and B plus the
/// correlation matrix.
struct TwoQubitFano {
    BlochVector bloch_a;
    BlochVector bloch_b;
    CorrelationMatrix corr;
};

/// Bell correlation matrix w_i for |Φ_1>..|Φ_4> = (|00>±|11>)/√2, (|01>±|10>)/√2.
/// Throws Error(out_of_range) for i outside 1..4.
Mat3 bell_correlation_matrix(int i);

/// ρ = ¼(1⊗1 + r_A·σ⊗1 + 1⊗r_B·σ + Σ r_ij σ_i⊗σ_j).
DensityMatrix4 assemble_density(const TwoQubitFano &fano);

/// Inverse of assemble_density: reads the Pauli expectations back.
TwoQubitFano fano_from_density(const DensityMatrix4 &rho);

/// Transpose of the 2x2 blocks belonging to subsystem A (the first qubit).
DensityMatrix4 partial_transpose_a(const DensityMatrix4 &rho);

/// Ascending eigenvalues of a Hermitian 4x4 matrix, via cyclic Jacobi on
/// the 8x8 real embedding [[Re, -Im], [Im, Re]] (each eigenvalue appears
/// twice there). Throws Error(invalid_argument) when the input deviates from
/// Hermitian by more than 1e-10 and Error(not_converged) when Jacobi stalls.
std::array<double, 4> hermitian_eigenvalues(const DensityMatrix4 &m);

/// Hermitian, unit trace and eigenvalues above kEigenvalueFloor.
bool is_physical(const TwoQubitFano &fano);

}  // namespace qtcert
