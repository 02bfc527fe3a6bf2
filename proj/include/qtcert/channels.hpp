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

#include <string_view>
#include <optional>
#include <vector>

#include "qtcert/bloch.hpp"

namespace qtcert {

/// Qubit channel in affine Bloch form t -> A t + b, with an optional Kraus
/// representation of the same map.
struct AffineChannel {
    Mat3 matrix = Mat3::identity();
    BlochVector shift;
    std::vector<Mat2c> kraus;

    BlochVector apply(const BlochVector &t) const { return matrix * t + shift; }
};

/// ρ -> Σ K ρ K† for a single-qubit density matrix. Throws
/// Error(invalid_argument) when the channel carries no Kraus operators.
Mat2c apply_kraus(const AffineChannel &channel, const Mat2c &rho);

/// (ℰ ⊗ ℱ)(ρ) on a two-qubit density matrix using both Kraus sets.
DensityMatrix4 apply_local_kraus(const AffineChannel &e, const AffineChannel &f, const DensityMatrix4 &rho);

/// ρ -> qρ + (1-q)𝟙/2. Kraus set is the Pauli mixture
/// {√((1+3q)/4) 𝟙, √((1-q)/4) σ_x, σ_y, σ_z}.
AffineChannel depolarizing(double q);

/// Decay towards |0>: A = diag(√q, √q, q), b = (1-q) k.
AffineChannel amplitude_damping(double q);

/// Decay towards |1>: A = diag(√q, √q, q), b = -(1-q) k.
AffineChannel mirrored_amplitude_damping(double q);

/// Fano form of (ℰ ⊗ ℱ)(|Φ_k><Φ_k|) from the affine data alone.
TwoQubitFano resource_from_local_noises(const AffineChannel &e, const AffineChannel &f, int bell_index);

enum class ResourceKind {
    werner,  // depolarized |Φ_k>, p|Φ_k><Φ_k| + (1-p)𝟙/4
    ad_mad,  // amplitude damping on A, mirrored damping on B, from |Φ_1>
    two_ad,  // amplitude damping on both qubits, from |Φ_1>
};

struct ResourceFamily {
    ResourceKind kind = ResourceKind::werner;
    int bell_index = 1;  // only meaningful for werner
};

std::string_view resource_name(ResourceKind kind);
std::optional<ResourceKind> parse_resource(std::string_view name);

/// Resource state of the family at noise parameter p ∈ [0, 1].
TwoQubitFano build_resource(const ResourceFamily &family, double p);

}  // namespace qtcert
