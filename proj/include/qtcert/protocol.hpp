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
#include <cstdint>

#include "qtcert/classical_mpp.hpp"
#include "qtcert/measures.hpp"

namespace qtcert {

/// Bob's corrections: one proper rotation of the Bloch sphere per Bell
/// outcome (index 0 holds outcome 1).
class BobStrategy {
public:
    /// Throws Error(invalid_argument) unless every matrix is a rotation to
    /// 1e-12.
    explicit BobStrategy(const std::array<Mat3, 4> &rotations);

    const Mat3 &rotation(int outcome) const { return rotations_.at(static_cast<std::size_t>(outcome - 1)); }
    const std::array<Mat3, 4> &rotations() const noexcept { return rotations_; }

private:
    std::array<Mat3, 4> rotations_;
};

struct ProtocolOutcome {
    double probability = 0.0;
    BlochVector output;
    bool defined = true;  // false when probability is zero
};

/// Outcome probabilities p_i = (1 + t·(w_i r_A))/4 and corrected Bob states
/// t_i = R_i (r_B + (w_i r)ᵀ t)/(4 p_i) for a pure input t. Zero-probability
/// outcomes are flagged undefined with a zero output.
std::array<ProtocolOutcome, 4> protocol_outcomes(const TwoQubitFano &resource, const BobStrategy &strategy,
                                                 const BlochVector &input);

/// Sphere average of Σ_i p_i d(t, t_i) over Haar-uniform pure inputs.
/// Product rule: Gauss-Legendre in cos θ times the trapezoid rule in φ,
/// orders doubled from (64, 128) until the change drops below `tol`.
/// Throws Error(not_converged) past (2048, 4096).
double average_distance(MeasureId m, const TwoQubitFano &resource, const BobStrategy &strategy, double tol = 1e-7);

/// ½(1 + Tr 𝔸 / 3) with 𝔸 = ¼ Σ R_i rᵀ w_iᵀ.
double avg_fidelity_closed(const TwoQubitFano &resource, const BobStrategy &strategy);

/// r = O₁ diag(d) O₂ᵀ with O₁, O₂ proper rotations.
struct CanonicalDecomposition {
    Mat3 o1;
    Vec3 diagonal;
    Mat3 o2;
};

CanonicalDecomposition canonical_decomposition(const CorrelationMatrix &corr);

/// Fidelity-optimal rotations R_i = w_i O₁ w_l O₂ᵀ, with l chosen by direct
/// evaluation of avg_fidelity_closed. Candidates tied within 1e-12 go to the
/// standard correction (O₁ w_l O₂ᵀ = w_1), else to the smallest trace.
BobStrategy optimal_rotations_fidelity(const TwoQubitFano &resource);

/// R_i = w_i w_k: optimal for every measure on a Werner resource built on
/// |Φ_k>.
BobStrategy werner_optimal_rotations(int bell_index);

/// Monte-Carlo estimate of average_distance, Rao-Blackwellized over the four
/// outcomes.
MonteCarloEstimate simulate_protocol(MeasureId m, const TwoQubitFano &resource, const BobStrategy &strategy,
                                     std::uint64_t samples, std::uint64_t seed);

}  // namespace qtcert
