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

#include <cstdint>
#include <vector>

#include "qtcert/measures.hpp"

namespace qtcert {

/// One element E = (c²/2)(1 + s·σ) of a qubit POVM.
struct PovmElement {
    double weight;  // c²
    BlochVector direction;
};

/// Qubit POVM satisfying Σ c² = 2 and Σ c² s = 0 (both to 1e-10).
class Povm {
public:
    /// Throws Error(invalid_argument) when the completeness conditions fail,
    /// a weight is negative or a direction lies outside the Bloch ball.
    explicit Povm(std::vector<PovmElement> elements);

    /// Von Neumann measurement along ±axis (axis normalized internally).
    static Povm projective(const BlochVector &axis);

    const std::vector<PovmElement> &elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

private:
    std::vector<PovmElement> elements_;
};

/// Bloch vector Bob prepares for each POVM outcome.
struct PreparationStrategy {
    std::vector<BlochVector> outputs;
};

struct ThresholdResult {
    MeasureId measure;
    double r_opt;
    double threshold;
};

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

/// A_d(r) = ∫ g_d(z, r) dz over [-1, 1].
double a_integral(MeasureId m, double r);

/// B_d(r) = ∫ g_d(z, r) z dz over [-1, 1].
double b_integral(MeasureId m, double r);

/// Closed-form average distance of a measure-and-prepare protocol,
/// Σ (c²/4)[A_d(r_i) + (r_i·s_i / r_i) B_d(r_i)]. The B term is dropped for a
/// maximally mixed preparation (r_i = 0).
double mpp_average(MeasureId m, const Povm &povm, const PreparationStrategy &prep);

/// Optimal preparation purity: argmin (argmax for overlaps) over 0 < r <= 1
/// of A_d(r) + B_d(r). Grid scan at step 1e-3 then golden section to 1e-6;
/// a boundary optimum is returned as exactly 1.
double optimal_r(MeasureId m);

/// Best classical average ½(A_d + B_d) at r_opt. Memoized per measure.
ThresholdResult classical_threshold(MeasureId m);

/// Monte-Carlo simulation of the protocol: Haar-uniform pure input, outcome
/// drawn with p_i = (c²/2)(1 + t·s_i), score d(t, r_i).
MonteCarloEstimate simulate_mpp(MeasureId m, const Povm &povm, const PreparationStrategy &prep,
                                std::uint64_t samples, std::uint64_t seed);

}  // namespace qtcert
