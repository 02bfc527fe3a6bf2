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

#include <functional>
#include <span>
#include <vector>

namespace qtcert {

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule of order n (thread safe; rules are built once and never
/// freed).
const GaussLegendreRule &gauss_legendre(int n);

struct QuadratureEstimate {
    double value = 0.0;
    int order = 0;
};

/// ∫_{-1}^{1} f(z) dz by Gauss-Legendre in θ with z = cos θ, doubling the
/// order from `min_order` until successive estimates differ by less than
/// `tol`. Endpoint square-root behaviour in z is analytic in θ. Throws
/// Error(not_converged) past `max_order`.
QuadratureEstimate integrate_polar(const std::function<double(double)> &f, double tol = 1e-9, int min_order = 64,
                                   int max_order = 1024);

}  // namespace qtcert
