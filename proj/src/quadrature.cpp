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

#include "qtcert/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "qtcert/error.hpp"

namespace qtcert {
namespace {

GaussLegendreRule build_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration from the Tricomi initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussLegendreRule &gauss_legendre(int n) {
    if (n < 1) {
        throw Error(ErrorCode::invalid_argument, "Gauss-Legendre order must be positive");
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[n];
    if (!slot) {
        slot = std::make_unique<GaussLegendreRule>(build_rule(n));
    }
    return *slot;
}

QuadratureEstimate integrate_polar(const std::function<double(double)> &f, double tol, int min_order,
                                   int max_order) {
    auto estimate = [&f](int n) {
        const auto &rule = gauss_legendre(n);
        const double half_pi = 0.5 * std::numbers::pi;
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double theta = half_pi * (rule.nodes[i] + 1.0);
            s += rule.weights[i] * f(std::cos(theta)) * std::sin(theta);
        }
        return half_pi * s;
    };

    double previous = estimate(min_order);
    for (int n = 2 * min_order; n <= max_order; n *= 2) {
        const double current = estimate(n);
        if (std::abs(current - previous) < tol) {
            return {current, n};
        }
        previous = current;
    }
    throw Error(ErrorCode::not_converged,
                "quadrature did not reach tolerance " + std::to_string(tol) + " by order " + std::to_string(max_order));
}

}  // namespace qtcert
