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

#include "qtcert/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <string>

#include "qtcert/error.hpp"

namespace qtcert {

double negativity(const TwoQubitFano &resource) {
    const DensityMatrix4 rho = assemble_density(resource);
    if (hermitian_eigenvalues(rho)[0] < kEigenvalueFloor) {
        throw Error(ErrorCode::non_physical, "negativity of an unphysical state");
    }
    double abs_sum = 0.0;
    for (double ev : hermitian_eigenvalues(partial_transpose_a(rho))) {
        abs_sum += std::abs(ev);
    }
    const double n = 0.5 * (abs_sum - 1.0);
    return n < 1e-12 ? 0.0 : n;
}

double negativity_closed_form(const ResourceFamily &family, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::out_of_range, "resource parameter p must lie in [0, 1], got " + std::to_string(p));
    }
    switch (family.kind) {
        case ResourceKind::werner:
            return p <= 1.0 / 3.0 ? 0.0 : (3.0 * p - 1.0) / 4.0;
        case ResourceKind::ad_mad:
            return std::abs(1.0 - p - std::sqrt(1.0 - 2.0 * p + 2.0 * p * p)) / 2.0;
        case ResourceKind::two_ad:
            return p * p / 2.0;
    }
    throw Error(ErrorCode::invalid_argument, "unknown resource family");
}

double negativity_normalization(const ResourceFamily &family) {
    static std::array<std::once_flag, 3> flags;
    static std::array<double, 3> cache{};
    const auto idx = static_cast<std::size_t>(family.kind);
    std::call_once(flags.at(idx), [&family, idx] {
        // Every Bell index gives the same curve for Werner; use the family as given.
        double best = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            best = std::max(best, negativity(build_resource(family, i * 1e-3)));
        }
        cache[idx] = best;
    });
    return cache[idx];
}

double normalized_negativity(const ResourceFamily &family, double p) {
    const double norm_const = negativity_normalization(family);
    return norm_const > 0.0 ? negativity(build_resource(family, p)) / norm_const : 0.0;
}

}  // namespace qtcert
