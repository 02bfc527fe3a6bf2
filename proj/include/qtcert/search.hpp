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

namespace qtcert {

/// Golden-section minimization of a unimodal f on [lo, hi], narrowing the
/// bracket to width `tol`. Returns the bracket midpoint.
double golden_section_minimize(const std::function<double(double)> &f, double lo, double hi, double tol);

/// Bisection on a predicate that differs at `lo` and `hi`. Narrows the
/// bracket until it is at most `tol` wide and returns its midpoint.
double bisect_flip(const std::function<bool(double)> &pred, double lo, double hi, double tol);

}  // namespace qtcert
