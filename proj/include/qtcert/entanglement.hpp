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

#include "qtcert/channels.hpp"

namespace qtcert {

/// 𝒩(ρ) = (‖ρ^{T_A}‖₁ - 1)/2 from the eigenvalues of the partial transpose.
/// Results below 1e-12 are reported as exactly 0. Throws
/// Error(non_physical) when the assembled state has a negative eigenvalue
/// below -1e-10.
double negativity(const TwoQubitFano &resource);

/// Closed forms: Werner (3p-1)/4 above p = 1/3 and 0 below; ad-mad
/// |1 - p - √(1 - 2p + 2p²)|/2; two-ad p²/2.
double negativity_closed_form(const ResourceFamily &family, double p);

/// Maximum of the numeric negativity over a p grid of step 1e-3 on [0, 1].
/// Computed once per family kind.
double negativity_normalization(const ResourceFamily &family);

/// negativity(build_resource(family, p)) / negativity_normalization(family).
double normalized_negativity(const ResourceFamily &family, double p);

}  // namespace qtcert
