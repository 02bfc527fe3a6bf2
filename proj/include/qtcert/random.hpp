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

#include "qtcert/bloch.hpp"

namespace qtcert {

/// Counter-based generator: draw n of stream s under key k is
/// splitmix64(key(k, s) + n * golden). Streams obtained with split() are
/// independent, so Monte-Carlo shards reproduce regardless of how they are
/// scheduled.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

    CounterRng split(std::uint64_t stream) const;

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Haar-uniform pure qubit state: z uniform on [-1, 1], azimuth uniform on
/// [0, 2π).
BlochVector sample_unit_sphere(CounterRng &rng);

/// Haar-uniform rotation from a uniformly distributed unit quaternion.
Mat3 sample_rotation(CounterRng &rng);

}  // namespace qtcert
