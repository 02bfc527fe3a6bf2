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

#include "qtcert/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qtcert {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), key_(mix(seed + kGolden) ^ mix(stream * kGolden + 0x632BE59BD9B4E019ULL)) {}

std::uint64_t CounterRng::next_u64() { return mix(key_ + (++counter_) * kGolden); }

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

CounterRng CounterRng::split(std::uint64_t stream) const { return CounterRng(seed_ ^ key_, stream); }

BlochVector sample_unit_sphere(CounterRng &rng) {
    const double z = 2.0 * rng.uniform() - 1.0;
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
}

Mat3 sample_rotation(CounterRng &rng) {
    // Shoemake's subgroup algorithm for a uniform unit quaternion.
    const double u1 = rng.uniform();
    const double u2 = 2.0 * std::numbers::pi * rng.uniform();
    const double u3 = 2.0 * std::numbers::pi * rng.uniform();
    const double a = std::sqrt(1.0 - u1);
    const double b = std::sqrt(u1);
    const double w = a * std::sin(u2);
    const double x = a * std::cos(u2);
    const double y = b * std::sin(u3);
    const double z = b * std::cos(u3);

    Mat3 r;
    r(0, 0) = 1.0 - 2.0 * (y * y + z * z);
    r(0, 1) = 2.0 * (x * y - z * w);
    r(0, 2) = 2.0 * (x * z + y * w);
    r(1, 0) = 2.0 * (x * y + z * w);
    r(1, 1) = 1.0 - 2.0 * (x * x + z * z);
    r(1, 2) = 2.0 * (y * z - x * w);
    r(2, 0) = 2.0 * (x * z - y * w);
    r(2, 1) = 2.0 * (y * z + x * w);
    r(2, 2) = 1.0 - 2.0 * (x * x + y * y);
    return r;
}

}  // namespace qtcert
