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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qtcert/channels.hpp"
#include "qtcert/error.hpp"
#include "qtcert/random.hpp"

using namespace qtcert;

namespace {

Mat2c qubit(const Vec3 &t) {
    Mat2c m;
    m(0, 0) = 0.5 * (1 + t.z);
    m(1, 1) = 0.5 * (1 - t.z);
    m(0, 1) = complex(0.5 * t.x, -0.5 * t.y);
    m(1, 0) = complex(0.5 * t.x, 0.5 * t.y);
    return m;
}

Vec3 bloch(const Mat2c &m) { return {2 * m(0, 1).real(), -2 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()}; }

std::vector<AffineChannel> sample_channels(CounterRng &rng) {
    const double q = rng.uniform();
    return {depolarizing(q), amplitude_damping(q), mirrored_amplitude_damping(q)};
}

double fano_diff(const TwoQubitFano &a, const TwoQubitFano &b) {
    return std::max({norm(a.bloch_a - b.bloch_a), norm(a.bloch_b - b.bloch_b), max_abs_diff(a.corr, b.corr)});
}

}  // namespace

TEST(Channels, AffineExamples) {
    const Vec3 up{0, 0, 1};
    const Vec3 down{0, 0, -1};
    const Vec3 any{0.3, -0.2, 0.5};
    EXPECT_EQ(depolarizing(1.0).apply(any), any);
    EXPECT_EQ(norm(depolarizing(0.0).apply(any)), 0.0);
    EXPECT_EQ(depolarizing(0.5).apply(up), Vec3(0, 0, 0.5));
    EXPECT_EQ(amplitude_damping(1.0).apply(any), any);
    EXPECT_EQ(amplitude_damping(0.0).apply(any), up);
    EXPECT_EQ(amplitude_damping(0.25).apply(down), Vec3(0, 0, 0.5));
    EXPECT_EQ(mirrored_amplitude_damping(0.0).apply(any), down);
    EXPECT_EQ(mirrored_amplitude_damping(1.0).apply(any), any);
    EXPECT_EQ(mirrored_amplitude_damping(0.25).apply(up), Vec3(0, 0, -0.5));
    EXPECT_THROW(depolarizing(1.5), Error);
    EXPECT_THROW(amplitude_damping(-0.1), Error);
}

TEST(Channels, KrausSetsAreTracePreserving) {
    CounterRng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        for (const auto &ch : sample_channels(rng)) {
            Mat2c sum;
            for (const auto &k : ch.kraus) {
                sum = sum + adjoint(k) * k;
            }
            EXPECT_NEAR(std::abs(sum(0, 0) - 1.0), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(sum(1, 1) - 1.0), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(sum(0, 1)), 0.0, 1e-12);
        }
    }
}

TEST(Channels, KrausMatchesAffineAction) {
    CounterRng rng(37);
    const std::array<Vec3, 6> axes = {Vec3{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    for (int trial = 0; trial < 20; ++trial) {
        for (const auto &ch : sample_channels(rng)) {
            for (const Vec3 &t : axes) {
                EXPECT_LT(norm(bloch(apply_kraus(ch, qubit(t))) - ch.apply(t)), 1e-12);
            }
            for (int k = 0; k < 50; ++k) {
                const Vec3 t = sample_unit_sphere(rng);
                const Vec3 out = ch.apply(t);
                EXPECT_LT(norm(bloch(apply_kraus(ch, qubit(t))) - out), 1e-12);
                EXPECT_LE(norm(out), 1.0 + 1e-12);
            }
        }
    }
    AffineChannel bare;
    EXPECT_THROW(apply_kraus(bare, qubit({})), Error);
}

TEST(Channels, LocalNoiseCompositionMatchesKraus) {
    CounterRng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto es = sample_channels(rng);
        const auto fs = sample_channels(rng);
        const auto &e = es[rng.next_u64() % 3];
        const auto &f = fs[rng.next_u64() % 3];
        const int k = 1 + static_cast<int>(rng.next_u64() % 4);
        const DensityMatrix4 bell = oracle::to_mat4(oracle::outer(oracle::bell_ket(k)));
        const TwoQubitFano direct = fano_from_density(apply_local_kraus(e, f, bell));
        EXPECT_LT(fano_diff(resource_from_local_noises(e, f, k), direct), 1e-10);
    }
}

TEST(Channels, ResourceExamples) {
    const TwoQubitFano id = resource_from_local_noises(depolarizing(1), depolarizing(1), 1);
    EXPECT_LT(fano_diff(id, {{}, {}, bell_correlation_matrix(1)}), 1e-15);

    const TwoQubitFano dd = resource_from_local_noises(depolarizing(0.6), depolarizing(0.5), 3);
    EXPECT_LT(fano_diff(dd, {{}, {}, 0.3 * bell_correlation_matrix(3)}), 1e-15);

    const double p = 0.37;
    const TwoQubitFano am = resource_from_local_noises(amplitude_damping(p), mirrored_amplitude_damping(p), 1);
    EXPECT_LT(fano_diff(am, {{0, 0, 1 - p}, {0, 0, -(1 - p)}, Mat3::diag(p, -p, 2 * p - 1)}), 1e-15);
}

TEST(Resources, Families) {
    EXPECT_LT(fano_diff(build_resource({ResourceKind::werner, 1}, 1.0), {{}, {}, bell_correlation_matrix(1)}), 1e-15);
    EXPECT_LT(fano_diff(build_resource({ResourceKind::ad_mad, 1}, 0.0), {{0, 0, 1}, {0, 0, -1}, Mat3::diag(0, 0, -1)}),
              1e-15);
    EXPECT_LT(max_abs_diff(build_resource({ResourceKind::two_ad, 1}, 0.5).corr, Mat3::diag(0.5, -0.5, 0.5)), 1e-15);
    EXPECT_THROW(build_resource({ResourceKind::werner, 1}, 1.1), Error);
    EXPECT_THROW(build_resource({ResourceKind::werner, 7}, 0.5), Error);
    for (ResourceKind k : {ResourceKind::werner, ResourceKind::ad_mad, ResourceKind::two_ad}) {
        EXPECT_EQ(parse_resource(resource_name(k)), k);
        for (int i = 0; i <= 100; ++i) {
            EXPECT_TRUE(is_physical(build_resource({k, 2}, i / 100.0)));
        }
    }
    EXPECT_FALSE(parse_resource("bell").has_value());
}

TEST(Resources, DenseMatrixForms) {
    for (int i = 0; i <= 20; ++i) {
        const double p = i / 20.0;
        for (int k = 1; k <= 4; ++k) {
            const auto bell = oracle::outer(oracle::bell_ket(k));
            oracle::Dense expected(4);
            for (std::size_t r = 0; r < 4; ++r) {
                for (std::size_t c = 0; c < 4; ++c) {
                    expected(r, c) = p * bell(r, c) + (r == c ? (1 - p) / 4 : 0.0);
                }
            }
            EXPECT_LT(max_abs_diff(assemble_density(build_resource({ResourceKind::werner, k}, p)),
                                   oracle::to_mat4(expected)),
                      1e-12);
        }
        // p|Φ1><Φ1| + (1-p)|01><01|
        auto expected = oracle::outer(oracle::bell_ket(1));
        for (auto &x : expected.a) {
            x *= p;
        }
        expected(1, 1) += 1 - p;
        EXPECT_LT(max_abs_diff(assemble_density(build_resource({ResourceKind::ad_mad, 1}, p)), oracle::to_mat4(expected)),
                  1e-12);
    }
}
