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

#include "qtcert/channels.hpp"

#include <cmath>
#include <string>

#include "qtcert/error.hpp"

namespace qtcert {
namespace {

void check_unit_interval(double q, const char *what) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw Error(ErrorCode::out_of_range, std::string(what) + " must lie in [0, 1], got " + std::to_string(q));
    }
}

Mat2c matrix2(complex a, complex b, complex c, complex d) {
    Mat2c m;
    m.a = {a, b, c, d};
    return m;
}

AffineChannel damping(double q, double direction) {
    AffineChannel ch;
    ch.matrix = Mat3::diag(std::sqrt(q), std::sqrt(q), q);
    ch.shift = {0.0, 0.0, direction * (1.0 - q)};
    if (direction > 0) {
        ch.kraus = {matrix2(1.0, 0.0, 0.0, std::sqrt(q)), matrix2(0.0, std::sqrt(1.0 - q), 0.0, 0.0)};
    } else {
        ch.kraus = {matrix2(std::sqrt(q), 0.0, 0.0, 1.0), matrix2(0.0, 0.0, std::sqrt(1.0 - q), 0.0)};
    }
    return ch;
}

}  // namespace

Mat2c apply_kraus(const AffineChannel &channel, const Mat2c &rho) {
    if (channel.kraus.empty()) {
        throw Error(ErrorCode::invalid_argument, "channel has no Kraus representation");
    }
    Mat2c out;
    for (const auto &k : channel.kraus) {
        out = out + k * rho * adjoint(k);
    }
    return out;
}

DensityMatrix4 apply_local_kraus(const AffineChannel &e, const AffineChannel &f, const DensityMatrix4 &rho) {
    if (e.kraus.empty() || f.kraus.empty()) {
        throw Error(ErrorCode::invalid_argument, "channel has no Kraus representation");
    }
    DensityMatrix4 out;
    for (const auto &ke : e.kraus) {
        for (const auto &kf : f.kraus) {
            const Mat4c k = kron(ke, kf);
            const Mat4c term = k * rho * adjoint(k);
            for (std::size_t i = 0; i < 16; ++i) {
                out.a[i] += term.a[i];
            }
        }
    }
    return out;
}

AffineChannel depolarizing(double q) {
    check_unit_interval(q, "depolarizing parameter");
    AffineChannel ch;
    ch.matrix = Mat3::diag(q, q, q);
    const double keep = std::sqrt((1.0 + 3.0 * q) / 4.0);
    const double flip = std::sqrt((1.0 - q) / 4.0);
    ch.kraus = {complex(keep) * pauli(0), complex(flip) * pauli(1), complex(flip) * pauli(2),
                complex(flip) * pauli(3)};
    return ch;
}

AffineChannel amplitude_damping(double q) {
    check_unit_interval(q, "amplitude-damping parameter");
    return damping(q, +1.0);
}

AffineChannel mirrored_amplitude_damping(double q) {
    check_unit_interval(q, "amplitude-damping parameter");
    return damping(q, -1.0);
}

TwoQubitFano resource_from_local_noises(const AffineChannel &e, const AffineChannel &f, int bell_index) {
    const Mat3 w = bell_correlation_matrix(bell_index);
    TwoQubitFano out;
    out.bloch_a = e.shift;
    out.bloch_b = f.shift;
    for (std::size_t alpha = 0; alpha < 3; ++alpha) {
        for (std::size_t beta = 0; beta < 3; ++beta) {
            double c = e.shift[alpha] * f.shift[beta];
            for (std::size_t i = 0; i < 3; ++i) {
                c += w(i, i) * e.matrix(alpha, i) * f.matrix(beta, i);
            }
            out.corr(alpha, beta) = c;
        }
    }
    return out;
}

std::string_view resource_name(ResourceKind kind) {
    switch (kind) {
        case ResourceKind::werner:
            return "werner";
        case ResourceKind::ad_mad:
            return "ad-mad";
        case ResourceKind::two_ad:
            return "two-ad";
    }
    return "unknown";
}

std::optional<ResourceKind> parse_resource(std::string_view name) {
    for (ResourceKind k : {ResourceKind::werner, ResourceKind::ad_mad, ResourceKind::two_ad}) {
        if (resource_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

TwoQubitFano build_resource(const ResourceFamily &family, double p) {
    check_unit_interval(p, "resource parameter p");
    switch (family.kind) {
        case ResourceKind::werner: {
            TwoQubitFano out;
            out.corr = p * bell_correlation_matrix(family.bell_index);
            return out;
        }
        case ResourceKind::ad_mad:
            return resource_from_local_noises(amplitude_damping(p), mirrored_amplitude_damping(p), 1);
        case ResourceKind::two_ad:
            return resource_from_local_noises(amplitude_damping(p), amplitude_damping(p), 1);
    }
    throw Error(ErrorCode::invalid_argument, "unknown resource family");
}

}  // namespace qtcert
