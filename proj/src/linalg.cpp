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

#include "qtcert/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace qtcert {

double max_abs_diff(const Mat3 &l, const Mat3 &r) {
    double m = 0.0;
    for (std::size_t i = 0; i < 9; ++i) {
        m = std::max(m, std::abs(l.a[i] - r.a[i]));
    }
    return m;
}

bool is_orthogonal(const Mat3 &m, double tol) { return max_abs_diff(m * transpose(m), Mat3::identity()) <= tol; }

bool is_rotation(const Mat3 &m, double tol) { return is_orthogonal(m, tol) && std::abs(determinant(m) - 1.0) <= tol; }

Mat4c operator*(const Mat4c &l, const Mat4c &r) {
    Mat4c out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            complex s{};
            for (std::size_t k = 0; k < 4; ++k) {
                s += l(i, k) * r(k, j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

Mat4c adjoint(const Mat4c &m) {
    Mat4c out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out(i, j) = std::conj(m(j, i));
        }
    }
    return out;
}

complex trace(const Mat4c &m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }

double max_abs_diff(const Mat4c &l, const Mat4c &r) {
    double m = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
        m = std::max(m, std::abs(l.a[i] - r.a[i]));
    }
    return m;
}

Mat2c operator*(const Mat2c &l, const Mat2c &r) {
    Mat2c out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j);
        }
    }
    return out;
}

Mat2c operator+(const Mat2c &l, const Mat2c &r) {
    Mat2c out;
    for (std::size_t i = 0; i < 4; ++i) {
        out.a[i] = l.a[i] + r.a[i];
    }
    return out;
}

Mat2c operator*(complex s, const Mat2c &m) {
    Mat2c out;
    for (std::size_t i = 0; i < 4; ++i) {
        out.a[i] = s * m.a[i];
    }
    return out;
}

Mat2c adjoint(const Mat2c &m) {
    Mat2c out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out(i, j) = std::conj(m(j, i));
        }
    }
    return out;
}

Mat4c kron(const Mat2c &l, const Mat2c &r) {
    Mat4c out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t m = 0; m < 2; ++m) {
                    out(2 * i + k, 2 * j + m) = l(i, j) * r(k, m);
                }
            }
        }
    }
    return out;
}

const Mat2c &pauli(std::size_t i) {
    static const std::array<Mat2c, 4> kPauli = [] {
        std::array<Mat2c, 4> p{};
        p[0].a = {1.0, 0.0, 0.0, 1.0};
        p[1].a = {0.0, 1.0, 1.0, 0.0};
        p[2].a = {0.0, complex(0.0, -1.0), complex(0.0, 1.0), 0.0};
        p[3].a = {1.0, 0.0, 0.0, -1.0};
        return p;
    }();
    return kPauli.at(i);
}

template <std::size_t N>
SymmetricEigen<N> jacobi_eigen(std::array<double, N * N> m, double tol, int max_sweeps) {
    SymmetricEigen<N> out;
    auto &v = out.vectors;
    v.fill(0.0);
    for (std::size_t i = 0; i < N; ++i) {
        v[i * N + i] = 1.0;
    }

    auto off_norm = [&m] {
        double s = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                if (i != j) {
                    s += m[i * N + j] * m[i * N + j];
                }
            }
        }
        return std::sqrt(s);
    };

    for (out.sweeps = 0; out.sweeps < max_sweeps; ++out.sweeps) {
        if (off_norm() < tol) {
            out.converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double apq = m[p * N + q];
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (m[q * N + q] - m[p * N + p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // A <- Jᵀ A J with J the (p, q) Givens rotation.
                for (std::size_t k = 0; k < N; ++k) {
                    const double akp = m[k * N + p];
                    const double akq = m[k * N + q];
                    m[k * N + p] = c * akp - s * akq;
                    m[k * N + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double apk = m[p * N + k];
                    const double aqk = m[q * N + k];
                    m[p * N + k] = c * apk - s * aqk;
                    m[q * N + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double vkp = v[k * N + p];
                    const double vkq = v[k * N + q];
                    v[k * N + p] = c * vkp - s * vkq;
                    v[k * N + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!out.converged && off_norm() < tol) {
        out.converged = true;
    }

    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&m](std::size_t l, std::size_t r) { return m[l * N + l] < m[r * N + r]; });
    std::array<double, N * N> sorted{};
    for (std::size_t c = 0; c < N; ++c) {
        out.values[c] = m[order[c] * N + order[c]];
        for (std::size_t r = 0; r < N; ++r) {
            sorted[r * N + c] = v[r * N + order[c]];
        }
    }
    out.vectors = sorted;
    return out;
}

template SymmetricEigen<3> jacobi_eigen<3>(std::array<double, 9>, double, int);
template SymmetricEigen<8> jacobi_eigen<8>(std::array<double, 64>, double, int);

namespace {

// Any unit vector orthogonal to `u` (assumed unit).
Vec3 orthogonal_unit(const Vec3 &u) {
    const Vec3 axis = std::abs(u.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    const Vec3 w = axis - dot(axis, u) * u;
    return w / norm(w);
}

}  // namespace

ProperSvd proper_svd(const Mat3 &m) {
    const Mat3 mtm = transpose(m) * m;
    const auto eig = jacobi_eigen<3>(mtm.a, 1e-15, 100);

    // Columns of V ordered by descending eigenvalue of MᵀM.
    std::array<Vec3, 3> v;
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t c = 2 - k;
        v[k] = {eig.vectors[0 * 3 + c], eig.vectors[1 * 3 + c], eig.vectors[2 * 3 + c]};
    }
    if (dot(cross(v[0], v[1]), v[2]) < 0.0) {
        v[2] = -v[2];
    }

    const double scale = std::max(1.0, std::sqrt(std::max(eig.values[2], 0.0)));
    const double tiny = 1e-14 * scale;

    std::array<Vec3, 3> u;
    Vec3 w0 = m * v[0];
    u[0] = norm(w0) > tiny ? w0 / norm(w0) : Vec3{1.0, 0.0, 0.0};
    Vec3 w1 = m * v[1];
    w1 -= dot(w1, u[0]) * u[0];
    u[1] = norm(w1) > tiny ? w1 / norm(w1) : orthogonal_unit(u[0]);
    u[2] = cross(u[0], u[1]);

    ProperSvd out;
    out.u = Mat3::from_columns(u[0], u[1], u[2]);
    out.v = Mat3::from_columns(v[0], v[1], v[2]);
    for (std::size_t k = 0; k < 3; ++k) {
        out.s[k] = dot(u[k], m * v[k]);
    }
    return out;
}

}  // namespace qtcert
