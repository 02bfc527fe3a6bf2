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

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qtcert {

using complex = std::complex<double>;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr double &operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3 &operator+=(const Vec3 &o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3 &operator-=(const Vec3 &o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3 &operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
    friend constexpr bool operator==(const Vec3 &, const Vec3 &) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
constexpr Vec3 operator-(const Vec3 &a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }

constexpr double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

/// Row-major 3x3 real matrix.
struct Mat3 {
    std::array<double, 9> a{};

    constexpr double operator()(std::size_t r, std::size_t c) const { return a[3 * r + c]; }
    constexpr double &operator()(std::size_t r, std::size_t c) { return a[3 * r + c]; }

    static constexpr Mat3 identity() { return diag(1.0, 1.0, 1.0); }
    static constexpr Mat3 diag(double d0, double d1, double d2) {
        Mat3 m;
        m(0, 0) = d0;
        m(1, 1) = d1;
        m(2, 2) = d2;
        return m;
    }
    static constexpr Mat3 from_columns(const Vec3 &c0, const Vec3 &c1, const Vec3 &c2) {
        Mat3 m;
        for (std::size_t r = 0; r < 3; ++r) {
            m(r, 0) = c0[r];
            m(r, 1) = c1[r];
            m(r, 2) = c2[r];
        }
        return m;
    }

    constexpr Vec3 column(std::size_t c) const { return {a[c], a[3 + c], a[6 + c]}; }

    friend constexpr bool operator==(const Mat3 &, const Mat3 &) = default;
};

constexpr Mat3 operator*(const Mat3 &l, const Mat3 &r) {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) {
                s += l(i, k) * r(k, j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

constexpr Vec3 operator*(const Mat3 &m, const Vec3 &v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z, m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
            m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

constexpr Mat3 operator*(double s, Mat3 m) {
    for (auto &e : m.a) {
        e *= s;
    }
    return m;
}

constexpr Mat3 operator+(Mat3 l, const Mat3 &r) {
    for (std::size_t i = 0; i < 9; ++i) {
        l.a[i] += r.a[i];
    }
    return l;
}

constexpr Mat3 operator-(Mat3 l, const Mat3 &r) {
    for (std::size_t i = 0; i < 9; ++i) {
        l.a[i] -= r.a[i];
    }
    return l;
}

constexpr Mat3 transpose(const Mat3 &m) {
    Mat3 t;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            t(i, j) = m(j, i);
        }
    }
    return t;
}

constexpr double trace(const Mat3 &m) { return m(0, 0) + m(1, 1) + m(2, 2); }

constexpr double determinant(const Mat3 &m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Largest absolute entry of `l - r`.
double max_abs_diff(const Mat3 &l, const Mat3 &r);

/// True when M Mᵀ = 1 entrywise within `tol`.
bool is_orthogonal(const Mat3 &m, double tol = 1e-12);

/// Orthogonal with determinant +1.
bool is_rotation(const Mat3 &m, double tol = 1e-12);

/// Row-major 4x4 complex matrix.
struct Mat4c {
    std::array<complex, 16> a{};

    constexpr const complex &operator()(std::size_t r, std::size_t c) const { return a[4 * r + c]; }
    constexpr complex &operator()(std::size_t r, std::size_t c) { return a[4 * r + c]; }

    friend bool operator==(const Mat4c &, const Mat4c &) = default;
};

Mat4c operator*(const Mat4c &l, const Mat4c &r);
Mat4c adjoint(const Mat4c &m);
complex trace(const Mat4c &m);
double max_abs_diff(const Mat4c &l, const Mat4c &r);

/// Row-major 2x2 complex matrix (single-qubit operators, Kraus operators).
struct Mat2c {
    std::array<complex, 4> a{};

    constexpr const complex &operator()(std::size_t r, std::size_t c) const { return a[2 * r + c]; }
    constexpr complex &operator()(std::size_t r, std::size_t c) { return a[2 * r + c]; }
};

Mat2c operator*(const Mat2c &l, const Mat2c &r);
Mat2c operator+(const Mat2c &l, const Mat2c &r);
Mat2c operator*(complex s, const Mat2c &m);
Mat2c adjoint(const Mat2c &m);
Mat4c kron(const Mat2c &l, const Mat2c &r);

/// Pauli matrices; index 0 is the identity, 1..3 are X, Y, Z.
const Mat2c &pauli(std::size_t i);

/// Eigen-decomposition of a real symmetric N x N matrix by cyclic Jacobi
/// sweeps. Iterates until the off-diagonal Frobenius norm falls below `tol`
/// or `max_sweeps` is reached. Eigenvalues are returned ascending; the
/// eigenvector for eigenvalue k is column k of `vectors` (row-major).
template <std::size_t N>
struct SymmetricEigen {
    std::array<double, N> values{};
    std::array<double, N * N> vectors{};
    int sweeps = 0;
    bool converged = false;
};

template <std::size_t N>
SymmetricEigen<N> jacobi_eigen(std::array<double, N * N> m, double tol = 1e-12, int max_sweeps = 100);

extern template SymmetricEigen<3> jacobi_eigen<3>(std::array<double, 9>, double, int);
extern template SymmetricEigen<8> jacobi_eigen<8>(std::array<double, 64>, double, int);

/// Singular value decomposition M = U diag(s) Vᵀ with U and V proper
/// rotations. A negative determinant is absorbed by flipping the third column
/// of the offending factor and the sign of s[2], so s[2] may be negative.
/// |s| is sorted descending.
struct ProperSvd {
    Mat3 u;
    Vec3 s;
    Mat3 v;
};

ProperSvd proper_svd(const Mat3 &m);

}  // namespace qtcert
