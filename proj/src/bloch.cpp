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

#include "qtcert/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtcert/error.hpp"

namespace qtcert {

Mat3 bell_correlation_matrix(int i) {
    switch (i) {
        case 1:
            return Mat3::diag(1.0, -1.0, 1.0);
        case 2:
            return Mat3::diag(-1.0, 1.0, 1.0);
        case 3:
            return Mat3::diag(1.0, 1.0, -1.0);
        case 4:
            return Mat3::diag(-1.0, -1.0, -1.0);
        default:
            throw Error(ErrorCode::out_of_range, "Bell index must be in 1..4, got " + std::to_string(i));
    }
}

DensityMatrix4 assemble_density(const TwoQubitFano &fano) {
    for (std::size_t k = 0; k < 3; ++k) {
        if (!std::isfinite(fano.bloch_a[k]) || !std::isfinite(fano.bloch_b[k])) {
            throw Error(ErrorCode::invalid_argument, "non-finite Bloch vector in Fano form");
        }
    }
    for (double e : fano.corr.a) {
        if (!std::isfinite(e)) {
            throw Error(ErrorCode::invalid_argument, "non-finite correlation matrix entry");
        }
    }

    // Coefficient table c[i][j] of σ_i ⊗ σ_j, with index 0 the identity.
    double c[4][4] = {};
    c[0][0] = 1.0;
    for (std::size_t i = 0; i < 3; ++i) {
        c[i + 1][0] = fano.bloch_a[i];
        c[0][i + 1] = fano.bloch_b[i];
        for (std::size_t j = 0; j < 3; ++j) {
            c[i + 1][j + 1] = fano.corr(i, j);
        }
    }

    DensityMatrix4 rho;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (c[i][j] == 0.0) {
                continue;
            }
            const Mat4c term = kron(pauli(i), pauli(j));
            for (std::size_t k = 0; k < 16; ++k) {
                rho.a[k] += 0.25 * c[i][j] * term.a[k];
            }
        }
    }
    return rho;
}

TwoQubitFano fano_from_density(const DensityMatrix4 &rho) {
    auto expectation = [&rho](std::size_t i, std::size_t j) { return trace(rho * kron(pauli(i), pauli(j))).real(); };
    TwoQubitFano out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.bloch_a[i] = expectation(i + 1, 0);
        out.bloch_b[i] = expectation(0, i + 1);
        for (std::size_t j = 0; j < 3; ++j) {
            out.corr(i, j) = expectation(i + 1, j + 1);
        }
    }
    return out;
}

DensityMatrix4 partial_transpose_a(const DensityMatrix4 &rho) {
    // Index = 2 a + b. Swap the A indices of row and column.
    DensityMatrix4 out;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            for (std::size_t a2 = 0; a2 < 2; ++a2) {
                for (std::size_t b2 = 0; b2 < 2; ++b2) {
                    out(2 * a + b, 2 * a2 + b2) = rho(2 * a2 + b, 2 * a + b2);
                }
            }
        }
    }
    return out;
}

std::array<double, 4> hermitian_eigenvalues(const DensityMatrix4 &m) {
    if (max_abs_diff(m, adjoint(m)) > 1e-10) {
        throw Error(ErrorCode::invalid_argument, "hermitian_eigenvalues: matrix is not Hermitian");
    }
    std::array<double, 64> embed{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            // Symmetrize so the embedding is exactly symmetric.
            const complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
            embed[i * 8 + j] = h.real();
            embed[(i + 4) * 8 + (j + 4)] = h.real();
            embed[i * 8 + (j + 4)] = -h.imag();
            embed[(i + 4) * 8 + j] = h.imag();
        }
    }
    const auto eig = jacobi_eigen<8>(embed, 1e-12, 100);
    if (!eig.converged) {
        throw Error(ErrorCode::not_converged, "Jacobi eigensolver did not converge within 100 sweeps");
    }
    // Sorted ascending, each value doubled: take one of each pair.
    return {eig.values[0], eig.values[2], eig.values[4], eig.values[6]};
}

bool is_physical(const TwoQubitFano &fano) {
    const DensityMatrix4 rho = assemble_density(fano);
    if (max_abs_diff(rho, adjoint(rho)) > 1e-12 || std::abs(trace(rho) - 1.0) > 1e-12) {
        return false;
    }
    const auto ev = hermitian_eigenvalues(rho);
    return ev[0] >= kEigenvalueFloor;
}

}  // namespace qtcert
