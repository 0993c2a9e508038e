// Copyright 2026 The nlgate Authors
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

#include <cmath>
#include <random>

#include "nlgate/operator.hpp"

namespace nlgate::testing {

inline Matrix gaussian_matrix(std::mt19937_64 &rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

/// Haar-distributed unitary: QR of a Gaussian matrix with the phase fix on R's diagonal.
inline Matrix random_unitary(std::mt19937_64 &rng, Eigen::Index n) {
    const Matrix z = gaussian_matrix(rng, n, n);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < n; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
    return q;
}

inline Matrix random_hermitian(std::mt19937_64 &rng, Eigen::Index n) {
    const Matrix g = gaussian_matrix(rng, n, n);
    return 0.5 * (g + g.adjoint());
}

/// Full-rank density matrix G G^dag / tr.
inline Matrix random_density(std::mt19937_64 &rng, Eigen::Index n) {
    const Matrix g = gaussian_matrix(rng, n, n);
    Matrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

inline Vector random_state(std::mt19937_64 &rng, Eigen::Index n) {
    Vector v = gaussian_matrix(rng, n, 1).col(0);
    return v / v.norm();
}

/// Kraus set of a random trace-preserving channel on n dims: blocks of a
/// random isometry n -> count*n.
inline std::vector<Matrix> random_kraus(std::mt19937_64 &rng, Eigen::Index n, int count) {
    const Matrix z = gaussian_matrix(rng, n * count, n);
    Eigen::HouseholderQR<Matrix> qr(z);
    const Matrix v = qr.householderQ() * Matrix::Identity(n * count, n);
    std::vector<Matrix> out;
    for (int k = 0; k < count; ++k) out.push_back(v.block(k * n, 0, n, n));
    return out;
}

/// Kronecker product written out index by index.
inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (Eigen::Index j = 0; j < out.cols(); ++j)
            out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    return out;
}

inline Matrix pauli_matrix(int k) {
    const Complex i(0.0, 1.0);
    Matrix m(2, 2);
    switch (k) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -i, i, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

inline double max_diff(const Matrix &a, const Matrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace nlgate::testing
