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

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "nlgate/operator.hpp"

namespace nlgate {

/// cos(alpha) 1 - i sin(alpha) X(x)X = exp(-i alpha X(x)X), on dims [2,2].
Operator phase_gate(double alpha);

/// H = c0 1 + a.sigma (x) 1 + 1 (x) b.sigma + sum_jk gamma_jk sigma_j (x) sigma_k.
struct PauliDecomposition {
    double identity_coefficient = 0.0;
    Eigen::Vector3d local_a = Eigen::Vector3d::Zero();
    Eigen::Vector3d local_b = Eigen::Vector3d::Zero();
    Eigen::Matrix3d gamma = Eigen::Matrix3d::Zero();

    Operator reconstruct() const;
    /// Only the sigma_j (x) sigma_k part.
    Operator interaction() const;
};

/// Trace inner products with the 16 two-qubit Pauli products.
/// Throws domain_error for non-Hermitian or non-4x4 input.
PauliDecomposition pauli_decompose(const Operator &h);

/// Local-unitary normal form of the interaction part of a two-qubit Hamiltonian.
///
/// With u_a = lift_a, u_b = lift_b,
///   (u_a (x) u_b) H_gamma (u_a (x) u_b)^dag = sum_k signs_k mu_k sigma_k (x) sigma_k,
/// where mu are the singular values of gamma (descending, ties kept in axis
/// order). Each lift implements its rotation: u sigma_k u^dag = sum_j R_jk sigma_j,
/// so gamma = rot_a^T diag(signs * mu) rot_b. det(gamma) is invariant under
/// local unitaries, so when it is negative signs_3 = -1; otherwise all signs are +1.
struct CanonicalForm {
    Eigen::Vector3d mu = Eigen::Vector3d::Zero();
    Eigen::Vector3d signs = Eigen::Vector3d::Ones();
    Eigen::Matrix3d rot_a = Eigen::Matrix3d::Identity();
    Eigen::Matrix3d rot_b = Eigen::Matrix3d::Identity();
    Eigen::Matrix2cd lift_a = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd lift_b = Eigen::Matrix2cd::Identity();

    /// signs .* mu
    Eigen::Vector3d coefficients() const { return signs.cwiseProduct(mu); }
    /// sum_k coefficients_k sigma_k (x) sigma_k
    Operator hamiltonian() const;
    Operator local_unitary() const;
};

CanonicalForm canonicalize(const Operator &h);

/// SU(2) element u with u sigma_k u^dag = sum_j R_jk sigma_j and tr(u) >= 0.
Eigen::Matrix2cd su2_lift(const Eigen::Matrix3d &rotation);

/// exp(-i mu_k t sigma_k (x) sigma_k) for k = x, y, z.
std::array<Operator, 3> commuting_factorization(const Eigen::Vector3d &mu, double t);

struct PhaseApproximation {
    std::vector<int> exponents;  // N_i, strictly increasing, all >= 2
    std::vector<double> phases;  // pi / 2^{N_i}
    double total = 0.0;          // sum of phases
    double cost_bound = 0.0;     // f_inf * total (ebits)
};

/// Greedy most-significant-first dyadic expansion of alpha in (0, pi/2] with
/// |alpha - total| <= eps. Throws domain_error outside that domain or for eps <= 0.
PhaseApproximation binary_phase_approx(double alpha, double eps);

/// f_inf * |t| * (mu_1 + mu_2 + mu_3) ebits.
double gate_cost(const Operator &h, double t);

}  // namespace nlgate
