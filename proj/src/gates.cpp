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

#include "nlgate/gates.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Geometry>

#include "nlgate/error.hpp"
#include "nlgate/protocol.hpp"

namespace nlgate {

namespace {

const Operator &xx() {
    static const Operator op = tensor(pauli(1), pauli(1));
    return op;
}

Operator pauli_product(int j, int k) { return tensor(pauli(j), pauli(k)); }

void require_two_qubit_hermitian(const Operator &h, const char *what) {
    if (h.dim() != 4) throw domain_error(std::string(what) + ": expected a 4x4 operator");
    if (!h.is_hermitian()) throw domain_error(std::string(what) + ": operator is not Hermitian");
}

}  // namespace

Operator phase_gate(double alpha) {
    const Matrix m = std::cos(alpha) * Matrix::Identity(4, 4) + Complex(0.0, -std::sin(alpha)) * xx().matrix();
    return Operator(m, {2, 2});
}

PauliDecomposition pauli_decompose(const Operator &h) {
    require_two_qubit_hermitian(h, "pauli_decompose");
    PauliDecomposition p;
    auto coeff = [&](int j, int k) { return (h.matrix() * pauli_product(j, k).matrix()).trace().real() / 4.0; };
    p.identity_coefficient = coeff(0, 0);
    for (int j = 1; j <= 3; ++j) {
        p.local_a(j - 1) = coeff(j, 0);
        p.local_b(j - 1) = coeff(0, j);
        for (int k = 1; k <= 3; ++k) p.gamma(j - 1, k - 1) = coeff(j, k);
    }
    return p;
}

Operator PauliDecomposition::interaction() const {
    Matrix m = Matrix::Zero(4, 4);
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) m += gamma(j - 1, k - 1) * pauli_product(j, k).matrix();
    return Operator(m, {2, 2});
}

Operator PauliDecomposition::reconstruct() const {
    Matrix m = identity_coefficient * Matrix::Identity(4, 4);
    for (int j = 1; j <= 3; ++j) {
        m += local_a(j - 1) * pauli_product(j, 0).matrix();
        m += local_b(j - 1) * pauli_product(0, j).matrix();
    }
    m += interaction().matrix();
    return Operator(m, {2, 2});
}

Operator CanonicalForm::hamiltonian() const {
    Matrix m = Matrix::Zero(4, 4);
    const Eigen::Vector3d c = coefficients();
    for (int k = 1; k <= 3; ++k) m += c(k - 1) * pauli_product(k, k).matrix();
    return Operator(m, {2, 2});
}

Operator CanonicalForm::local_unitary() const {
    return tensor(Operator(Matrix(lift_a)), Operator(Matrix(lift_b)));
}

Eigen::Matrix2cd su2_lift(const Eigen::Matrix3d &rotation) {
    Eigen::Quaterniond q(rotation);
    q.normalize();
    if (q.w() < 0.0) q.coeffs() = -q.coeffs();
    // exp(-i theta/2 n.sigma) = w 1 - i (x X + y Y + z Z)
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd u;
    u << q.w() - i * q.z(), -i * q.x() - q.y(),
         -i * q.x() + q.y(), q.w() + i * q.z();
    return u;
}

CanonicalForm canonicalize(const Operator &h) {
    require_two_qubit_hermitian(h, "canonicalize");
    const PauliDecomposition p = pauli_decompose(h);

    Eigen::JacobiSVD<Eigen::Matrix3d> svd(p.gamma, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d u = svd.matrixU();
    Eigen::Matrix3d v = svd.matrixV();
    CanonicalForm form;
    form.mu = svd.singularValues();

    // Fix the free sign of each singular pair: largest component of u_k positive.
    for (int k = 0; k < 3; ++k) {
        Eigen::Index at = 0;
        u.col(k).cwiseAbs().maxCoeff(&at);
        if (u(at, k) < 0.0) {
            u.col(k) *= -1.0;
            v.col(k) *= -1.0;
        }
    }
    // Improper factors: flip the last column; the sign lands on the smallest coefficient.
    if (u.determinant() < 0.0) {
        u.col(2) *= -1.0;
        form.signs(2) *= -1.0;
    }
    if (v.determinant() < 0.0) {
        v.col(2) *= -1.0;
        form.signs(2) *= -1.0;
    }
    if (form.mu(2) == 0.0) form.signs(2) = 1.0;

    form.rot_a = u.transpose();
    form.rot_b = v.transpose();
    form.lift_a = su2_lift(form.rot_a);
    form.lift_b = su2_lift(form.rot_b);
    return form;
}

std::array<Operator, 3> commuting_factorization(const Eigen::Vector3d &mu, double t) {
    if (!mu.allFinite() || !std::isfinite(t)) throw domain_error("commuting_factorization: non-finite input");
    std::array<Operator, 3> out{Operator::identity({2, 2}), Operator::identity({2, 2}), Operator::identity({2, 2})};
    for (int k = 0; k < 3; ++k) {
        const double phi = mu(k) * t;
        const Matrix m = std::cos(phi) * Matrix::Identity(4, 4) +
                         Complex(0.0, -std::sin(phi)) * pauli_product(k + 1, k + 1).matrix();
        out[static_cast<std::size_t>(k)] = Operator(m, {2, 2});
    }
    return out;
}

PhaseApproximation binary_phase_approx(double alpha, double eps) {
    constexpr double pi = std::numbers::pi;
    if (!(alpha > 0.0 && alpha <= pi / 2)) throw domain_error("binary_phase_approx: alpha must lie in (0, pi/2]");
    if (!(eps > 0.0)) throw domain_error("binary_phase_approx: eps must be positive");

    PhaseApproximation out;
    double remaining = alpha;
    // Slack absorbs rounding in remaining so exact dyadics terminate.
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * alpha;
    for (int n = 2; remaining > eps && n < 64; ++n) {
        const double phase = pi / std::ldexp(1.0, n);
        if (phase <= remaining + slack) {
            out.exponents.push_back(n);
            out.phases.push_back(phase);
            out.total += phase;
            remaining -= phase;
        }
    }
    out.cost_bound = f_infinity() * out.total;
    return out;
}

double gate_cost(const Operator &h, double t) {
    if (!std::isfinite(t)) throw domain_error("gate_cost: t must be finite");
    return f_infinity() * std::abs(t) * canonicalize(h).mu.sum();
}

}  // namespace nlgate
