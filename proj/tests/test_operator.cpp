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

#include <array>
#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "nlgate/error.hpp"
#include "nlgate/operator.hpp"
#include "nlgate/states.hpp"
#include "support.hpp"

using namespace nlgate;
using namespace nlgate::testing;

namespace {

const Complex I(0.0, 1.0);

Operator herm(std::mt19937_64 &rng, Dims dims) {
    return Operator(random_hermitian(rng, static_cast<Eigen::Index>(product(dims))), dims);
}

Operator dens(std::mt19937_64 &rng, Dims dims) {
    return Operator(random_density(rng, static_cast<Eigen::Index>(product(dims))), dims);
}

}  // namespace

TEST(operator_core, construction_rejects_bad_input) {
    EXPECT_THROW(Operator(Matrix::Zero(2, 3), {2}), Error);
    EXPECT_THROW(Operator(Matrix::Zero(4, 4), {2, 3}), Error);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 1) = Complex(std::nan(""), 0.0);
    EXPECT_THROW(Operator(bad, {2}), Error);
    bad(0, 1) = Complex(0.0, INFINITY);
    EXPECT_THROW(Operator(bad, {2}), Error);
}

TEST(operator_core, predicates) {
    EXPECT_TRUE(pauli(2).is_hermitian());
    EXPECT_TRUE(pauli(2).is_unitary());
    EXPECT_FALSE(pauli(2).is_positive_semidefinite());
    Matrix m(2, 2);
    m << 1, I, 0, 1;
    EXPECT_FALSE(Operator(m).is_hermitian());
    EXPECT_TRUE(Operator(Matrix::Identity(2, 2) * 0.5).is_positive_semidefinite());
    // Slightly negative eigenvalue within tolerance still counts as PSD.
    Matrix near = Matrix::Zero(2, 2);
    near(0, 0) = -5e-11;
    EXPECT_TRUE(Operator(near).is_positive_semidefinite());
    near(0, 0) = -5e-10;
    EXPECT_FALSE(Operator(near).is_positive_semidefinite());
}

TEST(operator_core, tensor_examples) {
    EXPECT_EQ(max_abs_diff(tensor(pauli(0), pauli(0)), Operator::identity({2, 2})), 0.0);

    const Operator xz = tensor(pauli(1), pauli(3));
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 2) = 1;
    expected(1, 3) = -1;
    expected(2, 0) = 1;
    expected(3, 1) = -1;
    EXPECT_EQ(max_abs_diff(xz.matrix(), expected), 0.0);
    EXPECT_EQ(xz.dims(), (Dims{2, 2}));

    // (|0><0| (x) X)|01> = |00>
    Matrix p0 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    const Operator op = tensor(Operator(p0), pauli(1));
    EXPECT_EQ(max_abs_diff(op.matrix() * Vector::Unit(4, 1), Vector::Unit(4, 0)), 0.0);
}

TEST(operator_core, tensor_is_associative) {
    std::mt19937_64 rng(11);
    const Operator a = herm(rng, {2}), b = herm(rng, {3}), c = herm(rng, {2});
    const Operator left = tensor(tensor(a, b), c);
    const Operator right = tensor(a, tensor(b, c));
    EXPECT_EQ(left.dims(), right.dims());
    EXPECT_LE(max_abs_diff(left, right), 1e-14);
    EXPECT_LE(max_abs_diff(left.matrix(), kron(kron(a.matrix(), b.matrix()), c.matrix())), 1e-14);
}

TEST(operator_core, partial_trace_examples) {
    const Operator phi = max_entangled(2).density();
    const std::array<std::size_t, 1> first{0};
    EXPECT_LE(max_abs_diff(partial_trace(phi, first).matrix(), Matrix::Identity(2, 2) / 2.0), 1e-15);

    std::mt19937_64 rng(3);
    const Operator ra = dens(rng, {2});
    const Operator rb = herm(rng, {3});
    const Operator reduced = partial_trace(tensor(ra, rb), first);
    EXPECT_LE(max_abs_diff(reduced.matrix(), ra.matrix() * rb.trace()), 1e-13);

    const Operator big = herm(rng, {2, 3, 2});
    const Operator full = partial_trace(big, std::span<const std::size_t>{});
    EXPECT_EQ(full.dim(), 1u);
    EXPECT_LE(std::abs(full(0, 0) - big.trace()), 1e-13);
}

TEST(operator_core, partial_trace_keeps_order_and_trace) {
    std::mt19937_64 rng(5);
    const Operator a = dens(rng, {2}), b = dens(rng, {3}), c = dens(rng, {2});
    const Operator abc = tensor(std::array<Operator, 3>{a, b, c});
    const std::array<std::size_t, 2> keep{2, 0};  // order of the set is irrelevant
    const Operator ac = partial_trace(abc, keep);
    EXPECT_EQ(ac.dims(), (Dims{2, 2}));
    EXPECT_LE(max_abs_diff(ac, tensor(a, c)), 1e-14);

    const Operator h = herm(rng, {2, 3, 2});
    for (std::size_t k = 0; k < 3; ++k) {
        const std::array<std::size_t, 1> one{k};
        EXPECT_LE(std::abs(partial_trace(h, one).trace() - h.trace()), 1e-12);
    }
}

TEST(operator_core, partial_trace_rejects_bad_index) {
    const std::array<std::size_t, 1> bad{2};
    EXPECT_THROW(partial_trace(Operator::identity({2, 2}), bad), Error);
    const std::array<std::size_t, 2> dup{0, 0};
    EXPECT_THROW(partial_trace(Operator::identity({2, 2}), dup), Error);
}

TEST(operator_core, partial_transpose_examples) {
    std::mt19937_64 rng(8);
    const Operator ra = dens(rng, {2}), rb = dens(rng, {3});
    const std::array<std::size_t, 1> first{0};
    EXPECT_LE(max_abs_diff(partial_transpose(tensor(ra, rb), first), tensor(ra.transpose(), rb)), 1e-15);

    const Operator h = herm(rng, {2, 2});
    EXPECT_EQ(max_abs_diff(partial_transpose(h, std::span<const std::size_t>{}), h), 0.0);

    // |Phi><Phi|^{T_A} = SWAP / 2, spectrum {1/2, 1/2, 1/2, -1/2}.
    const Operator pt = partial_transpose(max_entangled(2).density(), first);
    Matrix swap = Matrix::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    EXPECT_LE(max_abs_diff(pt.matrix(), swap / 2.0), 1e-15);
    EXPECT_NEAR(hermitian_eig(pt).values.back(), -0.5, 1e-12);

    const std::array<std::size_t, 1> bad{4};
    EXPECT_THROW(partial_transpose(h, bad), Error);
}

TEST(operator_core, partial_transpose_is_involution_and_keeps_trace) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Operator h = Operator(gaussian_matrix(rng, 12, 12), {2, 3, 2});
        for (const auto &set : {std::vector<std::size_t>{0}, std::vector<std::size_t>{1, 2}, std::vector<std::size_t>{0, 2}}) {
            const Operator once = partial_transpose(h, set);
            EXPECT_EQ(max_abs_diff(partial_transpose(once, set), h), 0.0);
            EXPECT_LE(std::abs(once.trace() - h.trace()), 1e-12);
        }
    }
}

TEST(operator_core, permute_and_embed) {
    std::mt19937_64 rng(10);
    const Operator a = herm(rng, {2}), b = herm(rng, {3});
    const std::array<std::size_t, 2> swap_order{1, 0};
    EXPECT_LE(max_abs_diff(permute_subsystems(tensor(a, b), swap_order), tensor(b, a)), 1e-15);

    const std::array<std::size_t, 1> middle{1};
    const Operator lifted = embed(b, middle, {2, 3, 2});
    const Operator expected = tensor(std::array<Operator, 3>{Operator::identity({2}), b, Operator::identity({2})});
    EXPECT_LE(max_abs_diff(lifted, expected), 1e-15);

    // Embedding a two-factor operator onto (2, 0) applies its first factor to subsystem 2.
    const Operator c = herm(rng, {2});
    const std::array<std::size_t, 2> reversed{2, 0};
    const Operator lifted2 = embed(tensor(a, c), reversed, {2, 3, 2});
    const Operator expected2 = tensor(std::array<Operator, 3>{c, Operator::identity({3}), a});
    EXPECT_LE(max_abs_diff(lifted2, expected2), 1e-15);
}

TEST(operator_core, hermitian_eig_examples) {
    auto z = hermitian_eig(pauli(3));
    EXPECT_NEAR(z.values[0], 1.0, 1e-15);
    EXPECT_NEAR(z.values[1], -1.0, 1e-15);
    EXPECT_NEAR(std::abs(z.vectors(0, 0)), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(z.vectors(1, 1)), 1.0, 1e-15);

    auto x = hermitian_eig(pauli(1));
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(x.vectors(0, 0)), h, 1e-15);
    EXPECT_NEAR(std::abs(x.vectors(1, 0)), h, 1e-15);
    // Column for +1 has equal-sign entries, column for -1 opposite signs.
    EXPECT_NEAR(std::abs(x.vectors(0, 0) + x.vectors(1, 0)), std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(std::abs(x.vectors(0, 1) + x.vectors(1, 1)), 0.0, 1e-14);

    // X (x) X: direct diagonalization gives {1, 1, -1, -1}.
    const auto xx = hermitian_eig(tensor(pauli(1), pauli(1)));
    const std::array<double, 4> expected{1, 1, -1, -1};
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(xx.values[k], expected[k], 1e-14);

    Matrix nh = Matrix::Zero(2, 2);
    nh(0, 1) = 1.0;
    EXPECT_THROW(hermitian_eig(Operator(nh)), Error);
}

TEST(operator_core, hermitian_eig_reconstructs_random_input) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const Operator h = herm(rng, {2, 2, 2});
        const auto es = hermitian_eig(h);
        Vector lambda(8);
        double sum = 0.0;
        for (int k = 0; k < 8; ++k) {
            lambda(k) = es.values[static_cast<std::size_t>(k)];
            sum += es.values[static_cast<std::size_t>(k)];
            if (k > 0) EXPECT_GE(es.values[static_cast<std::size_t>(k - 1)], es.values[static_cast<std::size_t>(k)]);
        }
        EXPECT_LE(max_diff(es.vectors * lambda.asDiagonal() * es.vectors.adjoint(), h.matrix()), 1e-10);
        EXPECT_LE(max_diff(es.vectors.adjoint() * es.vectors, Matrix::Identity(8, 8)), 1e-10);
        EXPECT_NEAR(sum, h.trace().real(), 1e-10);
    }
}

TEST(operator_core, expm_examples) {
    std::mt19937_64 rng(13);
    const Operator h = herm(rng, {2, 2});
    EXPECT_LE(max_abs_diff(expm_hermitian(h, 0.0), Operator::identity({2, 2})), 1e-14);

    const Operator xx = tensor(pauli(1), pauli(1));
    const Operator u = expm_hermitian(xx, std::numbers::pi / 2);
    EXPECT_LE(max_abs_diff(u.matrix(), -I * xx.matrix()), 1e-14);

    const Operator z = expm_hermitian(pauli(3), std::numbers::pi);
    EXPECT_LE(max_abs_diff(z.matrix(), -Matrix::Identity(2, 2)), 1e-14);

    Matrix nh = Matrix::Zero(2, 2);
    nh(0, 1) = 1.0;
    EXPECT_THROW(expm_hermitian(Operator(nh), 1.0), Error);
}

TEST(operator_core, expm_is_unitary_and_first_order_consistent) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        const Operator h = herm(rng, {2, 2});
        const double norm = h.matrix().operatorNorm();
        EXPECT_TRUE(expm_hermitian(h, 0.7).is_unitary());
        for (double t : {1e-2, 1e-3, 1e-4}) {
            const Matrix first_order = Matrix::Identity(4, 4) - I * t * h.matrix();
            const double err = (expm_hermitian(h, t).matrix() - first_order).operatorNorm();
            EXPECT_LE(err, norm * norm * t * t);
        }
    }
}
