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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nlgate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

/// Tolerance for the Hermitian / unitary / PSD predicates.
inline constexpr double kStructuralTol = 1e-10;

/// Dense operator on a tensor-product space.
///
/// Subsystem 0 is the most significant tensor factor: the basis state
/// |i_0 i_1 ... i_{n-1}> has index sum_k i_k * prod_{m>k} dims[m].
/// Values are immutable once constructed.
class Operator {
   public:
    /// Throws validation_error when the matrix is not square, its size does
    /// not match prod(dims), or an entry is NaN/Inf.
    Operator(Matrix entries, Dims dims, std::vector<std::string> labels = {});

    /// Single-subsystem operator; dims = {rows}.
    explicit Operator(Matrix entries);

    static Operator identity(Dims dims);
    static Operator zero(Dims dims);

    const Matrix &matrix() const noexcept { return entries_; }
    const Dims &dims() const noexcept { return dims_; }
    const std::vector<std::string> &labels() const noexcept { return labels_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    std::size_t num_subsystems() const noexcept { return dims_.size(); }

    Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }
    Complex trace() const { return entries_.trace(); }

    bool is_hermitian(double tol = kStructuralTol) const;
    bool is_unitary(double tol = kStructuralTol) const;
    bool is_positive_semidefinite(double tol = kStructuralTol) const;

    Operator adjoint() const;
    Operator transpose() const;
    /// Same entries, different subsystem bookkeeping (products must agree).
    Operator with_dims(Dims dims, std::vector<std::string> labels = {}) const;

    friend Operator operator*(const Operator &a, const Operator &b);
    friend Operator operator+(const Operator &a, const Operator &b);
    friend Operator operator-(const Operator &a, const Operator &b);
    friend Operator operator*(Complex s, const Operator &a);

   private:
    Matrix entries_;
    Dims dims_;
    std::vector<std::string> labels_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix &a, const Matrix &b);
inline double max_abs_diff(const Operator &a, const Operator &b) {
    return max_abs_diff(a.matrix(), b.matrix());
}

std::size_t product(std::span<const std::size_t> dims);

/// Kronecker product, first factor most significant; dims concatenate.
Operator tensor(const Operator &a, const Operator &b);
Operator tensor(std::span<const Operator> factors);

/// Traces out every subsystem not listed in keep. Kept subsystems stay in
/// their original relative order. Throws domain_error on a bad index.
Operator partial_trace(const Operator &op, std::span<const std::size_t> keep);

/// Transposes the listed factors in the computational basis.
Operator partial_transpose(const Operator &op, std::span<const std::size_t> subsystems);

/// Reorders tensor factors: factor k of the result is factor order[k] of op.
Operator permute_subsystems(const Operator &op, std::span<const std::size_t> order);
Vector permute_subsystems(const Vector &v, const Dims &dims, std::span<const std::size_t> order);

/// Lifts op (acting on the listed subsystems, in that order) to the full
/// space described by dims, acting as the identity elsewhere.
Operator embed(const Operator &op, std::span<const std::size_t> targets, const Dims &dims);

struct EigenSystem {
    std::vector<double> values;  // descending
    Matrix vectors;              // orthonormal columns matching values
};

/// Hermitian eigendecomposition. Throws domain_error for non-Hermitian input.
EigenSystem hermitian_eig(const Operator &op);

/// exp(-i h t) via the eigendecomposition of h.
Operator expm_hermitian(const Operator &h, double t);

/// Pauli matrices indexed 0..3 as I, X, Y, Z.
Operator pauli(int index);

/// Vector as a rank-one projector |v><v|.
Operator projector(const Vector &v, Dims dims);

}  // namespace nlgate
