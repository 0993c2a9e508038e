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

#include "nlgate/operator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "nlgate/error.hpp"

namespace nlgate {

namespace {

std::string dims_str(const Dims &dims) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < dims.size(); ++k) os << (k ? "," : "") << dims[k];
    os << ']';
    return os.str();
}

// digits[i][k] = k-th tensor digit of basis index i.
std::vector<std::vector<std::size_t>> basis_digits(const Dims &dims) {
    const std::size_t total = product(dims);
    std::vector<std::vector<std::size_t>> digits(total, std::vector<std::size_t>(dims.size()));
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rem = i;
        for (std::size_t k = dims.size(); k-- > 0;) {
            digits[i][k] = rem % dims[k];
            rem /= dims[k];
        }
    }
    return digits;
}

std::size_t compose_index(std::span<const std::size_t> digits, const Dims &dims) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
    return idx;
}

// Sorted, duplicate-free copy of an index set; throws on out-of-range entries.
std::vector<std::size_t> checked_subset(std::span<const std::size_t> subset, std::size_t n,
                                        const char *what) {
    std::vector<std::size_t> out(subset.begin(), subset.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw domain_error(std::string(what) + ": repeated subsystem index");
    for (auto s : out)
        if (s >= n)
            throw domain_error(std::string(what) + ": subsystem index " + std::to_string(s) +
                               " out of range for " + std::to_string(n) + " subsystems");
    return out;
}

}  // namespace

std::size_t product(std::span<const std::size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

Operator::Operator(Matrix entries, Dims dims, std::vector<std::string> labels)
    : entries_(std::move(entries)), dims_(std::move(dims)), labels_(std::move(labels)) {
    if (entries_.rows() != entries_.cols())
        throw validation_error("operator matrix is not square (" + std::to_string(entries_.rows()) +
                               "x" + std::to_string(entries_.cols()) + ")");
    if (dims_.empty() || product(dims_) != dim())
        throw validation_error("operator dims " + dims_str(dims_) + " do not match matrix size " +
                               std::to_string(dim()));
    if (std::any_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; }))
        throw validation_error("operator dims must be positive");
    if (!labels_.empty() && labels_.size() != dims_.size())
        throw validation_error("operator labels must match the number of subsystems");
    if (!entries_.allFinite()) throw validation_error("operator contains NaN or Inf entries");
}

Operator::Operator(Matrix entries) : Operator(entries, Dims{static_cast<std::size_t>(entries.rows())}) {}

Operator Operator::identity(Dims dims) {
    const auto n = static_cast<Eigen::Index>(product(dims));
    return Operator(Matrix::Identity(n, n), std::move(dims));
}

Operator Operator::zero(Dims dims) {
    const auto n = static_cast<Eigen::Index>(product(dims));
    return Operator(Matrix::Zero(n, n), std::move(dims));
}

bool Operator::is_hermitian(double tol) const {
    return max_abs_diff(entries_, entries_.adjoint()) <= tol;
}

bool Operator::is_unitary(double tol) const {
    const auto n = entries_.rows();
    return max_abs_diff(entries_.adjoint() * entries_, Matrix::Identity(n, n)) <= tol;
}

bool Operator::is_positive_semidefinite(double tol) const {
    if (!is_hermitian(tol)) return false;
    return hermitian_eig(*this).values.back() >= -tol;
}

Operator Operator::adjoint() const { return Operator(entries_.adjoint(), dims_, labels_); }

Operator Operator::transpose() const { return Operator(entries_.transpose(), dims_, labels_); }

Operator Operator::with_dims(Dims dims, std::vector<std::string> labels) const {
    return Operator(entries_, std::move(dims), std::move(labels));
}

Operator operator*(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim())
        throw validation_error("operator product: dimension mismatch " + std::to_string(a.dim()) +
                               " vs " + std::to_string(b.dim()));
    return Operator(a.entries_ * b.entries_, a.dims_, a.labels_);
}

Operator operator+(const Operator &a, const Operator &b) {
    if (a.dims_ != b.dims_) throw validation_error("operator sum: dims mismatch");
    return Operator(a.entries_ + b.entries_, a.dims_, a.labels_);
}

Operator operator-(const Operator &a, const Operator &b) {
    if (a.dims_ != b.dims_) throw validation_error("operator difference: dims mismatch");
    return Operator(a.entries_ - b.entries_, a.dims_, a.labels_);
}

Operator operator*(Complex s, const Operator &a) { return Operator(s * a.entries_, a.dims_, a.labels_); }

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw validation_error("max_abs_diff: shape mismatch");
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

Operator tensor(const Operator &a, const Operator &b) {
    const Matrix &x = a.matrix();
    const Matrix &y = b.matrix();
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;

    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    std::vector<std::string> labels;
    if (!a.labels().empty() && !b.labels().empty()) {
        labels = a.labels();
        labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    }
    return Operator(std::move(out), std::move(dims), std::move(labels));
}

Operator tensor(std::span<const Operator> factors) {
    if (factors.empty()) return Operator(Matrix::Identity(1, 1), Dims{1});
    Operator acc = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) acc = tensor(acc, factors[k]);
    return acc;
}

Operator partial_trace(const Operator &op, std::span<const std::size_t> keep) {
    const Dims &dims = op.dims();
    const auto kept = checked_subset(keep, dims.size(), "partial_trace");

    Dims kept_dims, traced_dims;
    std::vector<bool> is_kept(dims.size(), false);
    for (auto k : kept) is_kept[k] = true;
    for (std::size_t k = 0; k < dims.size(); ++k) (is_kept[k] ? kept_dims : traced_dims).push_back(dims[k]);

    // Split every basis index into (kept index, traced index).
    const auto digits = basis_digits(dims);
    const std::size_t total = op.dim();
    std::vector<std::size_t> kept_idx(total), traced_idx(total);
    std::vector<std::size_t> kd, td;
    for (std::size_t i = 0; i < total; ++i) {
        kd.clear();
        td.clear();
        for (std::size_t k = 0; k < dims.size(); ++k) (is_kept[k] ? kd : td).push_back(digits[i][k]);
        kept_idx[i] = compose_index(kd, kept_dims);
        traced_idx[i] = compose_index(td, traced_dims);
    }

    const std::size_t out_dim = product(kept_dims);
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(out_dim), static_cast<Eigen::Index>(out_dim));
    const Matrix &m = op.matrix();
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j)
            if (traced_idx[i] == traced_idx[j]) out(kept_idx[i], kept_idx[j]) += m(i, j);

    if (kept_dims.empty()) kept_dims.push_back(1);
    std::vector<std::string> labels;
    if (!op.labels().empty())
        for (auto k : kept) labels.push_back(op.labels()[k]);
    if (kept.empty()) labels.clear();
    return Operator(std::move(out), std::move(kept_dims), std::move(labels));
}

Operator partial_transpose(const Operator &op, std::span<const std::size_t> subsystems) {
    const Dims &dims = op.dims();
    const auto selected = checked_subset(subsystems, dims.size(), "partial_transpose");
    if (selected.empty()) return op;

    const auto digits = basis_digits(dims);
    const std::size_t total = op.dim();
    const Matrix &m = op.matrix();
    Matrix out(m.rows(), m.cols());
    std::vector<std::size_t> row(dims.size()), col(dims.size());
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            row = digits[i];
            col = digits[j];
            for (auto s : selected) std::swap(row[s], col[s]);
            out(compose_index(row, dims), compose_index(col, dims)) = m(i, j);
        }
    }
    return Operator(std::move(out), dims, op.labels());
}

namespace {

std::vector<std::size_t> permutation_map(const Dims &dims, std::span<const std::size_t> order,
                                         Dims &new_dims) {
    if (order.size() != dims.size()) throw domain_error("permute_subsystems: order has wrong length");
    const auto check = checked_subset(order, dims.size(), "permute_subsystems");
    (void)check;
    new_dims.resize(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) new_dims[k] = dims[order[k]];

    const auto digits = basis_digits(dims);
    std::vector<std::size_t> map(digits.size());
    std::vector<std::size_t> nd(dims.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        for (std::size_t k = 0; k < dims.size(); ++k) nd[k] = digits[i][order[k]];
        map[i] = compose_index(nd, new_dims);
    }
    return map;
}

}  // namespace

Operator permute_subsystems(const Operator &op, std::span<const std::size_t> order) {
    Dims new_dims;
    const auto map = permutation_map(op.dims(), order, new_dims);
    const Matrix &m = op.matrix();
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = 0; j < map.size(); ++j) out(map[i], map[j]) = m(i, j);
    std::vector<std::string> labels;
    if (!op.labels().empty())
        for (auto k : order) labels.push_back(op.labels()[k]);
    return Operator(std::move(out), std::move(new_dims), std::move(labels));
}

Vector permute_subsystems(const Vector &v, const Dims &dims, std::span<const std::size_t> order) {
    if (static_cast<std::size_t>(v.size()) != product(dims))
        throw validation_error("permute_subsystems: vector length does not match dims");
    Dims new_dims;
    const auto map = permutation_map(dims, order, new_dims);
    Vector out(v.size());
    for (std::size_t i = 0; i < map.size(); ++i) out(map[i]) = v(i);
    return out;
}

Operator embed(const Operator &op, std::span<const std::size_t> targets, const Dims &dims) {
    const auto sorted = checked_subset(targets, dims.size(), "embed");
    if (sorted.size() != op.num_subsystems())
        throw validation_error("embed: operator has " + std::to_string(op.num_subsystems()) +
                               " subsystems but " + std::to_string(targets.size()) + " targets given");
    for (std::size_t k = 0; k < targets.size(); ++k)
        if (op.dims()[k] != dims[targets[k]])
            throw validation_error("embed: target dimension mismatch");

    // Factor list of op (x) I_rest is [targets..., rest...]; position[m] locates subsystem m in it.
    std::vector<std::size_t> position(dims.size());
    Dims rest_dims;
    std::vector<bool> is_target(dims.size(), false);
    for (std::size_t k = 0; k < targets.size(); ++k) {
        position[targets[k]] = k;
        is_target[targets[k]] = true;
    }
    std::size_t next = targets.size();
    for (std::size_t m = 0; m < dims.size(); ++m) {
        if (is_target[m]) continue;
        position[m] = next++;
        rest_dims.push_back(dims[m]);
    }
    if (rest_dims.empty()) return permute_subsystems(op.with_dims(op.dims()), position);
    const Operator full = tensor(op.with_dims(op.dims()), Operator::identity(rest_dims));
    return permute_subsystems(full, position);
}

EigenSystem hermitian_eig(const Operator &op) {
    if (!op.is_hermitian())
        throw domain_error("hermitian_eig: operator is not Hermitian within " +
                           std::to_string(kStructuralTol));
    const Matrix sym = 0.5 * (op.matrix() + op.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    const auto n = sym.rows();
    EigenSystem out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors.resize(n, n);
    // Eigen returns ascending order.
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(n - 1 - k);
        out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    }
    return out;
}

Operator expm_hermitian(const Operator &h, double t) {
    const EigenSystem es = hermitian_eig(h);
    Vector phases(static_cast<Eigen::Index>(es.values.size()));
    for (std::size_t k = 0; k < es.values.size(); ++k)
        phases(static_cast<Eigen::Index>(k)) = std::exp(Complex(0.0, -es.values[k] * t));
    return Operator(es.vectors * phases.asDiagonal() * es.vectors.adjoint(), h.dims(), h.labels());
}

Operator pauli(int index) {
    Matrix m(2, 2);
    const Complex i(0.0, 1.0);
    switch (index) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -i, i, 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw domain_error("pauli: index must be 0..3, got " + std::to_string(index));
    }
    return Operator(std::move(m));
}

Operator projector(const Vector &v, Dims dims) { return Operator(v * v.adjoint(), std::move(dims)); }

}  // namespace nlgate
