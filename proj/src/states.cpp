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

#include "nlgate/states.hpp"

#include <algorithm>
#include <cmath>

#include "nlgate/error.hpp"

namespace nlgate {

PureState::PureState(Vector amplitudes, Dims dims) : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
    if (dims_.empty() || product(dims_) != static_cast<std::size_t>(amplitudes_.size()))
        throw validation_error("state length " + std::to_string(amplitudes_.size()) +
                               " does not match its dims");
    if (!amplitudes_.allFinite()) throw validation_error("state contains NaN or Inf amplitudes");
    if (std::abs(amplitudes_.norm() - 1.0) > kStructuralTol)
        throw validation_error("state is not normalized (norm " + std::to_string(amplitudes_.norm()) + ")");
}

PureState PureState::normalized(Vector amplitudes, Dims dims) {
    const double n = amplitudes.norm();
    if (!(n > 0.0)) throw domain_error("cannot normalize a zero vector");
    return PureState(amplitudes / n, std::move(dims));
}

Complex PureState::inner(const PureState &other) const {
    if (other.amplitudes_.size() != amplitudes_.size()) throw validation_error("inner product: length mismatch");
    return amplitudes_.dot(other.amplitudes_);
}

PureState tensor(const PureState &a, const PureState &b) {
    const Vector &x = a.amplitudes();
    const Vector &y = b.amplitudes();
    Vector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return PureState(std::move(out), std::move(dims));
}

Bipartition Bipartition::from_left(std::vector<std::size_t> left, std::size_t n) {
    Bipartition cut;
    cut.left = std::move(left);
    for (std::size_t k = 0; k < n; ++k)
        if (std::find(cut.left.begin(), cut.left.end(), k) == cut.left.end()) cut.right.push_back(k);
    return cut;
}

PureState max_entangled(std::size_t d) {
    if (d < 2) throw domain_error("max_entangled: dimension must be at least 2");
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d * d));
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) v(static_cast<Eigen::Index>(i * d + i)) = amp;
    return PureState(std::move(v), Dims{d, d});
}

Operator bell_pauli(int i1, int i2) {
    if (i1 < 1 || i1 > 2 || i2 < 1 || i2 > 2)
        throw domain_error("Bell indices must be in {1,2}, got (" + std::to_string(i1) + "," +
                           std::to_string(i2) + ")");
    return pauli(2 * (i1 - 1) + (i2 - 1));
}

PureState bell_state(int i1, int i2) {
    const Operator sigma = bell_pauli(i1, i2);
    const Operator local = tensor(Operator::identity({2}), sigma);
    return PureState(local.matrix() * max_entangled(2).amplitudes(), Dims{2, 2});
}

PureState resource_state(double alpha) {
    // Phi+ (x) Phi+ and Psi+ (x) Psi+ with the pairs as (A1A2)(B1B2).
    const Vector phi = bell_state(1, 1).amplitudes();
    const Vector psi = bell_state(1, 2).amplitudes();
    const PureState pp(phi, {2, 2});
    const PureState ss(psi, {2, 2});
    const Vector v = std::cos(alpha) * tensor(pp, pp).amplitudes() +
                     Complex(0.0, -std::sin(alpha)) * tensor(ss, ss).amplitudes();
    return PureState(v, Dims{2, 2, 2, 2});
}

namespace {

void validate_cut(const Bipartition &cut, std::size_t n) {
    if (cut.left.empty() || cut.right.empty()) throw domain_error("schmidt: both sides of the cut must be non-empty");
    std::vector<std::size_t> all = cut.left;
    all.insert(all.end(), cut.right.begin(), cut.right.end());
    std::sort(all.begin(), all.end());
    if (all.size() != n || std::adjacent_find(all.begin(), all.end()) != all.end() || all.back() >= n)
        throw domain_error("schmidt: cut is not a partition of the state's subsystems");
}

}  // namespace

SchmidtForm schmidt(const PureState &psi, const Bipartition &cut) {
    const Dims &dims = psi.dims();
    validate_cut(cut, dims.size());

    std::vector<std::size_t> order = cut.left;
    order.insert(order.end(), cut.right.begin(), cut.right.end());
    const Vector permuted = permute_subsystems(psi.amplitudes(), dims, order);

    SchmidtForm form;
    form.cut = cut;
    for (auto k : cut.left) form.left_dims.push_back(dims[k]);
    for (auto k : cut.right) form.right_dims.push_back(dims[k]);
    const auto dl = static_cast<Eigen::Index>(product(form.left_dims));
    const auto dr = static_cast<Eigen::Index>(product(form.right_dims));

    // Row-major reshape: amplitude matrix M(l, r) = <l r|psi>.
    Matrix m(dl, dr);
    for (Eigen::Index l = 0; l < dl; ++l)
        for (Eigen::Index r = 0; r < dr; ++r) m(l, r) = permuted(l * dr + r);

    const Operator reduced(m * m.adjoint(), form.left_dims);
    const EigenSystem es = hermitian_eig(reduced);

    std::vector<Eigen::Index> kept;
    for (std::size_t k = 0; k < es.values.size(); ++k)
        if (es.values[k] > kSchmidtCutoff) kept.push_back(static_cast<Eigen::Index>(k));

    form.left_vectors.resize(dl, static_cast<Eigen::Index>(kept.size()));
    form.right_vectors.resize(dr, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t j = 0; j < kept.size(); ++j) {
        const auto k = kept[j];
        const double c = std::sqrt(es.values[static_cast<std::size_t>(k)]);
        form.coefficients.push_back(c);
        const Vector l = es.vectors.col(k);
        form.left_vectors.col(static_cast<Eigen::Index>(j)) = l;
        // |r_k> = (<l_k| (x) 1)|psi> / c_k
        form.right_vectors.col(static_cast<Eigen::Index>(j)) = m.transpose() * l.conjugate() / c;
    }
    return form;
}

Vector SchmidtForm::reconstruct() const {
    const Eigen::Index dl = left_vectors.rows();
    const Eigen::Index dr = right_vectors.rows();
    Vector v = Vector::Zero(dl * dr);
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        const auto j = static_cast<Eigen::Index>(k);
        for (Eigen::Index l = 0; l < dl; ++l)
            v.segment(l * dr, dr) += coefficients[k] * left_vectors(l, j) * right_vectors.col(j);
    }
    // Undo the left|right reordering.
    std::vector<std::size_t> order = cut.left;
    order.insert(order.end(), cut.right.begin(), cut.right.end());
    std::vector<std::size_t> inverse(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) inverse[order[k]] = k;
    Dims grouped = left_dims;
    grouped.insert(grouped.end(), right_dims.begin(), right_dims.end());
    return permute_subsystems(v, grouped, inverse);
}

double entropy_of_entanglement(const PureState &psi, const Bipartition &cut) {
    const SchmidtForm form = schmidt(psi, cut);
    double e = 0.0;
    for (double c : form.coefficients) {
        const double p = c * c;
        e -= p * std::log2(p);
    }
    return std::max(e, 0.0);
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    // log1p keeps the (1-p) term accurate for small p.
    return -p * std::log2(p) - (1.0 - p) * std::log1p(-p) / std::log(2.0);
}

double resource_entropy(double alpha) {
    // Squared Schmidt coefficients sin^2 and cos^2, each logged through
    // log1p of the other when that one is small.
    const double s2 = std::sin(alpha) * std::sin(alpha);
    const double c2 = std::cos(alpha) * std::cos(alpha);
    auto xlog2x = [](double x, double other) {
        if (x <= 0.0) return 0.0;
        const double lg = other < 0.5 ? std::log1p(-other) / std::log(2.0) : std::log2(x);
        return x * lg;
    };
    return std::max(0.0, -xlog2x(s2, c2) - xlog2x(c2, s2));
}

}  // namespace nlgate
