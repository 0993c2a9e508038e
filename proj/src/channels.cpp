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

#include "nlgate/channels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "nlgate/error.hpp"

namespace nlgate {

std::string_view to_string(TraceBehavior t) {
    switch (t) {
        case TraceBehavior::trace_preserving: return "trace-preserving";
        case TraceBehavior::trace_non_increasing: return "trace-non-increasing";
        case TraceBehavior::unnormalized: return "unnormalized";
    }
    return "unknown";
}

TraceBehavior trace_behavior_from_string(std::string_view s) {
    if (s == "trace-preserving") return TraceBehavior::trace_preserving;
    if (s == "trace-non-increasing") return TraceBehavior::trace_non_increasing;
    if (s == "unnormalized") return TraceBehavior::unnormalized;
    throw validation_error("unknown trace_flag '" + std::string(s) + "'");
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::separable_by_construction: return "separable-by-construction";
        case Classification::npt_entangling: return "NPT-entangling";
        case Classification::ppt_undecided: return "PPT-undecided";
    }
    return "unknown";
}

QuantumChannel::QuantumChannel(std::vector<Operator> kraus, std::size_t d, TraceBehavior trace)
    : d_(d), trace_(trace) {
    if (d < 1) throw validation_error("channel dimension must be positive");
    if (kraus.empty()) throw validation_error("channel needs at least one Kraus operator");
    const std::size_t n = d * d;
    kraus_.reserve(kraus.size());
    for (std::size_t k = 0; k < kraus.size(); ++k) {
        if (kraus[k].dim() != n)
            throw validation_error("Kraus operator " + std::to_string(k) + " has dimension " +
                                   std::to_string(kraus[k].dim()) + ", expected " + std::to_string(n));
        kraus_.push_back(kraus[k].with_dims({d, d}));
    }

    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto &o : kraus_) sum += o.matrix().adjoint() * o.matrix();
    const Matrix id = Matrix::Identity(sum.rows(), sum.cols());
    if (trace_ == TraceBehavior::trace_preserving && max_abs_diff(sum, id) > kChannelTol)
        throw validation_error("Kraus operators are not trace preserving: |sum O^dag O - I| = " +
                               std::to_string(max_abs_diff(sum, id)));
    if (trace_ == TraceBehavior::trace_non_increasing) {
        const Matrix gap = id - sum;
        const Operator slack(0.5 * (gap + gap.adjoint()), {d, d});
        if (hermitian_eig(slack).values.back() < -kChannelTol)
            throw validation_error("Kraus operators increase the trace");
    }
}

QuantumChannel QuantumChannel::from_local_products(const std::vector<std::pair<Operator, Operator>> &terms,
                                                   TraceBehavior trace) {
    if (terms.empty()) throw validation_error("channel needs at least one Kraus operator");
    const std::size_t d = terms.front().first.dim();
    std::vector<Operator> kraus;
    for (const auto &[a, b] : terms) {
        if (a.dim() != d || b.dim() != d) throw validation_error("local Kraus factors must all be d x d");
        kraus.push_back(tensor(a.with_dims({d}), b.with_dims({d})));
    }
    QuantumChannel ch(std::move(kraus), d, trace);
    ch.local_ = true;
    return ch;
}

QuantumChannel QuantumChannel::unitary(const Operator &u) {
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(u.dim()))));
    if (d * d != u.dim()) throw validation_error("unitary channel needs a d^2 x d^2 matrix");
    if (!u.is_unitary(kChannelTol)) throw validation_error("operator is not unitary");
    return QuantumChannel({u}, d, TraceBehavior::trace_preserving);
}

ChoiOperator::ChoiOperator(Operator op, std::size_t d, bool local_by_construction)
    : op_(std::move(op)), d_(d), local_(local_by_construction) {
    if (op_.dims() != Dims{d, d, d, d}) {
        if (op_.dim() != d * d * d * d) throw validation_error("Choi operator must act on d^4 dimensions");
        op_ = op_.with_dims({d, d, d, d}, {"A1", "A2", "B1", "B2"});
    }
    if (!op_.is_hermitian()) throw validation_error("Choi operator is not Hermitian");
    const double min_eig = hermitian_eig(op_).values.back();
    if (min_eig < -kChannelTol)
        throw validation_error("Choi operator is not positive semidefinite (min eigenvalue " +
                               std::to_string(min_eig) + ")");
}

Bipartition choi_cut() { return Bipartition{{0, 1}, {2, 3}}; }

namespace {

void check_input_state(const Operator &rho, std::size_t d, const char *what) {
    if (rho.dim() != d * d)
        throw validation_error(std::string(what) + ": input has dimension " + std::to_string(rho.dim()) +
                               ", expected " + std::to_string(d * d));
}

constexpr std::array<std::size_t, 2> kA1B1{0, 2};
constexpr std::array<std::size_t, 2> kA2B2{1, 3};

}  // namespace

Operator apply_channel(const QuantumChannel &ch, const Operator &rho) {
    check_input_state(rho, ch.d(), "apply_channel");
    const Matrix &r = rho.matrix();
    Matrix out = Matrix::Zero(r.rows(), r.cols());
    for (const auto &o : ch.kraus()) out += o.matrix() * r * o.matrix().adjoint();
    return Operator(std::move(out), {ch.d(), ch.d()});
}

ChoiOperator choi_of_channel(const QuantumChannel &ch) {
    const std::size_t d = ch.d();
    const Dims dims{d, d, d, d};
    const Operator p = max_entangled(d).density();
    const Operator pp = tensor(p, p);  // A1 A2 B1 B2
    Matrix e = Matrix::Zero(pp.matrix().rows(), pp.matrix().cols());
    for (const auto &o : ch.kraus()) {
        const Matrix k = embed(o, kA1B1, dims).matrix();
        e += k * pp.matrix() * k.adjoint();
    }
    return ChoiOperator(Operator(std::move(e), dims, {"A1", "A2", "B1", "B2"}), d,
                        ch.local_by_construction());
}

Operator apply_via_choi(const ChoiOperator &e, const Operator &rho) {
    const std::size_t d = e.d();
    check_input_state(rho, d, "apply_via_choi");
    const Dims dims{d, d, d, d};
    const Operator rho_t = embed(rho.transpose().with_dims({d, d}), kA2B2, dims);
    const Operator reduced = partial_trace(e.op() * rho_t, kA1B1);
    const double scale = static_cast<double>(d * d);
    return Operator(scale * reduced.matrix(), {d, d});
}

ProjectionResult project_implement(const ChoiOperator &e, const Operator &rho_in) {
    const std::size_t d = e.d();
    check_input_state(rho_in, d, "project_implement");
    // Subsystems: 0 A1, 1 A2, 2 B1, 3 B2, 4 A3, 5 B3.
    const Dims dims(6, d);
    const Operator joint = tensor(e.op().with_dims({d, d, d, d}), rho_in.with_dims({d, d}));
    const Operator phi = max_entangled(d).density();
    const std::array<std::size_t, 2> a23{1, 4};
    const std::array<std::size_t, 2> b23{3, 5};
    const Operator proj = embed(phi, a23, dims) * embed(phi, b23, dims);
    const Operator post = partial_trace(proj * joint * proj, kA1B1);

    ProjectionResult result;
    result.probability = std::max(0.0, post.trace().real());
    if (result.probability > 1e-15)
        result.state = Operator(post.matrix() / result.probability, {d, d});
    return result;
}

PptResult ppt_check(const Operator &op, const Bipartition &cut) {
    if (!op.is_hermitian()) throw domain_error("ppt_check: operator is not Hermitian");
    const Operator pt = partial_transpose(op, cut.left);
    PptResult r;
    r.min_eigenvalue = hermitian_eig(pt).values.back();
    r.is_ppt = r.min_eigenvalue >= -kChannelTol;
    return r;
}

bool is_product_across_cut(const ChoiOperator &e) {
    // Realign E[(ra rb),(ca cb)] into R[(ra ca),(rb cb)]; a product X (x) Y has rank-one R.
    const auto da = static_cast<Eigen::Index>(e.d() * e.d());
    const Matrix &m = e.op().matrix();
    Matrix r(da * da, da * da);
    for (Eigen::Index ra = 0; ra < da; ++ra)
        for (Eigen::Index rb = 0; rb < da; ++rb)
            for (Eigen::Index ca = 0; ca < da; ++ca)
                for (Eigen::Index cb = 0; cb < da; ++cb) r(ra * da + ca, rb * da + cb) = m(ra * da + rb, ca * da + cb);
    Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Matrix rank_one =
        svd.singularValues()(0) * svd.matrixU().col(0) * svd.matrixV().col(0).adjoint();
    return max_abs_diff(r, rank_one) <= kChannelTol;
}

EntanglingVerdict classify(const ChoiOperator &e) {
    EntanglingVerdict v;
    v.ppt_min_eigenvalue = ppt_check(e.op(), choi_cut()).min_eigenvalue;

    const auto es = hermitian_eig(e.op());
    v.rank = static_cast<int>(std::count_if(es.values.begin(), es.values.end(),
                                            [](double x) { return x > kChannelTol; }));

    // Trace preserving iff tr_{A1B1} E = 1/d^2 on A2B2.
    const std::size_t d = e.d();
    const Operator marginal = partial_trace(e.op(), kA2B2);
    const Matrix target = Matrix::Identity(marginal.matrix().rows(), marginal.matrix().cols()) /
                          static_cast<double>(d * d);
    const bool trace_preserving = max_abs_diff(marginal.matrix(), target) <= kChannelTol;
    v.is_unitary = v.rank == 1 && trace_preserving;

    if (v.ppt_min_eigenvalue < -kChannelTol)
        v.classification = Classification::npt_entangling;
    else if (e.local_by_construction() || is_product_across_cut(e))
        v.classification = Classification::separable_by_construction;
    else
        v.classification = Classification::ppt_undecided;
    return v;
}

}  // namespace nlgate
