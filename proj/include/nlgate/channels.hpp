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

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nlgate/operator.hpp"
#include "nlgate/states.hpp"

namespace nlgate {

enum class TraceBehavior { trace_preserving, trace_non_increasing, unnormalized };

std::string_view to_string(TraceBehavior t);
TraceBehavior trace_behavior_from_string(std::string_view s);

inline constexpr double kChannelTol = 1e-9;

/// Completely positive map on A1 (x) B1 in Kraus form, rho -> sum_k O_k rho O_k^dag.
class QuantumChannel {
   public:
    /// Throws validation_error if a Kraus operator is not d^2 x d^2 or the
    /// declared trace behavior does not hold within 1e-9.
    QuantumChannel(std::vector<Operator> kraus, std::size_t d,
                   TraceBehavior trace = TraceBehavior::trace_preserving);

    /// Separable map built from local products: Kraus terms a_k (x) b_k.
    static QuantumChannel from_local_products(const std::vector<std::pair<Operator, Operator>> &terms,
                                              TraceBehavior trace = TraceBehavior::trace_preserving);

    static QuantumChannel unitary(const Operator &u);

    const std::vector<Operator> &kraus() const noexcept { return kraus_; }
    std::size_t d() const noexcept { return d_; }
    TraceBehavior trace_behavior() const noexcept { return trace_; }
    /// True when every Kraus operator was supplied as a local product.
    bool local_by_construction() const noexcept { return local_; }

   private:
    std::vector<Operator> kraus_;
    std::size_t d_;
    TraceBehavior trace_;
    bool local_ = false;
};

/// Choi operator E = E(P_{A1A2} (x) P_{B1B2}) on dims [d,d,d,d] ordered A1 A2 B1 B2.
/// Unit trace for trace-preserving channels.
class ChoiOperator {
   public:
    /// Throws validation_error unless op is Hermitian (1e-10) and PSD (1e-9)
    /// with dims {d,d,d,d}.
    ChoiOperator(Operator op, std::size_t d, bool local_by_construction = false);

    const Operator &op() const noexcept { return op_; }
    std::size_t d() const noexcept { return d_; }
    bool local_by_construction() const noexcept { return local_; }

   private:
    Operator op_;
    std::size_t d_;
    bool local_;
};

enum class Classification { separable_by_construction, npt_entangling, ppt_undecided };

std::string_view to_string(Classification c);

struct EntanglingVerdict {
    double ppt_min_eigenvalue = 0.0;
    Classification classification = Classification::ppt_undecided;
    int rank = 0;
    bool is_unitary = false;
};

struct PptResult {
    double min_eigenvalue = 0.0;
    bool is_ppt = false;
};

struct ProjectionResult {
    std::optional<Operator> state;  // empty when the outcome has zero probability
    double probability = 0.0;
};

Operator apply_channel(const QuantumChannel &ch, const Operator &rho);

ChoiOperator choi_of_channel(const QuantumChannel &ch);

/// E(rho) = d^2 tr_{A2B2}(E rho^T_{A2B2}).
Operator apply_via_choi(const ChoiOperator &e, const Operator &rho);

/// Holds e on A1A2B1B2 and rho_in on A3B3, projects A2A3 and B2B3 onto |Phi>,
/// and returns the normalized A1B1 state with the outcome probability.
ProjectionResult project_implement(const ChoiOperator &e, const Operator &rho_in);

/// Minimum eigenvalue of the partial transpose over cut.left.
PptResult ppt_check(const Operator &op, const Bipartition &cut);

/// PPT test, rank and unitarity across (A1A2)|(B1B2).
EntanglingVerdict classify(const ChoiOperator &e);

/// True when e equals X_{A1A2} (x) Y_{B1B2} within 1e-9.
bool is_product_across_cut(const ChoiOperator &e);

/// The (A1A2)|(B1B2) cut on Choi subsystems.
Bipartition choi_cut();

}  // namespace nlgate
