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
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "nlgate/operator.hpp"
#include "nlgate/states.hpp"

namespace nlgate {

/// Bell-basis outcome |Psi_{first,second}>, 1-based as in bell_state().
struct BellOutcome {
    int first = 1;
    int second = 1;
    friend bool operator==(const BellOutcome &, const BellOutcome &) = default;
};

/// Outcomes of the A2A3 and B2B3 measurements in one step.
struct OutcomePair {
    BellOutcome a;
    BellOutcome b;
    friend bool operator==(const OutcomePair &, const OutcomePair &) = default;
};

/// All 16 outcome pairs, a-major.
std::array<OutcomePair, 16> all_outcome_pairs();

/// Supplies the measurement outcomes for step k (1-based).
using OutcomeSource = std::function<OutcomePair(int k)>;

/// Uniform over the 16 pairs. The generator is held by reference.
OutcomeSource uniform_outcomes(std::mt19937_64 &rng);

/// Replays a fixed script; throws domain_error if the protocol asks for more
/// steps than scripted.
OutcomeSource scripted_outcomes(std::vector<OutcomePair> script);

/// Success when both parties see the same first Bell index.
constexpr bool step_succeeds(const OutcomePair &o) { return o.a.first == o.b.first; }

/// How a step's action on A1B1 is obtained.
enum class ExecutionPath {
    fast,          // sample outcomes and apply U(+-phase) directly
    state_vector,  // contract the A1A2A3B1B2B3 state vector
};

struct StepRecord {
    int k = 0;
    double resource_phase = 0.0;  // 2^{k-1} alpha_N
    OutcomePair outcome;
    bool success = false;
    std::array<int, 2> correction_a{1, 1};  // Bell index of the Pauli applied to A1
    std::array<int, 2> correction_b{1, 1};  // same for B1
    double ebits_consumed = 0.0;
    int classical_bits = 0;  // per direction
    int raw_outcome_bits = 2;  // per direction, informational
};

struct StepResult {
    StepRecord record;
    Operator cumulative;
};

/// alpha_N = pi / 2^N
double binary_phase(int n);

/// Runs step k of the N-step ladder on top of cumulative (the net unitary on
/// A1B1 so far). Throws domain_error for k outside 1..n or bad outcome indices.
StepResult simulate_step(const Operator &cumulative, int k, int n, const OutcomeSource &source,
                         ExecutionPath path = ExecutionPath::fast);

/// Unnormalized A1B1 vector after preparing resource_state(phase) on
/// A1A2B1B2, input on A3B3, projecting A2A3 and B2B3 onto the given Bell
/// states and applying the Pauli corrections. Its squared norm is the
/// outcome probability.
Vector bell_measurement_branch(double phase, const OutcomePair &outcome, const Vector &input);

/// Linear map on A1B1 realized by one outcome branch, scaled to be unitary
/// (branch probability 1/16 for every input).
Operator branch_operator(double phase, const OutcomePair &outcome);

/// |tr(U^dag V)| / 4
double gate_fidelity(const Operator &u, const Operator &v);

struct ProtocolTrace {
    int target_n = 0;
    std::vector<StepRecord> steps;
    double total_ebits = 0.0;
    int total_classical_bits_per_direction = 0;
    int total_raw_outcome_bits_per_direction = 0;
    Operator effective_unitary = Operator::identity({2, 2});
    double fidelity_with_target = 0.0;
};

/// Escalating protocol for U(pi/2^n): resources at phases alpha_N, 2 alpha_N, ...
/// until the first success or step n. n = 1 applies the local gate directly.
ProtocolTrace run_protocol(int n, const OutcomeSource &source, ExecutionPath path = ExecutionPath::fast);

/// f_N = (1/pi) sum_{k=1}^N 2^k E(psi_{alpha_k})
double f_series(int n);

/// Limit of f_N, summing until a term falls below tol.
double f_infinity(double tol = 1e-12);

/// 2 sqrt(x(1-x)) log2((1-x)/x)
double capability_maximand(double x);

/// max over x in (0, 1/2) of capability_maximand.
double capability_constant();

double capability_ratio();

struct CostReport {
    int n = 0;
    double expected_ebits = 0.0;   // sum_k (1/2)^{k-1} E(psi_{alpha_{N-k+1}})
    double series_form = 0.0;      // alpha_N f_N
    double f_n = 0.0;
    double expected_classical_bits_per_direction = 0.0;  // 2 - (1/2)^{N-2}
    double expected_raw_outcome_bits_per_direction = 0.0;
    double capability = 0.0;  // beta alpha_N
    double ratio = 0.0;       // expected_ebits / capability
};

/// Throws std::logic_error if the two forms disagree by more than 1e-12.
CostReport expected_cost(int n);

struct MonteCarloSummary {
    int n = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double mean_ebits = 0.0;
    double stderr_ebits = 0.0;
    double mean_classical_bits = 0.0;  // per direction
    double stderr_classical_bits = 0.0;
    double first_step_success_rate = 0.0;
    double stderr_first_step_success = 0.0;
    double min_fidelity = 1.0;
    std::map<int, std::int64_t> steps_histogram;  // steps taken -> count
};

/// Independent trials; trial i draws from an engine seeded by (seed, i).
MonteCarloSummary monte_carlo(int n, std::int64_t trials, std::uint64_t seed,
                              ExecutionPath path = ExecutionPath::fast);

/// Generator for trial index i of a run seeded with seed.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

}  // namespace nlgate
