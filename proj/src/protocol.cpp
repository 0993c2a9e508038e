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

#include "nlgate/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nlgate/error.hpp"
#include "nlgate/gates.hpp"

namespace nlgate {

namespace {

constexpr double kPi = std::numbers::pi;

void check_outcome(const BellOutcome &o) {
    if (o.first < 1 || o.first > 2 || o.second < 1 || o.second > 2)
        throw domain_error("Bell outcome indices must be in {1,2}, got (" + std::to_string(o.first) + "," +
                           std::to_string(o.second) + ")");
}

}  // namespace

std::array<OutcomePair, 16> all_outcome_pairs() {
    std::array<OutcomePair, 16> out{};
    std::size_t idx = 0;
    for (int a1 = 1; a1 <= 2; ++a1)
        for (int a2 = 1; a2 <= 2; ++a2)
            for (int b1 = 1; b1 <= 2; ++b1)
                for (int b2 = 1; b2 <= 2; ++b2) out[idx++] = OutcomePair{{a1, a2}, {b1, b2}};
    return out;
}

OutcomeSource uniform_outcomes(std::mt19937_64 &rng) {
    return [&rng](int) {
        static const auto pairs = all_outcome_pairs();
        std::uniform_int_distribution<int> pick(0, 15);
        return pairs[static_cast<std::size_t>(pick(rng))];
    };
}

OutcomeSource scripted_outcomes(std::vector<OutcomePair> script) {
    return [script = std::move(script)](int k) {
        if (k < 1 || static_cast<std::size_t>(k) > script.size())
            throw domain_error("outcome script has no entry for step " + std::to_string(k));
        return script[static_cast<std::size_t>(k - 1)];
    };
}

double binary_phase(int n) { return kPi / std::ldexp(1.0, n); }

Vector bell_measurement_branch(double phase, const OutcomePair &outcome, const Vector &input) {
    check_outcome(outcome.a);
    check_outcome(outcome.b);
    if (input.size() != 4) throw validation_error("bell_measurement_branch: input must be a two-qubit vector");

    // Resource on A1A2B1B2, input on A3B3, regrouped as A1A2A3B1B2B3.
    const PureState resource = resource_state(phase);
    Vector joint(64);
    for (Eigen::Index r = 0; r < 16; ++r) joint.segment(r * 4, 4) = resource.amplitudes()(r) * input;
    static constexpr std::array<std::size_t, 6> kRegroup{0, 1, 4, 2, 3, 5};
    const Vector state = permute_subsystems(joint, Dims(6, 2), kRegroup);

    const Vector bell_a = bell_state(outcome.a.first, outcome.a.second).amplitudes();
    const Vector bell_b = bell_state(outcome.b.first, outcome.b.second).amplitudes();

    // out(a1 b1) = sum <bell_a|_{A2A3} <bell_b|_{B2B3} |state>
    Vector out = Vector::Zero(4);
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1) {
            Complex acc = 0.0;
            for (int a23 = 0; a23 < 4; ++a23)
                for (int b23 = 0; b23 < 4; ++b23) {
                    const int idx = ((a1 * 4 + a23) * 2 + b1) * 4 + b23;
                    acc += std::conj(bell_a(a23)) * std::conj(bell_b(b23)) * state(idx);
                }
            out(a1 * 2 + b1) = acc;
        }

    const Operator correction =
        tensor(bell_pauli(outcome.a.first, outcome.a.second), bell_pauli(outcome.b.first, outcome.b.second));
    return correction.matrix() * out;
}

Operator branch_operator(double phase, const OutcomePair &outcome) {
    Matrix m(4, 4);
    for (Eigen::Index c = 0; c < 4; ++c)
        m.col(c) = 4.0 * bell_measurement_branch(phase, outcome, Vector::Unit(4, c));
    return Operator(m, {2, 2});
}

double gate_fidelity(const Operator &u, const Operator &v) {
    return std::abs((u.matrix().adjoint() * v.matrix()).trace()) / static_cast<double>(u.dim());
}

StepResult simulate_step(const Operator &cumulative, int k, int n, const OutcomeSource &source, ExecutionPath path) {
    if (n < 1 || k < 1 || k > n)
        throw domain_error("simulate_step: need 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    StepRecord rec;
    rec.k = k;
    rec.resource_phase = std::ldexp(binary_phase(n), k - 1);
    rec.outcome = source(k);
    check_outcome(rec.outcome.a);
    check_outcome(rec.outcome.b);
    rec.success = step_succeeds(rec.outcome);
    rec.correction_a = {rec.outcome.a.first, rec.outcome.a.second};
    rec.correction_b = {rec.outcome.b.first, rec.outcome.b.second};
    rec.ebits_consumed = resource_entropy(rec.resource_phase);
    // The last step needs no report back: the gate is right either way.
    rec.classical_bits = k < n ? 1 : 0;

    const Operator step = path == ExecutionPath::fast
                              ? phase_gate(rec.success ? rec.resource_phase : -rec.resource_phase)
                              : branch_operator(rec.resource_phase, rec.outcome);
    return StepResult{rec, step * cumulative};
}

ProtocolTrace run_protocol(int n, const OutcomeSource &source, ExecutionPath path) {
    if (n < 1) throw domain_error("run_protocol: n must be at least 1");
    ProtocolTrace trace;
    trace.target_n = n;
    const Operator target = phase_gate(binary_phase(n));
    if (n == 1) {
        trace.effective_unitary = target;
        trace.fidelity_with_target = 1.0;
        return trace;
    }
    Operator cumulative = Operator::identity({2, 2});
    for (int k = 1; k <= n; ++k) {
        StepResult r = simulate_step(cumulative, k, n, source, path);
        cumulative = std::move(r.cumulative);
        trace.total_ebits += r.record.ebits_consumed;
        trace.total_classical_bits_per_direction += r.record.classical_bits;
        trace.total_raw_outcome_bits_per_direction += r.record.raw_outcome_bits;
        const bool done = r.record.success;
        trace.steps.push_back(r.record);
        if (done) break;
    }
    trace.effective_unitary = cumulative;
    trace.fidelity_with_target = gate_fidelity(target, cumulative);
    return trace;
}

double f_series(int n) {
    if (n < 1) throw domain_error("f_series: n must be at least 1");
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) sum += std::ldexp(resource_entropy(binary_phase(k)), k);
    return sum / kPi;
}

double f_infinity(double tol) {
    if (!(tol > 0.0)) throw domain_error("f_infinity: tol must be positive");
    // The k = 1 term vanishes, so the stopping test starts at k = 2.
    double sum = 0.0;
    for (int k = 1; k < 1000; ++k) {
        const double term = std::ldexp(resource_entropy(binary_phase(k)), k) / kPi;
        sum += term;
        if (k >= 2 && term < tol) break;
    }
    return sum;
}

double capability_maximand(double x) {
    if (!(x > 0.0 && x < 1.0)) throw domain_error("capability_maximand: x must lie in (0, 1)");
    return 2.0 * std::sqrt(x * (1.0 - x)) * std::log2((1.0 - x) / x);
}

double capability_constant() {
    // Golden-section search; the maximand is unimodal on (0, 1/2).
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 1e-15, hi = 0.5;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = capability_maximand(x1);
    double f2 = capability_maximand(x2);
    while (hi - lo > 1e-13) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = capability_maximand(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = capability_maximand(x1);
        }
    }
    return capability_maximand(0.5 * (lo + hi));
}

double capability_ratio() { return f_infinity(1e-12) / capability_constant(); }

CostReport expected_cost(int n) {
    if (n < 1) throw domain_error("expected_cost: n must be at least 1");
    CostReport r;
    r.n = n;
    const double alpha_n = binary_phase(n);
    for (int k = 1; k <= n; ++k) {
        const double weight = std::ldexp(1.0, -(k - 1));
        r.expected_ebits += weight * resource_entropy(binary_phase(n - k + 1));
        r.expected_raw_outcome_bits_per_direction += 2.0 * weight;
    }
    r.f_n = f_series(n);
    r.series_form = alpha_n * r.f_n;
    if (std::abs(r.expected_ebits - r.series_form) > 1e-12)
        throw std::logic_error("expected_cost: sum and alpha_N f_N forms disagree for N=" + std::to_string(n));
    r.expected_classical_bits_per_direction = 2.0 - std::ldexp(1.0, -(n - 2));
    r.capability = capability_constant() * alpha_n;
    r.ratio = r.expected_ebits / r.capability;
    return r;
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

MonteCarloSummary monte_carlo(int n, std::int64_t trials, std::uint64_t seed, ExecutionPath path) {
    if (n < 1) throw domain_error("monte_carlo: n must be at least 1");
    if (trials < 1) throw domain_error("monte_carlo: trials must be at least 1");
    MonteCarloSummary s;
    s.n = n;
    s.trials = trials;
    s.seed = seed;

    double sum_e = 0.0, sum_e2 = 0.0, sum_c = 0.0, sum_c2 = 0.0;
    std::int64_t attempted = 0, first_success = 0;
    for (std::int64_t i = 0; i < trials; ++i) {
        std::mt19937_64 rng = trial_engine(seed, static_cast<std::uint64_t>(i));
        const ProtocolTrace t = run_protocol(n, uniform_outcomes(rng), path);
        const double c = t.total_classical_bits_per_direction;
        sum_e += t.total_ebits;
        sum_e2 += t.total_ebits * t.total_ebits;
        sum_c += c;
        sum_c2 += c * c;
        if (!t.steps.empty()) {
            ++attempted;
            if (t.steps.front().success) ++first_success;
        }
        s.min_fidelity = std::min(s.min_fidelity, t.fidelity_with_target);
        ++s.steps_histogram[static_cast<int>(t.steps.size())];
    }

    const auto m = static_cast<double>(trials);
    auto stderr_of = [m](double sum, double sum2) {
        if (m < 2) return 0.0;
        const double mean = sum / m;
        const double var = std::max(0.0, (sum2 - m * mean * mean) / (m - 1.0));
        return std::sqrt(var / m);
    };
    s.mean_ebits = sum_e / m;
    s.stderr_ebits = stderr_of(sum_e, sum_e2);
    s.mean_classical_bits = sum_c / m;
    s.stderr_classical_bits = stderr_of(sum_c, sum_c2);
    if (attempted > 0) {
        const double p = static_cast<double>(first_success) / static_cast<double>(attempted);
        s.first_step_success_rate = p;
        s.stderr_first_step_success = std::sqrt(p * (1.0 - p) / static_cast<double>(attempted));
    }
    return s;
}

}  // namespace nlgate
