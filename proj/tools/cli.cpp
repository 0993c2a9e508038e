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

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "nlgate/channels.hpp"
#include "nlgate/codec.hpp"
#include "nlgate/error.hpp"
#include "nlgate/gates.hpp"
#include "nlgate/protocol.hpp"

namespace nlgate::cli {

namespace {

struct RunConfig {
    std::string input;
    std::uint64_t seed = 0;
    std::int64_t trials = 10000;
    int n = 0;
    double alpha = 0.0;
    double eps = 1e-6;
    double t = 1.0;
    std::string format = "json";
    std::string output;
};

Json cmd_constants() {
    Json j;
    j["f_infinity"] = number(f_infinity(1e-12));
    j["capability_constant"] = number(capability_constant());
    j["capability_ratio"] = number(capability_ratio());
    Json table = Json::array();
    for (int n = 1; n <= 20; ++n) table.push_back(Json{{"n", n}, {"f_n", number(f_series(n))}});
    j["f_series"] = std::move(table);
    return j;
}

Json cmd_analyze_channel(const RunConfig &cfg) {
    const Json doc = read_json_file(cfg.input);
    std::optional<ChoiOperator> choi;
    if (doc.is_object() && doc.contains("choi")) {
        // A Choi operator given directly: {"d": int, "choi": operator}
        if (!doc.contains("d") || !doc["d"].is_number_integer()) throw validation_error("Choi input needs an integer 'd'");
        choi.emplace(operator_from_json(doc["choi"]), doc["d"].get<std::size_t>());
    } else {
        choi.emplace(choi_of_channel(channel_from_json(doc)));
    }
    const EntanglingVerdict v = classify(*choi);
    Json j;
    j["d"] = choi->d();
    j["choi"] = to_json(choi->op());
    j["is_ppt"] = v.ppt_min_eigenvalue >= -kChannelTol;
    const Json verdict = to_json(v);
    for (auto &[key, value] : verdict.items()) j[key] = value;
    return j;
}

Json cmd_simulate(const RunConfig &cfg) {
    Json j = to_json(monte_carlo(cfg.n, cfg.trials, cfg.seed));
    const CostReport expected = expected_cost(cfg.n);
    j["expected_ebits"] = number(expected.expected_ebits);
    j["expected_classical_bits_per_direction"] = number(expected.expected_classical_bits_per_direction);
    return j;
}

Json cmd_decompose(const RunConfig &cfg) {
    const Operator h = operator_from_json(read_json_file(cfg.input));
    if (h.dim() != 4) throw validation_error("Hamiltonian must be 4x4");
    if (!h.is_hermitian()) throw validation_error("Hamiltonian is not Hermitian");
    const PauliDecomposition p = pauli_decompose(h);
    Json pj;
    pj["identity_coefficient"] = number(p.identity_coefficient);
    pj["local_a"] = Json::array({number(p.local_a(0)), number(p.local_a(1)), number(p.local_a(2))});
    pj["local_b"] = Json::array({number(p.local_b(0)), number(p.local_b(1)), number(p.local_b(2))});
    Json gamma = Json::array();
    for (int r = 0; r < 3; ++r)
        gamma.push_back(Json::array({number(p.gamma(r, 0)), number(p.gamma(r, 1)), number(p.gamma(r, 2))}));
    pj["gamma"] = std::move(gamma);

    Json j;
    j["pauli"] = std::move(pj);
    j["canonical"] = to_json(canonicalize(h));
    j["t"] = number(cfg.t);
    j["gate_cost_ebits"] = number(gate_cost(h, cfg.t));
    return j;
}

Json cmd_approx_phase(const RunConfig &cfg) {
    Json j;
    j["alpha"] = number(cfg.alpha);
    j["eps"] = number(cfg.eps);
    const Json approx = to_json(binary_phase_approx(cfg.alpha, cfg.eps));
    for (auto &[key, value] : approx.items()) j[key] = value;
    return j;
}

void flatten(const Json &j, const std::string &prefix, std::ostream &os) {
    if (j.is_structured()) {
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it)
                flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
        }
        return;
    }
    os << prefix << ',' << j.dump() << '\n';
}

std::string render(const Json &j, const std::string &format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "key,value\n";
        flatten(j, "", os);
    } else {
        os << j.dump(2) << '\n';
    }
    return os.str();
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return kParse;
        case ErrorKind::validation: return kValidation;
        case ErrorKind::domain: return kDomain;
    }
    return kDomain;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Choi-operator channel analysis and non-local gate protocol simulation", "nlgate"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", cfg.output, "Write the report to PATH instead of stdout");

    auto *constants = app.add_subcommand("constants", "f_inf, capability constant and ratio, f_N table");
    auto *analyze = app.add_subcommand("analyze-channel", "Choi operator, PPT test and classification of a channel");
    analyze->add_option("--input", cfg.input, "Channel JSON file")->required();
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo run of the escalating protocol");
    simulate->add_option("--n", cfg.n, "Target gate U(pi/2^n)")->required();
    simulate->add_option("--trials", cfg.trials, "Number of trials");
    simulate->add_option("--seed", cfg.seed, "RNG seed");
    auto *cost = app.add_subcommand("expected-cost", "Expected ebits and classical bits for U(pi/2^n)");
    cost->add_option("--n", cfg.n, "Target gate U(pi/2^n)")->required();
    auto *decompose = app.add_subcommand("decompose", "Pauli and canonical form of a two-qubit Hamiltonian");
    decompose->add_option("--input", cfg.input, "Hamiltonian JSON file")->required();
    decompose->add_option("--t", cfg.t, "Evolution time for the cost estimate");
    auto *approx = app.add_subcommand("approx-phase", "Dyadic phase expansion and cost bound");
    approx->add_option("--alpha", cfg.alpha, "Phase in (0, pi/2]")->required();
    approx->add_option("--eps", cfg.eps, "Approximation tolerance");
    for (auto *sub : {constants, analyze, simulate, cost, decompose, approx}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Json report;
        if (*constants) {
            report = cmd_constants();
        } else if (*analyze) {
            report = cmd_analyze_channel(cfg);
        } else if (*simulate) {
            report = cmd_simulate(cfg);
        } else if (*cost) {
            report = to_json(expected_cost(cfg.n));
        } else if (*decompose) {
            report = cmd_decompose(cfg);
        } else {
            report = cmd_approx_phase(cfg);
        }

        const std::string text = render(report, cfg.format);
        if (cfg.output.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.output);
            if (!file) {
                err << "error: cannot write '" << cfg.output << "'\n";
                return kUsage;
            }
            file << text;
        }
        return kOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

}  // namespace nlgate::cli
