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

#include "nlgate/codec.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nlgate/error.hpp"

namespace nlgate {

Json number(double x) {
    if (!std::isfinite(x)) throw domain_error("cannot serialize a non-finite number");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? Json(0.0) : Json(r);
}

Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({number(m(i, j).real()), number(m(i, j).imag())}));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

Complex entry_from_json(const Json &e, std::size_t i, std::size_t j) {
    const auto where = " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (e.is_number()) return Complex(e.get<double>(), 0.0);
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw validation_error("matrix entry must be [re, im]" + where);
    return Complex(e[0].get<double>(), e[1].get<double>());
}

Matrix raw_matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) throw validation_error("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw validation_error("matrix row 0 is not an array");
    const std::size_t cols = j[0].size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw validation_error("matrix row " + std::to_string(r) + " has " +
                                   std::to_string(j[r].is_array() ? j[r].size() : 0) + " entries, expected " +
                                   std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entry_from_json(j[r][c], r, c);
    }
    return m;
}

Dims dims_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) throw validation_error("dims must be a non-empty integer array");
    Dims dims;
    for (const auto &d : j) {
        if (!d.is_number_integer() || d.get<long long>() < 1) throw validation_error("dims entries must be positive integers");
        dims.push_back(d.get<std::size_t>());
    }
    return dims;
}

Json vec3(const Eigen::Vector3d &v) { return Json::array({number(v(0)), number(v(1)), number(v(2))}); }

Json mat3(const Eigen::Matrix3d &m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) rows.push_back(Json::array({number(m(i, 0)), number(m(i, 1)), number(m(i, 2))}));
    return rows;
}

Json outcome_json(const BellOutcome &o) { return Json::array({o.first, o.second}); }

}  // namespace

Matrix matrix_from_json(const Json &j) {
    Matrix m = raw_matrix_from_json(j);
    if (m.rows() != m.cols())
        throw validation_error("matrix is not square (" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
    return m;
}

Json to_json(const Operator &op) {
    Json j;
    j["dims"] = op.dims();
    j["matrix"] = matrix_to_json(op.matrix());
    return j;
}

Operator operator_from_json(const Json &j) {
    if (j.is_array()) return Operator(matrix_from_json(j));
    if (!j.is_object() || !j.contains("matrix")) throw validation_error("operator must be an object with a 'matrix' field");
    Matrix m = matrix_from_json(j.at("matrix"));
    if (!j.contains("dims")) return Operator(std::move(m));
    return Operator(std::move(m), dims_from_json(j.at("dims")));
}

Json to_json(const PureState &psi) {
    Json j;
    j["dims"] = psi.dims();
    j["matrix"] = matrix_to_json(psi.amplitudes());
    return j;
}

PureState state_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("matrix") || !j.contains("dims"))
        throw validation_error("state must be an object with 'dims' and 'matrix'");
    const Matrix m = raw_matrix_from_json(j.at("matrix"));
    if (m.cols() != 1) throw validation_error("state must be a column vector");
    return PureState(m.col(0), dims_from_json(j.at("dims")));
}

Json to_json(const QuantumChannel &ch) {
    Json j;
    j["d"] = ch.d();
    j["trace_flag"] = std::string(to_string(ch.trace_behavior()));
    Json kraus = Json::array();
    for (const auto &o : ch.kraus()) kraus.push_back(matrix_to_json(o.matrix()));
    j["kraus"] = std::move(kraus);
    return j;
}

QuantumChannel channel_from_json(const Json &j) {
    if (!j.is_object()) throw validation_error("channel must be a JSON object");
    for (const char *key : {"d", "trace_flag", "kraus"})
        if (!j.contains(key)) throw validation_error(std::string("channel is missing '") + key + "'");
    if (!j["d"].is_number_integer() || j["d"].get<long long>() < 1) throw validation_error("'d' must be a positive integer");
    if (!j["trace_flag"].is_string()) throw validation_error("'trace_flag' must be a string");
    if (!j["kraus"].is_array() || j["kraus"].empty()) throw validation_error("'kraus' must be a non-empty array");

    const auto d = j["d"].get<std::size_t>();
    std::vector<Operator> kraus;
    for (std::size_t k = 0; k < j["kraus"].size(); ++k) {
        const Json &item = j["kraus"][k];
        const Json &rows = item.is_object() && item.contains("matrix") ? item["matrix"] : item;
        try {
            kraus.emplace_back(matrix_from_json(rows));
        } catch (const Error &e) {
            throw validation_error("Kraus operator " + std::to_string(k) + ": " + e.what());
        }
    }
    return QuantumChannel(std::move(kraus), d, trace_behavior_from_string(j["trace_flag"].get<std::string>()));
}

Json to_json(const EntanglingVerdict &v) {
    Json j;
    j["ppt_min_eigenvalue"] = number(v.ppt_min_eigenvalue);
    j["classification"] = std::string(to_string(v.classification));
    j["rank"] = v.rank;
    j["is_unitary"] = v.is_unitary;
    return j;
}

Json to_json(const CanonicalForm &c) {
    Json j;
    j["mu"] = vec3(c.mu);
    j["signs"] = vec3(c.signs);
    j["rot_a"] = mat3(c.rot_a);
    j["rot_b"] = mat3(c.rot_b);
    j["su2_a"] = matrix_to_json(c.lift_a);
    j["su2_b"] = matrix_to_json(c.lift_b);
    return j;
}

Json to_json(const PhaseApproximation &p) {
    Json j;
    j["exponents"] = p.exponents;
    Json phases = Json::array();
    for (double x : p.phases) phases.push_back(number(x));
    j["phases"] = std::move(phases);
    j["total"] = number(p.total);
    j["cost_bound"] = number(p.cost_bound);
    return j;
}

Json to_json(const StepRecord &s) {
    Json j;
    j["k"] = s.k;
    j["resource_phase"] = number(s.resource_phase);
    j["outcome_a"] = outcome_json(s.outcome.a);
    j["outcome_b"] = outcome_json(s.outcome.b);
    j["success"] = s.success;
    j["correction_a"] = s.correction_a;
    j["correction_b"] = s.correction_b;
    j["ebits_consumed"] = number(s.ebits_consumed);
    j["classical_bits"] = s.classical_bits;
    j["raw_outcome_bits"] = s.raw_outcome_bits;
    return j;
}

Json to_json(const ProtocolTrace &t) {
    Json j;
    j["target_n"] = t.target_n;
    Json steps = Json::array();
    for (const auto &s : t.steps) steps.push_back(to_json(s));
    j["steps"] = std::move(steps);
    j["total_ebits"] = number(t.total_ebits);
    j["total_classical_bits_per_direction"] = t.total_classical_bits_per_direction;
    j["total_raw_outcome_bits_per_direction"] = t.total_raw_outcome_bits_per_direction;
    j["effective_unitary"] = to_json(t.effective_unitary);
    j["fidelity_with_target"] = number(t.fidelity_with_target);
    return j;
}

Json to_json(const CostReport &r) {
    Json j;
    j["n"] = r.n;
    j["expected_ebits"] = number(r.expected_ebits);
    j["series_form"] = number(r.series_form);
    j["f_n"] = number(r.f_n);
    j["expected_classical_bits_per_direction"] = number(r.expected_classical_bits_per_direction);
    j["expected_raw_outcome_bits_per_direction"] = number(r.expected_raw_outcome_bits_per_direction);
    j["capability"] = number(r.capability);
    j["ratio"] = number(r.ratio);
    return j;
}

Json to_json(const MonteCarloSummary &s) {
    Json j;
    j["n"] = s.n;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["mean_ebits"] = number(s.mean_ebits);
    j["stderr_ebits"] = number(s.stderr_ebits);
    j["mean_classical_bits_per_direction"] = number(s.mean_classical_bits);
    j["stderr_classical_bits_per_direction"] = number(s.stderr_classical_bits);
    j["first_step_success_rate"] = number(s.first_step_success_rate);
    j["stderr_first_step_success"] = number(s.stderr_first_step_success);
    j["min_fidelity"] = number(s.min_fidelity);
    Json hist = Json::array();
    for (const auto &[steps, count] : s.steps_histogram) hist.push_back(Json{{"steps", steps}, {"count", count}});
    j["steps_histogram"] = std::move(hist);
    return j;
}

Json parse_json_text(const std::string &text, const std::string &source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw parse_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

}  // namespace nlgate
