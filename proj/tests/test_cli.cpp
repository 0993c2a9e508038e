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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <sys/wait.h>

#include "gtest/gtest.h"

#include "cli.hpp"
#include "nlgate/codec.hpp"

using namespace nlgate;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json invoke_json(const std::vector<std::string> &args) {
    const Outcome o = invoke(args);
    EXPECT_EQ(o.code, cli::kOk) << o.err;
    return Json::parse(o.out);
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("nlgate_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string write(const std::string &name, const std::string &text) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string &name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string unitary_channel_json(const Matrix &u) {
    Json j;
    j["d"] = 2;
    j["trace_flag"] = "trace-preserving";
    j["kraus"] = Json::array({matrix_to_json(u)});
    return j.dump();
}

Matrix xx() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 3) = m(1, 2) = m(2, 1) = m(3, 0) = 1.0;
    return m;
}

}  // namespace

TEST(cli, constants) {
    const Json j = invoke_json({"constants"});
    EXPECT_NEAR(j["f_infinity"].get<double>(), 5.97932, 1e-4);
    EXPECT_NEAR(j["capability_constant"].get<double>(), 1.9123, 1e-4);
    EXPECT_NEAR(j["capability_ratio"].get<double>(), 3.1268, 1e-3);
    ASSERT_EQ(j["f_series"].size(), 20u);
    EXPECT_EQ(j["f_series"][1]["n"], 2);
    EXPECT_NEAR(j["f_series"][1]["f_n"].get<double>(), 4.0 / std::numbers::pi, 1e-11);
}

TEST(cli, analyze_channel_classifications) {
    TempDir dir;
    const Json id = invoke_json({"analyze-channel", "--input", dir.write("id.json", unitary_channel_json(Matrix::Identity(4, 4)))});
    EXPECT_EQ(id["classification"], "separable-by-construction");
    EXPECT_EQ(id["is_ppt"], true);
    EXPECT_EQ(id["rank"], 1);
    EXPECT_EQ(id["is_unitary"], true);

    // U(pi/4) = (I - i XX)/sqrt2
    const Matrix u = (Matrix::Identity(4, 4) - Complex(0, 1) * xx()) / std::sqrt(2.0);
    const Json cnot_like = invoke_json({"analyze-channel", "--input", dir.write("u.json", unitary_channel_json(u))});
    EXPECT_EQ(cnot_like["classification"], "NPT-entangling");
    EXPECT_EQ(cnot_like["rank"], 1);
    EXPECT_EQ(cnot_like["is_unitary"], true);
    EXPECT_LT(cnot_like["ppt_min_eigenvalue"].get<double>(), -1e-9);
    EXPECT_EQ(cnot_like["choi"]["dims"], Json::array({2, 2, 2, 2}));
}

TEST(cli, analyze_channel_errors) {
    TempDir dir;
    Json ragged;
    ragged["d"] = 2;
    ragged["trace_flag"] = "trace-preserving";
    ragged["kraus"] = Json::array({Json::array({Json::array({1, 0}), Json::array({0, 0})})});
    Outcome o = invoke({"analyze-channel", "--input", dir.write("ragged.json", ragged.dump())});
    EXPECT_EQ(o.code, cli::kValidation);
    EXPECT_NE(o.err.find("error:"), std::string::npos);

    o = invoke({"analyze-channel", "--input", dir.write("bad.json", "{\"d\": 2,\n \"kraus\": [}")});
    EXPECT_EQ(o.code, cli::kParse);
    EXPECT_NE(o.err.find("bad.json:2:"), std::string::npos) << o.err;

    // Not trace preserving as declared.
    o = invoke({"analyze-channel", "--input", dir.write("tp.json", unitary_channel_json(2.0 * Matrix::Identity(4, 4)))});
    EXPECT_EQ(o.code, cli::kValidation);

    // Direct Choi input that is not PSD.
    Json choi;
    choi["d"] = 2;
    choi["choi"] = matrix_to_json(-Matrix::Identity(16, 16) / 16.0);
    o = invoke({"analyze-channel", "--input", dir.write("choi.json", choi.dump())});
    EXPECT_EQ(o.code, cli::kValidation);

    o = invoke({"analyze-channel", "--input", dir.file("missing.json")});
    EXPECT_NE(o.code, cli::kOk);
}

TEST(cli, simulate_matches_expectation) {
    const Json j = invoke_json({"simulate", "--n", "4", "--trials", "100000", "--seed", "7"});
    const double mean = j["mean_ebits"].get<double>();
    const double se = j["stderr_ebits"].get<double>();
    EXPECT_NEAR(j["expected_ebits"].get<double>(), 0.7837646469973631, 1e-11);
    EXPECT_LE(std::abs(mean - j["expected_ebits"].get<double>()), 3 * se);
    EXPECT_LE(std::abs(j["mean_classical_bits_per_direction"].get<double>() - 1.75),
              3 * j["stderr_classical_bits_per_direction"].get<double>());
    EXPECT_GE(j["min_fidelity"].get<double>(), 1.0 - 1e-9);
    EXPECT_EQ(j["trials"], 100000);
}

TEST(cli, simulate_is_byte_identical) {
    const Outcome a = invoke({"simulate", "--n", "5", "--trials", "5000", "--seed", "11"});
    const Outcome b = invoke({"simulate", "--n", "5", "--trials", "5000", "--seed", "11"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(cli, expected_cost) {
    const Json two = invoke_json({"expected-cost", "--n", "2"});
    EXPECT_NEAR(two["expected_ebits"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(two["f_n"].get<double>(), 4.0 / std::numbers::pi, 1e-11);
    EXPECT_NEAR(two["expected_classical_bits_per_direction"].get<double>(), 1.0, 1e-12);
    const Json three = invoke_json({"expected-cost", "--n", "3"});
    EXPECT_NEAR(three["expected_ebits"].get<double>(), 1.1008760366928563, 1e-11);

    EXPECT_EQ(invoke({"expected-cost", "--n", "0"}).code, cli::kDomain);
}

TEST(cli, decompose_xx) {
    TempDir dir;
    const Json j = invoke_json({"decompose", "--input", dir.write("h.json", to_json(Operator(xx(), {2, 2})).dump())});
    EXPECT_NEAR(j["pauli"]["gamma"][0][0].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["canonical"]["mu"][0].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["gate_cost_ebits"].get<double>(), 5.97932, 1e-4);

    const Json half = invoke_json({"decompose", "--input", dir.file("h.json"), "--t", "0.5"});
    EXPECT_NEAR(half["gate_cost_ebits"].get<double>(), 0.5 * j["gate_cost_ebits"].get<double>(), 1e-10);

    Matrix nh = xx();
    nh(0, 1) = 1.0;
    EXPECT_EQ(invoke({"decompose", "--input", dir.write("nh.json", matrix_to_json(nh).dump())}).code, cli::kValidation);
}

TEST(cli, approx_phase) {
    const Json j = invoke_json({"approx-phase", "--alpha", "0.3", "--eps", "1e-6"});
    EXPECT_LE(std::abs(j["total"].get<double>() - 0.3), 1e-6);
    EXPECT_NEAR(j["cost_bound"].get<double>(), 5.979313746465434 * j["total"].get<double>(), 1e-9);
    EXPECT_EQ(invoke({"approx-phase", "--alpha", "2.0"}).code, cli::kDomain);
    EXPECT_EQ(invoke({"approx-phase", "--alpha", "0.3", "--eps", "-1"}).code, cli::kDomain);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(invoke({}).code, cli::kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"simulate"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"simulate", "--n", "x"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"--format", "xml", "constants"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"--help"}).code, cli::kOk);
}

TEST(cli, csv_matches_json) {
    const Json j = invoke_json({"expected-cost", "--n", "5"});
    const Outcome csv = invoke({"--format", "csv", "expected-cost", "--n", "5"});
    ASSERT_EQ(csv.code, 0);
    std::istringstream lines(csv.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "key,value");
    int rows = 0;
    while (std::getline(lines, line)) {
        const auto comma = line.find(',');
        ASSERT_NE(comma, std::string::npos);
        EXPECT_EQ(Json::parse(line.substr(comma + 1)), j[line.substr(0, comma)]) << line;
        ++rows;
    }
    EXPECT_EQ(rows, static_cast<int>(j.size()));
}

TEST(cli, output_file) {
    TempDir dir;
    const std::string path = dir.file("report.json");
    const Outcome o = invoke({"--output", path, "expected-cost", "--n", "2"});
    EXPECT_EQ(o.code, 0);
    EXPECT_TRUE(o.out.empty());
    std::ifstream in(path);
    const Json j = Json::parse(in);
    EXPECT_EQ(j["n"], 2);
}

#ifdef NLGATE_CLI_PATH
TEST(cli, binary_exit_codes) {
    const std::string exe = NLGATE_CLI_PATH;
    auto status = [&](const std::string &args) {
        const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("constants"), 0);
    EXPECT_EQ(status("bogus"), 2);
    EXPECT_EQ(status("expected-cost --n 0"), 5);
}
#endif
