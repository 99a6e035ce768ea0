// Copyright 2026 The qec Authors
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

#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.h"

using namespace qec;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

void expect_usage_error(std::vector<std::string> args, const std::string &mention) {
    CliRun r = run(args);
    EXPECT_EQ(r.code, cli::kUsage) << r.err;
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    EXPECT_NE(r.err.find(mention), std::string::npos) << r.err;
}

}  // namespace

TEST(cli_classify, n1_storage) {
    CliRun r = run({"classify", "--n", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("4 subsets"), std::string::npos);
    EXPECT_NE(r.out.find("{S1}     PartiallyInformative"), std::string::npos);
}

TEST(cli_classify, n2_with_a) {
    CliRun r = run({"classify", "--n", "2", "--include-a", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["results"].size(), 16u);
    EXPECT_EQ(j["family"], "with_a");
}

TEST(cli_classify, json_schema) {
    auto j = nlohmann::json::parse(run({"classify", "--n", "1", "--format", "json"}).out);
    EXPECT_EQ(j["n"], 1);
    for (const auto &row : j["results"]) {
        EXPECT_TRUE(row["subset"].is_string());
        EXPECT_TRUE(row["class"].is_string());
        EXPECT_TRUE(row["rule_path"].is_array());
    }
}

TEST(cli_reduce, n1_a_n1_terms) {
    CliRun r = run({"reduce", "--n", "1", "--keep", "A,N1", "--input", "0,1,0", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    std::map<std::string, double> terms;
    for (const auto &t : j["terms"]) {
        terms[t["string"]] = t["re"];
    }
    std::map<std::string, double> want{{"II", 0.25}, {"ZX", 0.25}, {"YY", -0.25}, {"XZ", -0.25}};
    EXPECT_EQ(terms, want);
    EXPECT_EQ(j["channels"], nlohmann::json::array({"y"}));
}

TEST(cli_reduce, noise_marginal) {
    CliRun r = run({"reduce", "--n", "2", "--keep", "N1,N2", "--input", "0,0,1", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "string,re,im\nII,0.25,0\n");
}

TEST(cli_reduce, n3_q2_state_with_y) {
    CliRun r = run({"reduce", "--n", "3", "--keep", "A,S1,S2,N3", "--input", "plus-i", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "string,re,im\nIIII,0.0625,0\nXZZZ,-0.0625,0\nYYYY,0.0625,0\nZXXX,0.0625,0\n");
}

TEST(cli_reduce, named_inputs_and_renormalization) {
    EXPECT_EQ(run({"reduce", "--n", "1", "--keep", "S1", "--input", "1"}).code, 0);
    EXPECT_EQ(run({"reduce", "--n", "1", "--keep", "S1", "--input", "plus"}).code, 0);
    EXPECT_EQ(run({"reduce", "--n", "1", "--keep", "S1", "--input", "0,0,1.0000005"}).code, 0);
    auto x = cli::parse_input("0,0.6000001,0.8");
    EXPECT_NEAR(x.y * x.y + x.z * x.z, 1, 1e-15);
}

TEST(cli_errors, usage_errors_name_the_token) {
    expect_usage_error({"classify", "--n", "0"}, "--n");
    expect_usage_error({"classify"}, "--n");
    expect_usage_error({"reduce", "--n", "2", "--keep", "A,S3", "--input", "0"}, "S3");
    expect_usage_error({"reduce", "--n", "2", "--keep", "S1,S1", "--input", "0"}, "S1");
    expect_usage_error({"reduce", "--n", "2", "--keep", "S1,Q2", "--input", "0"}, "Q2");
    expect_usage_error({"reduce", "--n", "2", "--keep", "", "--input", "0"}, "--keep");
    expect_usage_error({"reduce", "--n", "2", "--keep", "S1", "--input", "1,1,0"}, "--input");
    expect_usage_error({"reduce", "--n", "2", "--keep", "S1", "--input", "0,x,1"}, "x");
    expect_usage_error({"reduce", "--n", "2", "--keep", "S1", "--input", "minus"}, "minus");
    expect_usage_error({"gamma", "--n", "2", "--q", "3"}, "--q");
    expect_usage_error({"verify", "--max-n", "0"}, "--max-n");
    expect_usage_error({"verify", "--format", "xml"}, "--format");
    expect_usage_error({"verify", "--bogus"}, "--bogus");
    expect_usage_error({}, "subcommand");
}

TEST(cli_verify, csv_header) {
    CliRun r = run({"verify", "--max-n", "1", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
              "n,subset,family,predicted,observed,channels,norm_x,norm_y,norm_z,max_err,mismatch,path");
}

TEST(cli_verify, repeat_runs_identical) {
    CliRun a = run({"verify", "--max-n", "3", "--seed", "7", "--format", "json"});
    CliRun b = run({"verify", "--max-n", "3", "--seed", "7", "--format", "json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(nlohmann::json::parse(a.out)["meta"]["seed"], 7);
}

TEST(cli_verify, strict_tolerance_reports_mismatches) {
    // Dense round-off exceeds a 1e-20 tolerance somewhere, so the run must fail.
    CliRun r = run({"verify", "--max-n", "2", "--tol", "1e-20", "--path", "dense"});
    EXPECT_EQ(r.code, cli::kMismatch);
    EXPECT_NE(r.err.find("mismatches"), std::string::npos);
}

TEST(cli_gamma, text) {
    CliRun r = run({"gamma", "--n", "3", "--q", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("L_1:"), std::string::npos);
    EXPECT_NE(r.out.find("selected r=2: -4X"), std::string::npos);
}
