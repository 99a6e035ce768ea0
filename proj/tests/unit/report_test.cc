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

#include "qec/format.h"
#include "qec/report.h"

using namespace qec;

namespace {

VerificationReport small_report() {
    VerifyOptions opt;
    opt.n_max = 1;
    opt.samples = 3;
    return verify_all(opt);
}

}  // namespace

TEST(format_double, round_trips) {
    EXPECT_EQ(format_double(0.0), "0");
    EXPECT_EQ(format_double(-0.0), "0");
    EXPECT_EQ(format_double(0.25), "0.25");
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(std::stod(format_double(1.0 / 3)), 1.0 / 3);
}

TEST(channel_list, names) {
    EXPECT_EQ(channel_list({false, false, false}), "");
    EXPECT_EQ(channel_list({false, true, false}), "y");
    EXPECT_EQ(channel_list({true, true, true}), "x,y,z");
}

TEST(report_json, schema) {
    auto j = to_json(small_report());
    for (const char *key : {"n_max", "tol", "seed", "samples", "duration_ms", "mismatch_count", "assumption"}) {
        EXPECT_TRUE(j["meta"].contains(key)) << key;
    }
    EXPECT_TRUE(j["meta"]["duration_ms"].is_null());
    ASSERT_EQ(j["results"].size(), 8u);
    for (const auto &row : j["results"]) {
        for (const char *key : {"subset", "family", "predicted", "observed", "channels", "max_err"}) {
            EXPECT_TRUE(row.contains(key)) << key;
        }
    }
    EXPECT_EQ(j["results"][1]["subset"], "S1");
    EXPECT_EQ(j["results"][1]["family"], "storage");
    EXPECT_EQ(j["results"][1]["channels"], nlohmann::json::array({"y"}));
    EXPECT_EQ(j["results"][4]["family"], "with_a");
}

TEST(report_csv, header_and_rows) {
    auto csv = to_csv(small_report());
    auto first = csv.substr(0, csv.find('\n'));
    EXPECT_EQ(first, "n,subset,family,predicted,observed,channels,norm_x,norm_y,norm_z,max_err,mismatch,path");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
    EXPECT_NE(csv.find("1,\"S1,N1\",storage,FullyInformative"), std::string::npos);
}

TEST(report_text, summary) {
    auto text = to_text(small_report());
    EXPECT_NE(text.find("mismatches=0"), std::string::npos);
    EXPECT_NE(text.find("PASS"), std::string::npos);
}

TEST(classify_report, text_and_json) {
    auto records = classify_family(1, false);
    auto text = to_text(records, 1, false);
    EXPECT_NE(text.find("{S1}     PartiallyInformative"), std::string::npos);
    EXPECT_NE(text.find("{}"), std::string::npos);
    auto j = to_json(records, 1, false);
    EXPECT_EQ(j["results"].size(), 4u);
    EXPECT_EQ(j["results"][0]["subset"], "");
    EXPECT_EQ(j["results"][3]["rule_path"].back(), "FULL-PAIR");
}

TEST(gamma_report, selected_entries) {
    auto j = gamma_json(3, 2);
    EXPECT_EQ(j["sectors"][2]["selected"]["letter"], "X");
    EXPECT_EQ(j["sectors"][2]["selected"]["coefficient"], -4);
    EXPECT_EQ(j["sectors"][0]["l_matrix"][0][1], "i");
    EXPECT_TRUE(j["sectors"][0]["l_matrix"][0][0].is_null());
    EXPECT_THROW(gamma_json(2, 3), std::invalid_argument);
    EXPECT_NE(gamma_text(3, 2).find("Gamma_3,2 = -4X"), std::string::npos);
}
