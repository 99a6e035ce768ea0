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

#include "qec/qubit.h"
#include "qec/subset.h"

using namespace qec;

TEST(qubit, parse_is_case_insensitive) {
    EXPECT_EQ(parse_qubit("a"), Qubit::source());
    EXPECT_EQ(parse_qubit("s12"), Qubit::signal(12));
    EXPECT_EQ(parse_qubit("N3"), Qubit::noise(3));
    EXPECT_THROW(parse_qubit("S0"), std::invalid_argument);
    EXPECT_THROW(parse_qubit("Q1"), std::invalid_argument);
    EXPECT_THROW(parse_qubit("S"), std::invalid_argument);
    EXPECT_THROW(parse_qubit(""), std::invalid_argument);
}

TEST(qubit, global_positions_interleave_pairs) {
    EXPECT_EQ(global_position(Qubit::source()), 0);
    EXPECT_EQ(global_position(Qubit::signal(1)), 1);
    EXPECT_EQ(global_position(Qubit::noise(1)), 2);
    EXPECT_EQ(global_position(Qubit::signal(3)), 5);
    auto order = canonical_global_order(2);
    EXPECT_EQ(join_labels(order), "A,S1,N1,S2,N2");
}

TEST(subset, parse_orders_labels_for_reduction) {
    auto s = SubsetSpec::parse(3, "n3,S2,a,N1");
    EXPECT_TRUE(s.includes_a());
    EXPECT_EQ(s.signal_count(), 1);
    EXPECT_EQ(s.noise_count(), 2);
    EXPECT_EQ(join_labels(s.labels()), "A,S2,N1,N3");
    EXPECT_EQ(s.str(), "A,S2,N1,N3");
}

TEST(subset, parse_rejects_bad_tokens_by_name) {
    auto message = [](const char *text) {
        try {
            SubsetSpec::parse(2, text);
        } catch (const std::invalid_argument &e) {
            return std::string(e.what());
        }
        return std::string("no throw");
    };
    EXPECT_NE(message("A,S3").find("S3"), std::string::npos);
    EXPECT_NE(message("S1,s1").find("duplicate label 's1'"), std::string::npos);
    EXPECT_NE(message("S1,X2").find("X2"), std::string::npos);
    EXPECT_NE(message("S1,,N1"), "no throw");
    EXPECT_NE(message("S1-N2"), "no throw");
}

TEST(subset, empty_text_is_empty_set) {
    auto s = SubsetSpec::parse(2, "");
    EXPECT_TRUE(s.empty());
    EXPECT_EQ(s.str(), "");
}

TEST(subset, register_mask_round_trip) {
    for (uint64_t mask = 0; mask < 64; ++mask) {
        auto s = SubsetSpec::from_register_mask(3, mask & 1, mask);
        EXPECT_EQ(s.register_mask(), mask);
        EXPECT_EQ(SubsetSpec::parse(3, s.str()), s);
    }
    EXPECT_THROW(SubsetSpec::from_register_mask(2, false, 16), std::invalid_argument);
}

TEST(subset, with_a_toggles_only_a) {
    auto s = SubsetSpec::parse(2, "S1,N2");
    EXPECT_EQ(s.with_a(true).str(), "A,S1,N2");
    EXPECT_EQ(s.with_a(true).with_a(false), s);
}
