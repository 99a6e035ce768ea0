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

#include "qec/classifier.h"

using namespace qec;

namespace {

SubsetSpec set(int n, const char *text) { return SubsetSpec::parse(n, text); }

constexpr auto FI = InformativenessClass::FullyInformative;
constexpr auto PI = InformativenessClass::PartiallyInformative;
constexpr auto CU = InformativenessClass::CompletelyUninformative;

}  // namespace

TEST(conditions, full_pair) {
    EXPECT_TRUE(has_full_pair(set(2, "S1,N1")));
    EXPECT_FALSE(has_full_pair(set(2, "S1,N2")));
    EXPECT_FALSE(has_full_pair(set(3, "S1,S2,N3")));
    EXPECT_TRUE(all_pairs_incomplete(set(3, "S1,S2,N3")));
}

TEST(conditions, span) {
    EXPECT_TRUE(spans_all_pairs(set(3, "S1,N2,N3")));
    EXPECT_FALSE(spans_all_pairs(set(3, "S1,N1")));
    EXPECT_TRUE(has_missing_pair(set(3, "S1,N1")));
    for (uint64_t mask = 0; mask < 64; ++mask) {
        auto s = SubsetSpec::from_register_mask(3, false, mask);
        if (s.register_size() < 3) {
            EXPECT_FALSE(spans_all_pairs(s)) << s.str();
        }
    }
}

TEST(classify_storage, examples) {
    EXPECT_EQ(classify_storage(set(3, "S1,S2,S3")), PI);
    EXPECT_EQ(classify_storage(set(2, "S1,N1,S2")), FI);
    EXPECT_EQ(classify_storage(set(3, "N1,N2,N3")), CU);
    EXPECT_EQ(classify_storage(set(1, "S1")), PI);
    EXPECT_EQ(classify_storage(set(1, "N1")), CU);
    EXPECT_EQ(classify_storage(set(2, "S1,S2")), CU);
    EXPECT_EQ(classify_storage(set(2, "")), CU);
    EXPECT_THROW(classify_storage(set(2, "A,S1")), std::invalid_argument);
}

TEST(classify_storage, rule_path_records_branches) {
    auto c = explain_storage(set(3, "S1,S2,S3"));
    std::vector<Condition> want{Condition::Span, Condition::SizeEqualsN, Condition::NOdd, Condition::SignalsOdd};
    EXPECT_EQ(c.rule_path, want);
    auto missing = explain_storage(set(3, "S1,N1"));
    EXPECT_EQ(missing.rule_path, std::vector<Condition>{Condition::MissingPair});
}

TEST(classify_with_a, examples) {
    EXPECT_EQ(classify_with_a(set(3, "N1,N2,N3")), PI);
    EXPECT_EQ(classify_with_a(set(3, "S1,N2,N3")), FI);
    EXPECT_EQ(classify_with_a(set(2, "S1")), CU);
    EXPECT_EQ(classify_with_a(set(1, "N1")), PI);
    EXPECT_EQ(classify_with_a(set(2, "S1,S2")), FI);
    EXPECT_EQ(classify_with_a(set(2, "S1,N1")), FI);
    EXPECT_THROW(classify_with_a(set(2, "A,S1")), std::invalid_argument);
    EXPECT_EQ(explain(set(3, "A,N1,N2,N3")).cls, PI);
}

TEST(complement, examples) {
    EXPECT_EQ(complement_in_register(set(2, "S1,N2")), set(2, "N1,S2"));
    EXPECT_EQ(complement_in_register(set(2, "")), set(2, "S1,N1,S2,N2"));
    EXPECT_EQ(complement_in_register(set(2, "S1,N1,S2,N2")), set(2, ""));
}

TEST(complement, class_pairs_are_dual) {
    for (int n = 1; n <= 6; ++n) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << (2 * n)); ++mask) {
            auto c = SubsetSpec::from_register_mask(n, false, mask);
            auto h = classify_with_a(c);
            auto b = classify_storage(complement_in_register(c));
            const bool ok = (h == FI && b == CU) || (h == CU && b == FI) || (h == PI && b == PI);
            ASSERT_TRUE(ok) << "n=" << n << " C=" << c.str();
        }
    }
}

TEST(classify_family, sizes_and_order) {
    auto storage = classify_family(1, false);
    ASSERT_EQ(storage.size(), 4u);
    EXPECT_EQ(storage[1].subset.str(), "S1");
    EXPECT_EQ(storage[1].predicted.cls, PI);
    auto with_a = classify_family(2, true);
    ASSERT_EQ(with_a.size(), 16u);
    for (const auto &r : with_a) {
        EXPECT_TRUE(r.subset.includes_a());
        if (r.subset.register_size() == 2 && spans_all_pairs(r.subset.with_a(false))) {
            EXPECT_EQ(r.predicted.cls, FI) << r.subset.str();
        }
    }
    EXPECT_THROW(classify_family(0, false), std::invalid_argument);
}

TEST(classify_storage, partial_only_when_size_n_odd_and_signals_odd) {
    for (int n = 1; n <= 5; ++n) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << (2 * n)); ++mask) {
            auto b = SubsetSpec::from_register_mask(n, false, mask);
            const bool partial = classify_storage(b) == PI;
            const bool expected = spans_all_pairs(b) && b.register_size() == n && n % 2 == 1 &&
                                  b.signal_count() % 2 == 1;
            EXPECT_EQ(partial, expected) << b.str();
        }
    }
}
