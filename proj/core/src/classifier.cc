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

#include "qec/classifier.h"

#include <stdexcept>

namespace qec {

std::string_view to_string(InformativenessClass c) {
    switch (c) {
        case InformativenessClass::FullyInformative:
            return "FullyInformative";
        case InformativenessClass::PartiallyInformative:
            return "PartiallyInformative";
        case InformativenessClass::CompletelyUninformative:
            return "CompletelyUninformative";
    }
    return "?";
}

std::string_view short_name(InformativenessClass c) {
    switch (c) {
        case InformativenessClass::FullyInformative:
            return "FI";
        case InformativenessClass::PartiallyInformative:
            return "PI";
        case InformativenessClass::CompletelyUninformative:
            return "CU";
    }
    return "?";
}

std::string_view condition_name(Condition c) {
    switch (c) {
        case Condition::FullPair:
            return "FULL-PAIR";
        case Condition::AllPairsIncomplete:
            return "ALL-PAIRS-INCOMPLETE";
        case Condition::Span:
            return "SPAN";
        case Condition::MissingPair:
            return "MISSING-PAIR";
        case Condition::SizeBelowN:
            return "|X|<n";
        case Condition::SizeEqualsN:
            return "|X|=n";
        case Condition::SizeAboveN:
            return "|X|>n";
        case Condition::NEven:
            return "n-even";
        case Condition::NOdd:
            return "n-odd";
        case Condition::SignalsEven:
            return "signals-even";
        case Condition::SignalsOdd:
            return "signals-odd";
    }
    return "?";
}

bool has_full_pair(const SubsetSpec &s) { return (s.signal_mask() & s.noise_mask()) != 0; }

bool spans_all_pairs(const SubsetSpec &s) {
    const uint32_t all = s.n() >= 32 ? ~uint32_t{0} : (uint32_t{1} << s.n()) - 1;
    return (s.signal_mask() | s.noise_mask()) == all;
}

Classification explain_storage(const SubsetSpec &b) {
    if (b.includes_a()) {
        throw std::invalid_argument("storage subset must not contain A");
    }
    using enum Condition;
    using enum InformativenessClass;
    if (!spans_all_pairs(b)) {
        return {CompletelyUninformative, {MissingPair}};
    }
    const int n = b.n();
    const int size = b.register_size();
    if (size > n) {
        // |B| > n forces a complete pair.
        return {FullyInformative, {Span, SizeAboveN, FullPair}};
    }
    // SPAN needs at least n qubits, so here |B| = n.
    if (n % 2 == 0) {
        return {CompletelyUninformative, {Span, SizeEqualsN, NEven}};
    }
    if (b.signal_count() % 2 == 0) {
        return {CompletelyUninformative, {Span, SizeEqualsN, NOdd, SignalsEven}};
    }
    return {PartiallyInformative, {Span, SizeEqualsN, NOdd, SignalsOdd}};
}

InformativenessClass classify_storage(const SubsetSpec &b) { return explain_storage(b).cls; }

Classification explain_with_a(const SubsetSpec &c) {
    if (c.includes_a()) {
        throw std::invalid_argument("C must not contain A; pass the register part of H");
    }
    using enum Condition;
    using enum InformativenessClass;
    if (has_full_pair(c)) {
        return {FullyInformative, {FullPair}};
    }
    const int n = c.n();
    if (c.register_size() < n) {
        return {CompletelyUninformative, {AllPairsIncomplete, SizeBelowN}};
    }
    // No complete pair and |C| >= n means one qubit from every pair: |C| = n.
    if (n % 2 == 0) {
        return {FullyInformative, {AllPairsIncomplete, SizeEqualsN, NEven}};
    }
    if (c.signal_count() % 2 == 1) {
        return {FullyInformative, {AllPairsIncomplete, SizeEqualsN, NOdd, SignalsOdd}};
    }
    return {PartiallyInformative, {AllPairsIncomplete, SizeEqualsN, NOdd, SignalsEven}};
}

InformativenessClass classify_with_a(const SubsetSpec &c) { return explain_with_a(c).cls; }

Classification explain(const SubsetSpec &s) {
    return s.includes_a() ? explain_with_a(s.with_a(false)) : explain_storage(s);
}

SubsetSpec complement_in_register(const SubsetSpec &c) {
    const uint64_t all = c.n() >= 32 ? ~uint64_t{0} : (uint64_t{1} << (2 * c.n())) - 1;
    return SubsetSpec::from_register_mask(c.n(), false, all & ~c.register_mask());
}

ClassificationRecord make_record(const SubsetSpec &s) { return {s, explain(s), std::nullopt, std::nullopt}; }

std::vector<ClassificationRecord> classify_family(int n, bool include_a) {
    if (n < 1 || n > 12) {
        throw std::invalid_argument("classify_family: n must be in 1..12, got " + std::to_string(n));
    }
    std::vector<ClassificationRecord> out;
    const uint64_t count = uint64_t{1} << (2 * n);
    out.reserve(count);
    for (uint64_t mask = 0; mask < count; ++mask) {
        out.push_back(make_record(SubsetSpec::from_register_mask(n, include_a, mask)));
    }
    return out;
}

}  // namespace qec
