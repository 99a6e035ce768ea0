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

#ifndef QEC_CLASSIFIER_H
#define QEC_CLASSIFIER_H

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qec/subset.h"

namespace qec {

enum class InformativenessClass : uint8_t {
    FullyInformative,
    PartiallyInformative,
    CompletelyUninformative,
};

/// "FullyInformative", ...
std::string_view to_string(InformativenessClass c);
/// "FI", "PI", "CU".
std::string_view short_name(InformativenessClass c);

/// Structural conditions and branch points of the two decision trees.
enum class Condition : uint8_t {
    FullPair,
    AllPairsIncomplete,
    Span,
    MissingPair,
    SizeBelowN,
    SizeEqualsN,
    SizeAboveN,
    NEven,
    NOdd,
    SignalsEven,
    SignalsOdd,
};

/// "FULL-PAIR", "ALL-PAIRS-INCOMPLETE", "SPAN", "MISSING-PAIR", "|X|<n",
/// "|X|=n", "|X|>n", "n-even", "n-odd", "signals-even", "signals-odd".
std::string_view condition_name(Condition c);

struct Classification {
    InformativenessClass cls;
    /// Conditions fired, in the order the tree tests them.
    std::vector<Condition> rule_path;
};

/// ∃k: S_k and N_k both present. A is ignored.
bool has_full_pair(const SubsetSpec &s);
/// ∀j: S_j or N_j present. A is ignored.
bool spans_all_pairs(const SubsetSpec &s);
inline bool has_missing_pair(const SubsetSpec &s) { return !spans_all_pairs(s); }
inline bool all_pairs_incomplete(const SubsetSpec &s) { return !has_full_pair(s); }

/// Storage-register tree for B ⊆ R_n. Throws std::invalid_argument if B
/// contains A.
Classification explain_storage(const SubsetSpec &b);
InformativenessClass classify_storage(const SubsetSpec &b);

/// Tree for H = {A} ∪ C, given C ⊆ R_n. Throws std::invalid_argument if C
/// contains A.
Classification explain_with_a(const SubsetSpec &c);
InformativenessClass classify_with_a(const SubsetSpec &c);

/// Dispatches on includes_a(): H-sets go through explain_with_a on C = H \ {A}.
Classification explain(const SubsetSpec &s);

/// B = R_n \ C. A membership is dropped.
SubsetSpec complement_in_register(const SubsetSpec &c);

/// Subset, predicted class with its rule path, and (once an oracle has
/// looked at it) the active Bloch channels with their operator norms.
struct ClassificationRecord {
    SubsetSpec subset;
    Classification predicted;
    std::optional<std::array<bool, 3>> active_channels;
    std::optional<std::array<double, 3>> evidence;
};

ClassificationRecord make_record(const SubsetSpec &s);

/// Every subset of the family for pair count n, in register-mask order.
std::vector<ClassificationRecord> classify_family(int n, bool include_a);

}  // namespace qec

#endif
