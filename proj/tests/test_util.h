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

#ifndef QEC_TESTS_TEST_UTIL_H
#define QEC_TESTS_TEST_UTIL_H

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qec/dense.h"
#include "qec/oracle.h"
#include "qec/pauli.h"

namespace qec::testing {

inline QubitList labels_of(const std::string &text) {
    QubitList out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        out.push_back(parse_qubit(text.substr(start, end - start)));
        start = end + 1;
    }
    return out;
}

/// Builds Σ c_k P_k from (letters, coefficient) pairs.
inline PauliSum sum_of(const QubitList &labels, const std::vector<std::pair<std::string, Complex>> &terms) {
    PauliSum out(labels);
    for (const auto &[letters, c] : terms) {
        out.add(PauliString::parse(letters, labels), c);
    }
    return out;
}

inline std::vector<BlochVector> random_inputs(int count, uint64_t seed = 2024) {
    std::mt19937_64 rng(seed);
    std::vector<BlochVector> out;
    for (int k = 0; k < count; ++k) {
        out.push_back(random_bloch(rng));
    }
    return out;
}

}  // namespace qec::testing

#endif
