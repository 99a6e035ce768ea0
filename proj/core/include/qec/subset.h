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

#ifndef QEC_SUBSET_H
#define QEC_SUBSET_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qec/qubit.h"

namespace qec {

/// Largest pair count a SubsetSpec can describe.
inline constexpr int kMaxPairs = 30;

/// A validated set of qubit labels drawn from {A} ∪ {S_i} ∪ {N_i}, i ∈ 1..n.
///
/// Signals and noises are stored as bitmasks (bit i-1 for pair i). The
/// register mask interleaves them in canonical order: bit 2(i-1) is S_i and
/// bit 2(i-1)+1 is N_i, so enumerating 0..4^n-1 walks every C ⊆ R_n.
class SubsetSpec {
   public:
    /// The empty subset of an n=0 register; placeholder for default-built records.
    SubsetSpec() = default;
    SubsetSpec(int n, bool includes_a, std::vector<int> signals, std::vector<int> noises);

    static SubsetSpec from_register_mask(int n, bool includes_a, uint64_t mask);

    /// Strict comma-separated labels, e.g. "A,S1,N2,N3". Throws
    /// std::invalid_argument naming the offending token on unknown,
    /// duplicate or out-of-range labels.
    static SubsetSpec parse(int n, std::string_view text);

    int n() const { return n_; }
    bool includes_a() const { return includes_a_; }
    uint32_t signal_mask() const { return signals_; }
    uint32_t noise_mask() const { return noises_; }
    bool has_signal(int i) const;
    bool has_noise(int i) const;

    /// Number of signal qubits (q for C-type sets, p for B-type sets).
    int signal_count() const;
    int noise_count() const;
    /// Register qubits only; A is not counted.
    int register_size() const { return signal_count() + noise_count(); }
    int size() const { return register_size() + (includes_a_ ? 1 : 0); }
    bool empty() const { return size() == 0; }

    uint64_t register_mask() const;

    /// Labels in reduced-state order: A, signals ascending, noises ascending.
    QubitList labels() const;

    SubsetSpec with_a(bool include) const;

    /// Same labels as parse() accepts; "" for the empty set.
    std::string str() const;

    bool operator==(const SubsetSpec &) const = default;

   private:
    int n_ = 0;
    bool includes_a_ = false;
    uint32_t signals_ = 0;
    uint32_t noises_ = 0;
};

}  // namespace qec

#endif
