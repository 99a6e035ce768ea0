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

#ifndef QEC_QUBIT_H
#define QEC_QUBIT_H

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qec {

/// Role of a qubit in the encoded system: the transformed input A, or one half
/// of the i-th signal/noise Bell pair.
enum class QubitKind : uint8_t { A = 0, S = 1, N = 2 };

struct Qubit {
    QubitKind kind = QubitKind::A;
    int index = 0;  // 0 for A, 1-based pair index otherwise

    static constexpr Qubit source() { return {QubitKind::A, 0}; }
    static constexpr Qubit signal(int i) { return {QubitKind::S, i}; }
    static constexpr Qubit noise(int i) { return {QubitKind::N, i}; }

    /// "A", "S3", "N1".
    std::string str() const;

    bool operator==(const Qubit &) const = default;
};

using QubitList = std::vector<Qubit>;

/// Position in the canonical global order A, S1, N1, S2, N2, ..., Sn, Nn.
int global_position(Qubit q);

/// Ordering used for reduced states: A first, then signals ascending, then
/// noises ascending.
bool reduced_order_less(Qubit a, Qubit b);

/// A, S1, N1, ..., Sn, Nn.
QubitList canonical_global_order(int n);

/// Parses one label (case-insensitive). Throws std::invalid_argument naming
/// the token on failure.
Qubit parse_qubit(std::string_view token);

/// Index of `q` in `labels`, or -1.
int find_label(std::span<const Qubit> labels, Qubit q);

std::string join_labels(std::span<const Qubit> labels);

}  // namespace qec

#endif
