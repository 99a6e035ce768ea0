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

#include "qec/qubit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace qec {

std::string Qubit::str() const {
    switch (kind) {
        case QubitKind::A:
            return "A";
        case QubitKind::S:
            return "S" + std::to_string(index);
        case QubitKind::N:
            return "N" + std::to_string(index);
    }
    return "?";
}

int global_position(Qubit q) {
    switch (q.kind) {
        case QubitKind::A:
            return 0;
        case QubitKind::S:
            return 2 * q.index - 1;
        case QubitKind::N:
            return 2 * q.index;
    }
    return -1;
}

bool reduced_order_less(Qubit a, Qubit b) {
    if (a.kind != b.kind) {
        return a.kind < b.kind;
    }
    return a.index < b.index;
}

QubitList canonical_global_order(int n) {
    QubitList out;
    out.reserve(2 * n + 1);
    out.push_back(Qubit::source());
    for (int i = 1; i <= n; ++i) {
        out.push_back(Qubit::signal(i));
        out.push_back(Qubit::noise(i));
    }
    return out;
}

Qubit parse_qubit(std::string_view token) {
    auto fail = [&]() -> Qubit {
        throw std::invalid_argument("unknown qubit label '" + std::string(token) + "'");
    };
    if (token.empty()) {
        return fail();
    }
    char head = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    if (head == 'A') {
        if (token.size() != 1) {
            return fail();
        }
        return Qubit::source();
    }
    if (head != 'S' && head != 'N') {
        return fail();
    }
    std::string_view digits = token.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return fail();
    }
    int index = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || index < 1) {
        return fail();
    }
    return head == 'S' ? Qubit::signal(index) : Qubit::noise(index);
}

int find_label(std::span<const Qubit> labels, Qubit q) {
    auto it = std::find(labels.begin(), labels.end(), q);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::string join_labels(std::span<const Qubit> labels) {
    std::string out;
    for (size_t k = 0; k < labels.size(); ++k) {
        if (k) {
            out += ',';
        }
        out += labels[k].str();
    }
    return out;
}

}  // namespace qec
