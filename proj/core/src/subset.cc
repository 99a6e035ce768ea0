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

#include "qec/subset.h"

#include <bit>
#include <stdexcept>

namespace qec {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxPairs) {
        throw std::invalid_argument("pair count n=" + std::to_string(n) + " outside 1.." +
                                    std::to_string(kMaxPairs));
    }
}

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

SubsetSpec::SubsetSpec(int n, bool includes_a, std::vector<int> signals, std::vector<int> noises)
    : n_(n), includes_a_(includes_a) {
    check_n(n);
    auto fill = [&](const std::vector<int> &indices, uint32_t &mask, char kind) {
        for (int i : indices) {
            if (i < 1 || i > n) {
                throw std::invalid_argument(std::string(1, kind) + std::to_string(i) + " outside 1.." +
                                            std::to_string(n));
            }
            uint32_t bit = uint32_t{1} << (i - 1);
            if (mask & bit) {
                throw std::invalid_argument("duplicate label " + std::string(1, kind) + std::to_string(i));
            }
            mask |= bit;
        }
    };
    fill(signals, signals_, 'S');
    fill(noises, noises_, 'N');
}

SubsetSpec SubsetSpec::from_register_mask(int n, bool includes_a, uint64_t mask) {
    check_n(n);
    if (n < 32 && (mask >> (2 * n)) != 0) {
        throw std::invalid_argument("register mask has bits beyond 2n");
    }
    SubsetSpec s;
    s.n_ = n;
    s.includes_a_ = includes_a;
    for (int i = 0; i < n; ++i) {
        if (mask >> (2 * i) & 1) {
            s.signals_ |= uint32_t{1} << i;
        }
        if (mask >> (2 * i + 1) & 1) {
            s.noises_ |= uint32_t{1} << i;
        }
    }
    return s;
}

SubsetSpec SubsetSpec::parse(int n, std::string_view text) {
    check_n(n);
    SubsetSpec s;
    s.n_ = n;
    std::string body = trim(text);
    if (body.empty()) {
        return s;
    }
    size_t start = 0;
    while (start <= body.size()) {
        size_t comma = body.find(',', start);
        std::string token = trim(std::string_view(body).substr(start, comma == std::string::npos ? std::string::npos
                                                                                                : comma - start));
        Qubit q = parse_qubit(token);
        if (q.kind == QubitKind::A) {
            if (s.includes_a_) {
                throw std::invalid_argument("duplicate label '" + token + "'");
            }
            s.includes_a_ = true;
        } else {
            if (q.index > n) {
                throw std::invalid_argument("label '" + token + "' has index greater than n=" + std::to_string(n));
            }
            uint32_t &mask = q.kind == QubitKind::S ? s.signals_ : s.noises_;
            uint32_t bit = uint32_t{1} << (q.index - 1);
            if (mask & bit) {
                throw std::invalid_argument("duplicate label '" + token + "'");
            }
            mask |= bit;
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return s;
}

bool SubsetSpec::has_signal(int i) const { return i >= 1 && i <= n_ && (signals_ >> (i - 1) & 1); }
bool SubsetSpec::has_noise(int i) const { return i >= 1 && i <= n_ && (noises_ >> (i - 1) & 1); }
int SubsetSpec::signal_count() const { return std::popcount(signals_); }
int SubsetSpec::noise_count() const { return std::popcount(noises_); }

uint64_t SubsetSpec::register_mask() const {
    uint64_t mask = 0;
    for (int i = 0; i < n_; ++i) {
        if (signals_ >> i & 1) {
            mask |= uint64_t{1} << (2 * i);
        }
        if (noises_ >> i & 1) {
            mask |= uint64_t{1} << (2 * i + 1);
        }
    }
    return mask;
}

QubitList SubsetSpec::labels() const {
    QubitList out;
    if (includes_a_) {
        out.push_back(Qubit::source());
    }
    for (int i = 1; i <= n_; ++i) {
        if (has_signal(i)) {
            out.push_back(Qubit::signal(i));
        }
    }
    for (int i = 1; i <= n_; ++i) {
        if (has_noise(i)) {
            out.push_back(Qubit::noise(i));
        }
    }
    return out;
}

SubsetSpec SubsetSpec::with_a(bool include) const {
    SubsetSpec s = *this;
    s.includes_a_ = include;
    return s;
}

std::string SubsetSpec::str() const { return join_labels(labels()); }

}  // namespace qec
