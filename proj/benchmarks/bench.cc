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

#include <benchmark/benchmark.h>

#include "qec/encoding.h"
#include "qec/oracle.h"
#include "qec/pauli.h"

using namespace qec;

namespace {

const BlochVector kInput{0.48, 0.6, 0.64};

SubsetSpec half_register(int n) {
    // A plus every other register qubit: a size-n span set.
    uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
        mask |= uint64_t{1} << (2 * i + (i % 2));
    }
    return SubsetSpec::from_register_mask(n, true, mask);
}

}  // namespace

static void encode_state_vector_n(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_state_vector(n, kInput));
    }
}
BENCHMARK(encode_state_vector_n)->DenseRange(1, 4);

static void encoded_branch_sum_n(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_encoded_branch_sum(n, kInput));
    }
}
BENCHMARK(encoded_branch_sum_n)->DenseRange(1, 6);

static void reduce_dense_n(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const StateVector psi = encode_state_vector(n, kInput);
    const SubsetSpec keep = half_register(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(DenseOracle::reduce(psi, keep));
    }
}
BENCHMARK(reduce_dense_n)->DenseRange(1, 4);

static void reduce_support_index_n(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const SupportIndex index(build_encoded_branch_sum(n, kInput));
    const SubsetSpec keep = half_register(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(index.reduce(keep));
    }
}
BENCHMARK(reduce_support_index_n)->DenseRange(1, 6);

static void max_abs_entry_n(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const PauliSum rho = SupportIndex(build_encoded_branch_sum(n, kInput)).reduce(half_register(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho.max_abs_entry());
    }
}
BENCHMARK(max_abs_entry_n)->DenseRange(1, 6);

static void verify_sweep(benchmark::State &state) {
    VerifyOptions opt;
    opt.n_max = static_cast<int>(state.range(0));
    opt.path = state.range(1) == 0 ? PathChoice::Dense : PathChoice::Pauli;
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_all(opt));
    }
}
BENCHMARK(verify_sweep)->Args({3, 0})->Args({3, 1})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
