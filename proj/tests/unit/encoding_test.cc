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

#include <cmath>

#include "qec/encoding.h"
#include "qec/pauli.h"
#include "test_util.h"

using namespace qec;
using qec::testing::labels_of;
using qec::testing::random_inputs;
using qec::testing::sum_of;

TEST(alpha, values) {
    EXPECT_EQ(alpha(1, 2), Phase4::one());
    EXPECT_EQ(alpha(2, 2), Phase4::i());
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(alpha(n, 0), Phase4::one());
        EXPECT_EQ(alpha(n, 1), Phase4::i());
        EXPECT_EQ(alpha(n, 3), Phase4::i());
    }
}

TEST(bell_pair, amplitudes_and_marginal) {
    auto phi = build_bell_pair(2);
    const double h = 1 / std::sqrt(2.0);
    EXPECT_EQ(join_labels(phi.labels()), "S2,N2");
    EXPECT_NEAR(std::abs(phi.amplitudes()(0) - h), 0, 1e-15);
    EXPECT_NEAR(std::abs(phi.amplitudes()(1)), 0, 1e-15);
    EXPECT_NEAR(std::abs(phi.amplitudes()(2)), 0, 1e-15);
    EXPECT_NEAR(std::abs(phi.amplitudes()(3) - h), 0, 1e-15);
    EXPECT_NEAR(phi.amplitudes().norm(), 1, 1e-15);
}

TEST(bell_operator, diagonal_branch_is_projector) {
    auto l = labels_of("S1,N1");
    auto want = sum_of(l, {{"II", 0.25}, {"XX", 0.25}, {"YY", -0.25}, {"ZZ", 0.25}});
    EXPECT_LT(max_coefficient_diff(bell_operator(0, 0), want), 1e-15);
    EXPECT_LT(max_entry_diff(sum_to_dense(want), DenseOperator::projector(build_bell_pair(1))), 1e-15);
}

TEST(encoding_unitary, n1_closed_form) {
    auto u = build_encoding_unitary(1);
    auto l = labels_of("A,S1");
    const Complex i(0, 1);
    auto want = sum_of(l, {{"II", 0.5}, {"XX", -0.5 * i}, {"YY", 0.5}, {"ZZ", -0.5 * i}});
    EXPECT_LT(max_entry_diff(u, sum_to_dense(want)), 1e-15);
}

TEST(encoding_unitary, unitary_up_to_n4) {
    for (int n = 1; n <= 4; ++n) {
        auto u = build_encoding_unitary(n);
        Matrix prod = u.entries() * u.entries().adjoint();
        EXPECT_LT((prod - Matrix::Identity(u.dim(), u.dim())).cwiseAbs().maxCoeff(), 1e-12) << n;
    }
}

TEST(encoded_state, n1_zero_input_is_pure) {
    auto e = build_encoded_unitary_path(1, {0, 0, 1});
    EXPECT_EQ(e.as_vector.num_qubits(), 3);
    EXPECT_NEAR(e.as_vector.amplitudes().norm(), 1, 1e-14);
    EXPECT_NEAR(e.as_density.purity().real(), 1, 1e-14);
}

TEST(encoded_state, paths_agree_up_to_n4) {
    for (int n = 1; n <= 4; ++n) {
        for (const BlochVector &b : random_inputs(n <= 2 ? 20 : 4, 100 + n)) {
            auto unitary = build_encoded_unitary_path(n, b);
            auto branch = build_encoded_branch_sum(n, b);
            EXPECT_EQ(branch.labels(), canonical_global_order(n));
            EXPECT_LT(max_entry_diff(unitary.as_density, sum_to_dense(branch)), 1e-12) << n;
        }
    }
}

TEST(encoded_state, branch_sum_trace_and_purity) {
    for (int n = 1; n <= 5; ++n) {
        for (const BlochVector &b : random_inputs(3, 200 + n)) {
            auto rho = build_encoded_branch_sum(n, b);
            EXPECT_NEAR(rho.trace().real(), 1, 1e-12);
            EXPECT_NEAR(rho.purity().real(), 1, 1e-10);
            EXPECT_TRUE(rho.is_hermitian());
        }
    }
}

TEST(encoded_state, n1_diagonal_branch_reproduces_direct_construction) {
    // μ = ν = 1 branch: (σ_1 ψ σ_1) ⊗ |φ_1⟩⟨φ_1| built two independent ways.
    BlochVector b{0.6, 0, 0.8};
    auto a = labels_of("A");
    auto psi = DenseOperator::projector(bloch_to_state(b));
    auto x = sum_to_dense(sum_of(a, {{"X", 1.0}}));
    Matrix rotated = x.entries() * psi.entries() * x.entries();
    auto direct = tensor(DenseOperator(rotated, a), sum_to_dense(bell_operator(1, 1)));
    Matrix xs = sum_to_dense(sum_of(labels_of("S1,N1"), {{"XI", 1.0}})).entries();
    Matrix phi = DenseOperator::projector(build_bell_pair(1)).entries();
    auto manual = tensor(DenseOperator(rotated, a), DenseOperator(xs * phi * xs, labels_of("S1,N1")));
    EXPECT_LT(max_entry_diff(direct, manual), 1e-15);
}
