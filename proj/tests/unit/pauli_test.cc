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

#include <random>

#include "qec/pauli.h"
#include "test_util.h"

using namespace qec;
using qec::testing::labels_of;
using qec::testing::sum_of;

namespace {

Matrix pauli_matrix(PauliLetter p) {
    Matrix m(2, 2);
    const Complex i(0, 1);
    switch (p) {
        case PauliLetter::I:
            m << 1, 0, 0, 1;
            break;
        case PauliLetter::X:
            m << 0, 1, 1, 0;
            break;
        case PauliLetter::Y:
            m << 0, -i, i, 0;
            break;
        case PauliLetter::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

Matrix kron_string(const PauliString &s) {
    Matrix out = Matrix::Identity(1, 1) * s.phase().to_complex();
    for (PauliLetter p : s.letters()) {
        out = kron(out, pauli_matrix(p));
    }
    return out;
}

PauliSum random_sum(int qubits, std::mt19937_64 &rng, int terms) {
    QubitList labels = canonical_global_order(qubits / 2);
    labels.resize(qubits);
    std::uniform_int_distribution<int> letter(0, 3);
    std::normal_distribution<double> coeff;
    PauliSum out(labels);
    for (int k = 0; k < terms; ++k) {
        PauliKey key;
        for (int j = 0; j < qubits; ++j) {
            key.set(j, letter_from_index(letter(rng)));
        }
        out.add(key, Complex(coeff(rng), coeff(rng)));
    }
    return out;
}

}  // namespace

TEST(phase4, arithmetic) {
    EXPECT_EQ(Phase4::i() * Phase4::i(), Phase4::minus_one());
    EXPECT_EQ(-Phase4::i(), Phase4::minus_i());
    EXPECT_EQ(Phase4::i().conj(), Phase4::minus_i());
    EXPECT_EQ(Phase4::i().pow(3), Phase4::minus_i());
    EXPECT_EQ(Phase4::i_pow(-5), Phase4::minus_i());
    EXPECT_EQ(Phase4::minus_i().str(), "-i");
}

TEST(pauli_product, single_letters) {
    EXPECT_EQ(pauli_product(PauliLetter::I, PauliLetter::X), (LetterProduct{Phase4::one(), PauliLetter::X}));
    EXPECT_EQ(pauli_product(PauliLetter::X, PauliLetter::Y), (LetterProduct{Phase4::i(), PauliLetter::Z}));
    EXPECT_EQ(pauli_product(PauliLetter::Y, PauliLetter::X), (LetterProduct{Phase4::minus_i(), PauliLetter::Z}));
}

TEST(pauli_product, matches_matrices_for_all_pairs) {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            auto p = pauli_product(letter_from_index(a), letter_from_index(b));
            Matrix want = pauli_matrix(letter_from_index(a)) * pauli_matrix(letter_from_index(b));
            Matrix got = p.phase.to_complex() * pauli_matrix(p.letter);
            EXPECT_LT((want - got).cwiseAbs().maxCoeff(), 1e-15) << a << b;
        }
    }
}

TEST(pauli_string, products) {
    auto l2 = labels_of("S1,N1");
    EXPECT_EQ(PauliString::parse("XX", l2) * PauliString::parse("YY", l2), PauliString::parse("-ZZ", l2));
    auto id = PauliString::identity(l2);
    auto s = PauliString::parse("-iXZ", l2);
    EXPECT_EQ(id * s, s);
    auto l1 = labels_of("A");
    EXPECT_EQ(PauliString::parse("X", l1) * PauliString::parse("X", l1), PauliString::identity(l1));
    EXPECT_THROW(PauliString::parse("X", l1) * PauliString::parse("X", labels_of("S1")), std::invalid_argument);
}

TEST(pauli_string, parse_and_print) {
    auto l = labels_of("A,S1,N1,S2");
    auto s = PauliString::parse("-iXYZI", l);
    EXPECT_EQ(s.phase(), Phase4::minus_i());
    EXPECT_EQ(s.letters_str(), "XYZI");
    EXPECT_EQ(s.str(), "-iXYZI");
    EXPECT_EQ(PauliString::parse("YZ_X", l).str(), "+YZIX");
    EXPECT_THROW(PauliString::parse("XYZ", l), std::invalid_argument);
    EXPECT_THROW(PauliString::parse("XYZQ", l), std::invalid_argument);
    EXPECT_EQ(PauliString::parse("-iXYZI", l).dagger().str(), "+iXYZI");
}

TEST(pauli_string, product_matches_kron_on_random_strings) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> letter(0, 3);
    auto l = labels_of("A,S1,N1,S2");
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<PauliLetter> a, b;
        for (int j = 0; j < 4; ++j) {
            a.push_back(letter_from_index(letter(rng)));
            b.push_back(letter_from_index(letter(rng)));
        }
        PauliString sa(Phase4::i_pow(letter(rng)), a, l);
        PauliString sb(Phase4::i_pow(letter(rng)), b, l);
        Matrix want = kron_string(sa) * kron_string(sb);
        EXPECT_LT((want - kron_string(sa * sb)).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(pauli_sum, bell_projector_dense) {
    auto l = labels_of("S1,N1");
    auto bell = sum_of(l, {{"II", 0.25}, {"XX", 0.25}, {"YY", -0.25}, {"ZZ", 0.25}});
    Matrix want = Matrix::Zero(4, 4);
    want(0, 0) = want(0, 3) = want(3, 0) = want(3, 3) = 0.5;
    EXPECT_LT((sum_to_dense(bell).entries() - want).cwiseAbs().maxCoeff(), 1e-15);
    auto back = dense_to_sum(sum_to_dense(bell));
    EXPECT_LT(max_coefficient_diff(back, bell), 1e-15);
    EXPECT_EQ(back.size(), 4u);
}

TEST(pauli_sum, half_identity_round_trip) {
    auto l = labels_of("A");
    auto half = sum_of(l, {{"I", 0.5}});
    EXPECT_LT((sum_to_dense(half).entries() - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(max_coefficient_diff(dense_to_sum(sum_to_dense(half)), half), 1e-15);
}

TEST(pauli_sum, dense_round_trip_random) {
    std::mt19937_64 rng(11);
    for (int qubits = 1; qubits <= 5; ++qubits) {
        auto s = random_sum(qubits, rng, 12);
        EXPECT_LT(max_coefficient_diff(dense_to_sum(sum_to_dense(s)), s), 1e-13) << qubits;
    }
}

TEST(pauli_sum, product_matches_dense_product) {
    std::mt19937_64 rng(12);
    for (int qubits = 1; qubits <= 4; ++qubits) {
        auto a = random_sum(qubits, rng, 6);
        auto b = random_sum(qubits, rng, 6);
        Matrix want = sum_to_dense(a).entries() * sum_to_dense(b).entries();
        EXPECT_LT((sum_to_dense(a * b).entries() - want).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(pauli_sum, max_abs_entry_matches_dense) {
    std::mt19937_64 rng(13);
    for (int qubits = 1; qubits <= 6; ++qubits) {
        auto s = random_sum(qubits, rng, 10);
        EXPECT_NEAR(s.max_abs_entry(), sum_to_dense(s).max_abs(), 1e-12) << qubits;
    }
}

TEST(pauli_sum, partial_trace_matches_dense) {
    std::mt19937_64 rng(14);
    auto s = random_sum(5, rng, 40);
    auto keep = labels_of("N2,A");
    auto got = s.partial_trace(keep);
    auto want = partial_trace(sum_to_dense(s), keep);
    EXPECT_LT(max_entry_diff(sum_to_dense(got), want), 1e-12);
}

TEST(pauli_sum, reorder_matches_dense) {
    std::mt19937_64 rng(15);
    auto s = random_sum(3, rng, 10);
    auto perm = labels_of("N1,A,S1");
    EXPECT_LT(max_entry_diff(sum_to_dense(s.reordered(perm)), reorder(sum_to_dense(s), perm)), 1e-13);
}

TEST(pauli_sum, trace_purity_hermiticity) {
    auto l = labels_of("S1,N1");
    auto bell = sum_of(l, {{"II", 0.25}, {"XX", 0.25}, {"YY", -0.25}, {"ZZ", 0.25}});
    EXPECT_NEAR(bell.trace().real(), 1.0, 1e-15);
    EXPECT_NEAR(bell.purity().real(), 1.0, 1e-15);
    EXPECT_TRUE(bell.is_hermitian());
    auto skew = sum_of(l, {{"XY", Complex(0, 1)}});
    EXPECT_FALSE(skew.is_hermitian());
}

TEST(pauli_sum, json_round_trip) {
    auto l = labels_of("A,S1");
    auto s = sum_of(l, {{"II", 0.25}, {"ZX", -0.125}, {"YY", Complex(0, 0.5)}});
    auto j = to_json(s);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0]["string"], "II");
    EXPECT_EQ(j[0]["re"], 0.25);
    EXPECT_LT(max_coefficient_diff(pauli_sum_from_json(j, l), s), 0.0 + 1e-300);
}

TEST(pauli_sum, prune_drops_small_terms) {
    auto l = labels_of("A");
    PauliSum s(l);
    s.add(PauliString::parse("X", l), 1e-14);
    s.add(PauliString::parse("Z", l), 0.5);
    s.prune();
    EXPECT_EQ(s.size(), 1u);
}
