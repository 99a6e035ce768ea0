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

#include "qec/encoding.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qec {

namespace {

void check_n(int n) {
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
    }
}

Matrix pauli_matrix(int mu) {
    Matrix m(2, 2);
    const Complex i(0, 1);
    switch (mu) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, -i, i, 0;
            break;
        case 3:
            m << 1, 0, 0, -1;
            break;
        default:
            throw std::out_of_range("Pauli index " + std::to_string(mu));
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

/// One Pauli term with an exact phase and a magnitude.
struct ExactTerm {
    Phase4 phase;
    PauliKey key;
};

/// The four strings of |φ_μ><φ_ν| (each with weight ¼) on local positions
/// 0 = S, 1 = N.
std::vector<ExactTerm> bell_terms(int mu, int nu) {
    const QubitList local = {Qubit::signal(1), Qubit::noise(1)};
    const PauliString left(Phase4::one(), {letter_from_index(mu), PauliLetter::I}, local);
    const PauliString right(Phase4::one(), {letter_from_index(nu), PauliLetter::I}, local);
    // |φ><φ| = ¼(II + XX - YY + ZZ)
    const PauliString base[4] = {
        PauliString::parse("+II", local),
        PauliString::parse("+XX", local),
        PauliString::parse("-YY", local),
        PauliString::parse("+ZZ", local),
    };
    std::vector<ExactTerm> out;
    for (const PauliString &b : base) {
        PauliString t = left * b * right;
        PauliKey key;
        key.set(0, t.letters()[0]);
        key.set(1, t.letters()[1]);
        out.push_back({t.phase(), key});
    }
    return out;
}

}  // namespace

Phase4 alpha(int n, int mu) {
    check_n(n);
    switch (mu) {
        case 0:
            return Phase4::one();
        case 1:
        case 3:
            return Phase4::i();
        case 2:
            return -Phase4::i_pow(n + 1);
    }
    throw std::invalid_argument("alpha index mu must be 0..3, got " + std::to_string(mu));
}

StateVector build_bell_pair(int pair) {
    Vector amps = Vector::Zero(4);
    amps(0) = amps(3) = 1.0 / std::sqrt(2.0);
    return StateVector(std::move(amps), {Qubit::signal(pair), Qubit::noise(pair)});
}

PauliSum bell_operator(int mu, int nu, int pair) {
    PauliSum out({Qubit::signal(pair), Qubit::noise(pair)});
    for (const ExactTerm &t : bell_terms(mu, nu)) {
        out.add(t.key, 0.25 * t.phase.to_complex());
    }
    out.prune();
    return out;
}

DenseOperator build_encoding_unitary(int n) {
    check_n(n);
    const int limit = dense_qubit_limit();
    if (n + 1 > limit) {
        throw DenseLimitExceeded(n + 1, limit);
    }
    const Eigen::Index d = Eigen::Index{1} << (n + 1);
    Matrix u = Matrix::Zero(d, d);
    for (int mu = 0; mu < 4; ++mu) {
        Matrix term = pauli_matrix(mu);
        for (int i = 0; i < n; ++i) {
            term = kron(term, pauli_matrix(mu));
        }
        u += 0.5 * alpha(n, mu).inverse().to_complex() * term;
    }
    QubitList labels = {Qubit::source()};
    for (int i = 1; i <= n; ++i) {
        labels.push_back(Qubit::signal(i));
    }
    return DenseOperator(std::move(u), std::move(labels));
}

StateVector encode_state_vector(int n, const BlochVector &b) {
    check_n(n);
    const int limit = dense_qubit_limit();
    if (2 * n + 1 > limit) {
        throw DenseLimitExceeded(2 * n + 1, limit);
    }
    StateVector state = bloch_to_state(b);
    for (int i = 1; i <= n; ++i) {
        state = tensor(state, build_bell_pair(i));
    }
    QubitList noises;
    for (int i = 1; i <= n; ++i) {
        noises.push_back(Qubit::noise(i));
    }
    const QubitList order = canonical_global_order(n);
    DenseOperator u = reorder(tensor(build_encoding_unitary(n), DenseOperator::identity(noises)), order);
    return StateVector(u.entries() * state.amplitudes(), order);
}

EncodedState build_encoded_unitary_path(int n, const BlochVector &b) {
    StateVector encoded = encode_state_vector(n, b);
    DenseOperator rho = DenseOperator::projector(encoded);
    PauliSum pauli = dense_to_sum(rho);
    return EncodedState{n, b, std::move(encoded), std::move(rho), std::move(pauli)};
}

PauliSum build_encoded_branch_sum(int n, const BlochVector &b) {
    check_n(n);
    if (2 * n + 1 > PauliSum::kMaxQubits) {
        throw std::invalid_argument("n too large for the Pauli representation");
    }
    const QubitList order = canonical_global_order(n);
    PauliSum rho(order);
    const double bell_weight = std::ldexp(1.0, -2 * n);
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const Phase4 branch = alpha(n, mu).inverse() * alpha(n, nu);
            const std::vector<ExactTerm> bell = bell_terms(mu, nu);

            // ⊗_i |φ_μ><φ_ν| on positions 1..2n: enumerate 4^n choices.
            std::vector<ExactTerm> reg{{Phase4::one(), PauliKey{}}};
            for (int i = 1; i <= n; ++i) {
                std::vector<ExactTerm> next;
                next.reserve(reg.size() * 4);
                const int shift = 2 * i - 1;
                for (const ExactTerm &t : reg) {
                    for (const ExactTerm &f : bell) {
                        next.push_back({t.phase * f.phase,
                                        PauliKey{t.key.x | (f.key.x << shift), t.key.z | (f.key.z << shift)}});
                    }
                }
                reg = std::move(next);
            }

            // σ_μ |ψ><ψ| σ_ν = ½ Σ_r b_r σ_μ σ_r σ_ν
            for (int r = 0; r < 4; ++r) {
                const double br = b.component(r);
                if (br == 0) {
                    continue;
                }
                LetterProduct left = pauli_product(letter_from_index(mu), letter_from_index(r));
                LetterProduct full = pauli_product(left.letter, letter_from_index(nu));
                const Phase4 a_phase = branch * left.phase * full.phase;
                PauliKey a_key;
                a_key.set(0, full.letter);
                const double weight = 0.25 * 0.5 * br * bell_weight;
                for (const ExactTerm &t : reg) {
                    rho.add(PauliKey{a_key.x | t.key.x, a_key.z | t.key.z},
                            weight * (a_phase * t.phase).to_complex());
                }
            }
        }
    }
    rho.prune();
    return rho;
}

}  // namespace qec
