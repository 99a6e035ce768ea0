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

#ifndef QEC_ENCODING_H
#define QEC_ENCODING_H

#include "qec/dense.h"
#include "qec/pauli.h"

namespace qec {

/// α_0 = 1, α_1 = α_3 = i, α_2 = -i^{n+1}. Throws std::invalid_argument for
/// n < 1 or μ outside 0..3.
Phase4 alpha(int n, int mu);

/// (|00> + |11>)/√2 on (S_i, N_i).
StateVector build_bell_pair(int pair = 1);

/// |φ_μ><φ_ν| on (S_i, N_i) as a Pauli sum, where |φ_μ> = (σ_μ ⊗ I)|φ>.
PauliSum bell_operator(int mu, int nu, int pair = 1);

/// ½ Σ_μ α_μ^{-1} σ_μ^(A) ⊗ σ_μ^{⊗n} on (A, S_1, ..., S_n). Throws
/// DenseLimitExceeded when n+1 exceeds the dense ceiling.
DenseOperator build_encoding_unitary(int n);

struct EncodedState {
    int n = 0;
    BlochVector input;
    /// 2n+1 qubits in canonical global order.
    StateVector as_vector;
    DenseOperator as_density;
    PauliSum as_pauli;
};

/// U_enc (|ψ>_A ⊗ |φ>^{⊗n}) in canonical global order; the dense part of
/// build_encoded_unitary_path without the derived representations.
StateVector encode_state_vector(int n, const BlochVector &b);

/// U_enc applied to |ψ>_A ⊗ |φ>^{⊗n}; needs 2n+1 qubits within the dense
/// ceiling.
EncodedState build_encoded_unitary_path(int n, const BlochVector &b);

/// ρ_enc as a Pauli sum from the sixteen (μ,ν) branches, each Bell factor
/// expanded into Pauli strings. Labels are in canonical global order.
PauliSum build_encoded_branch_sum(int n, const BlochVector &b);

}  // namespace qec

#endif
