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

#ifndef QEC_ANALYTIC_H
#define QEC_ANALYTIC_H

#include <array>
#include <optional>
#include <string>

#include "qec/dense.h"
#include "qec/pauli.h"

namespace qec {

/// 4x4 matrix indexed by (μ, ν) whose entries are zero or an exact unit phase.
class CoeffMatrix4 {
   public:
    using Entry = std::optional<Phase4>;

    CoeffMatrix4() = default;

    const Entry &at(int mu, int nu) const { return e_[4 * mu + nu]; }
    void set(int mu, int nu, Entry v) { e_[4 * mu + nu] = v; }

    int nonzero_count() const;
    /// Bit 4μ+ν set where the entry is nonzero.
    uint16_t support() const;

    /// Entry-wise product.
    CoeffMatrix4 hadamard(const CoeffMatrix4 &o) const;
    /// Entry-wise power; the zero pattern is kept for e = 0 as well.
    CoeffMatrix4 hadamard_pow(int e) const;
    /// Sum of matrices with disjoint supports. Throws std::logic_error on overlap.
    CoeffMatrix4 disjoint_sum(const CoeffMatrix4 &o) const;

    /// Rows of "1", "i", "-1", "-i", "." right-aligned.
    std::string str() const;

    bool operator==(const CoeffMatrix4 &) const = default;

   private:
    std::array<Entry, 16> e_{};
};

CoeffMatrix4 identity_coeff4();

/// S_j, N_j, C_j^(n) as tabulated (j = 1..3).
CoeffMatrix4 s_matrix(int j);
CoeffMatrix4 n_matrix(int j);
CoeffMatrix4 c_matrix(int n, int j);

/// The same matrices rebuilt from first principles: S_j from σ_μσ_ν = δ_μν I
/// + Σ_j (S_j)_μν σ_j, N_j from (σ_νσ_μ)^T, C_j^(n) as the S_j-support part
/// of (α_μ^{-1} α_ν).
CoeffMatrix4 derived_s_matrix(int j);
CoeffMatrix4 derived_n_matrix(int j);
CoeffMatrix4 derived_c_matrix(int n, int j);

/// (α_μ^{-1} α_ν)_{μν}.
CoeffMatrix4 alpha_product_matrix(int n);

/// L_j^(n,q) = C_j^(n) ∘ S_j^{∘q} ∘ N_j^{∘(n-q)}. Throws for q outside 0..n.
CoeffMatrix4 l_matrix(int n, int q, int j);
/// The simplified L_j^(n,q) entries written in closed form.
CoeffMatrix4 l_matrix_closed_form(int n, int q, int j);

/// a + bi with integer parts.
struct GaussianInt {
    long re = 0;
    long im = 0;
    bool is_zero() const { return re == 0 && im == 0; }
    GaussianInt &operator+=(Phase4 p);
    bool operator==(const GaussianInt &) const = default;
};

/// Σ_k c_k σ_k on one qubit with exact Gaussian-integer coefficients.
struct SingleQubitOperator {
    std::array<GaussianInt, 4> coeff{};

    bool is_zero() const;
    /// Set when exactly one letter carries a real coefficient.
    std::optional<std::pair<long, PauliLetter>> as_signed_letter() const;
    /// e.g. "-4Y", "4I", "0", "(2+2i)X + 2Z".
    std::string str() const;
    bool operator==(const SingleQubitOperator &) const = default;
};

/// Γ_{j,r}^(n,q) = Σ_{μν} (L_j^(n,q))_{μν} σ_μ σ_r σ_ν, by exact Pauli algebra.
SingleQubitOperator gamma(int n, int q, int j, int r);

/// The surviving Γ in one sector: Γ_{j,r} = coefficient · letter.
struct GammaEntry {
    int r = 0;
    long coefficient = 0;
    PauliLetter letter = PauliLetter::I;
    bool operator==(const GammaEntry &) const = default;
};

struct GammaTable {
    int n = 0;
    int q = 0;
    /// sector[j-1].
    std::array<GammaEntry, 3> sector{};
    bool operator==(const GammaTable &) const = default;
};

/// Computed from gamma(). Throws std::logic_error if some sector does not
/// have exactly one nonzero Γ of the form ±4σ.
GammaTable gamma_table(int n, int q);
/// The parity selection lists, written out case by case.
GammaTable tabulated_gamma_table(int n, int q);

/// Labels (A, S_1..S_q, N_{q+1}..N_n).
QubitList with_a_form_labels(int n, int q);
/// Labels (S_1..S_p, N_{p+1}..N_n).
QubitList storage_form_labels(int n, int p);

/// I/2^{n+1} + 2^{-(n+3)} Σ_j (Γ_{j,0} + xΓ_{j,1} + yΓ_{j,2} + zΓ_{j,3}) ⊗ σ_j^{⊗n}.
PauliSum reduced_with_a_via_gamma(int n, int q, const BlochVector &b);

/// The four closed forms keyed on (n mod 2, q mod 2). The ψ-independent
/// Y_A ⊗ Y^{⊗n} term of the (odd, even) case rides on b_0 = 1.
PauliSum reduced_with_a_case_form(int n, int q, const BlochVector &b);

/// Reduced state of a storage subset with one qubit from each pair and p
/// signals: I/2^n, or 2^{-n}(I + (-1)^{(n-1)/2} y Y^{⊗n}) when n and p are odd.
PauliSum reduced_storage_span_form(int n, int p, const BlochVector &b);

}  // namespace qec

#endif
