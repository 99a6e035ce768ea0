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

#ifndef QEC_PAULI_H
#define QEC_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qec/dense.h"
#include "qec/qubit.h"

namespace qec {

/// σ_0..σ_3.
enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(PauliLetter p);
/// Accepts I/X/Y/Z (either case) and '_' for identity.
PauliLetter letter_from_char(char c);
PauliLetter letter_from_index(int index);
inline int letter_index(PauliLetter p) { return static_cast<int>(p); }

/// An exact unit phase i^k, k in 0..3.
class Phase4 {
   public:
    constexpr Phase4() = default;
    /// i^k for any integer k.
    static constexpr Phase4 i_pow(int k) { return Phase4(static_cast<uint8_t>(((k % 4) + 4) % 4)); }
    static constexpr Phase4 one() { return i_pow(0); }
    static constexpr Phase4 i() { return i_pow(1); }
    static constexpr Phase4 minus_one() { return i_pow(2); }
    static constexpr Phase4 minus_i() { return i_pow(3); }

    constexpr int exponent() const { return k_; }
    constexpr Phase4 operator*(Phase4 o) const { return i_pow(k_ + o.k_); }
    constexpr Phase4 &operator*=(Phase4 o) { return *this = *this * o; }
    constexpr Phase4 operator-() const { return i_pow(k_ + 2); }
    constexpr Phase4 conj() const { return i_pow(-k_); }
    constexpr Phase4 inverse() const { return conj(); }
    constexpr Phase4 pow(int e) const { return i_pow(k_ * (((e % 4) + 4) % 4)); }
    constexpr bool is_real() const { return k_ % 2 == 0; }

    Complex to_complex() const;
    /// "+", "+i", "-", "-i".
    std::string str() const;

    constexpr bool operator==(const Phase4 &) const = default;

   private:
    constexpr explicit Phase4(uint8_t k) : k_(k) {}
    uint8_t k_ = 0;
};

/// (-1)^e as an exact phase.
constexpr Phase4 sign_pow(int e) { return Phase4::minus_one().pow(e); }

struct LetterProduct {
    Phase4 phase;
    PauliLetter letter;
    bool operator==(const LetterProduct &) const = default;
};

/// σ_a σ_b = phase · σ_c.
LetterProduct pauli_product(PauliLetter a, PauliLetter b);

/// A unit phase times one Pauli letter per qubit of an explicit label list.
class PauliString {
   public:
    PauliString(Phase4 phase, std::vector<PauliLetter> letters, QubitList labels);

    static PauliString identity(QubitList labels);
    /// Parses "<phase><letters>", e.g. "-iXYZI", "+XX", "YZ". The phase prefix
    /// is one of "", "+", "-", "i", "+i", "-i".
    static PauliString parse(std::string_view text, QubitList labels);

    Phase4 phase() const { return phase_; }
    const std::vector<PauliLetter> &letters() const { return letters_; }
    const QubitList &labels() const { return labels_; }
    int num_qubits() const { return static_cast<int>(letters_.size()); }

    /// Letters only, e.g. "XYZI".
    std::string letters_str() const;
    /// "<phase><letters>" with an explicit sign, e.g. "+XYZI", "-iXX".
    std::string str() const;

    PauliString dagger() const;

    bool operator==(const PauliString &) const = default;

   private:
    Phase4 phase_;
    std::vector<PauliLetter> letters_;
    QubitList labels_;
};

/// Letterwise product with accumulated phase. Throws std::invalid_argument on
/// label-list mismatch.
PauliString operator*(const PauliString &a, const PauliString &b);

/// Packed letters: bit j of x/z belongs to position j of the label list.
/// I=(0,0), X=(1,0), Y=(1,1), Z=(0,1).
struct PauliKey {
    uint64_t x = 0;
    uint64_t z = 0;

    PauliLetter letter(int position) const;
    void set(int position, PauliLetter p);
    uint64_t support() const { return x | z; }
    bool operator==(const PauliKey &) const = default;
};

struct PauliKeyHash {
    size_t operator()(const PauliKey &k) const noexcept;
};

/// Complex-weighted sum of Pauli strings on an explicit label list. Phases
/// are folded into the coefficients; coefficients with magnitude at or below
/// kPruneTolerance are dropped.
class PauliSum {
   public:
    static constexpr double kPruneTolerance = 1e-12;
    static constexpr int kMaxQubits = 64;

    using TermMap = std::unordered_map<PauliKey, Complex, PauliKeyHash>;

    explicit PauliSum(QubitList labels);

    static PauliSum identity(QubitList labels, Complex coefficient = 1.0);
    static PauliSum from_string(const PauliString &s, Complex coefficient = 1.0);

    const QubitList &labels() const { return labels_; }
    int num_qubits() const { return static_cast<int>(labels_.size()); }
    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const TermMap &terms() const { return terms_; }

    /// Accumulates without pruning; call prune() once done.
    void add(const PauliKey &key, Complex coefficient);
    void add(const PauliString &s, Complex coefficient = 1.0);
    void prune();

    Complex coefficient(const PauliKey &key) const;
    /// Coefficient of the string given by its letters, e.g. "XZI".
    Complex coefficient(std::string_view letters) const;

    /// (letters, coefficient) sorted lexicographically with I < X < Y < Z.
    std::vector<std::pair<std::string, Complex>> sorted_terms() const;

    PauliSum operator+(const PauliSum &o) const;
    PauliSum operator-(const PauliSum &o) const;
    PauliSum operator*(Complex s) const;
    /// Operator product. Labels must match.
    PauliSum operator*(const PauliSum &o) const;

    /// Tr of the represented operator: 2^m times the identity coefficient.
    Complex trace() const;
    /// Tr(rho^2) = 2^m Σ c_P^2.
    Complex purity() const;
    /// Hermitian iff every coefficient is real (within `tol`).
    bool is_hermitian(double tol = kPruneTolerance) const;
    /// Largest |entry| of the represented 2^m x 2^m matrix, computed without
    /// materializing it.
    double max_abs_entry() const;
    double max_abs_coefficient() const;

    /// Same operator on a permutation of the labels.
    PauliSum reordered(std::span<const Qubit> labels) const;
    /// Same terms with each position renamed to labels[j].
    PauliSum relabeled(QubitList labels) const;
    /// Traces out every label not in `keep`; result uses keep's order.
    PauliSum partial_trace(std::span<const Qubit> keep) const;
    /// Kronecker product with concatenated labels.
    PauliSum tensor(const PauliSum &o) const;

   private:
    QubitList labels_;
    TermMap terms_;
};

/// Largest coefficient difference after aligning b to a's label order.
double max_coefficient_diff(const PauliSum &a, const PauliSum &b);
/// Largest |entry| of a - b, computed sparsely.
double max_entry_diff(const PauliSum &a, const PauliSum &b);

/// Σ c_P ⊗σ as a dense matrix. Throws DenseLimitExceeded above `limit` qubits.
DenseOperator sum_to_dense(const PauliSum &s, int limit = dense_qubit_limit());

/// c_P = Tr(P d) / 2^m for every P, via one Walsh-Hadamard transform per
/// X-pattern. Throws std::invalid_argument when the dimension is not 2^|labels|.
PauliSum dense_to_sum(const DenseOperator &d);

/// [{"string": "XYZ", "re": 0.25, "im": 0.0}, ...] in sorted_terms() order.
nlohmann::json to_json(const PauliSum &s);
PauliSum pauli_sum_from_json(const nlohmann::json &j, QubitList labels);

}  // namespace qec

#endif
