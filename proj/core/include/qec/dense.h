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

#ifndef QEC_DENSE_H
#define QEC_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "qec/qubit.h"
#include "qec/subset.h"

namespace qec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default ceiling on the number of qubits handled by dense routines:
/// 2n+1 = 9 at n = 4, i.e. 512x512 operators.
inline constexpr int kDefaultDenseQubitLimit = 9;

/// Dense qubit ceiling. `QEC_DENSE_LIMIT` overrides the default when it holds
/// a positive integer (values above 14 are clamped).
int dense_qubit_limit();

/// Thrown when a dense routine would exceed the configured qubit ceiling.
class DenseLimitExceeded : public std::length_error {
   public:
    DenseLimitExceeded(int qubits, int limit);
};

/// Expectations (x, y, z) of X, Y, Z on a single qubit; b_0 = 1 is implicit.
struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 1;

    double norm() const;
    /// Component r of (1, x, y, z).
    double component(int r) const;
};

class StateVector {
   public:
    /// Throws std::invalid_argument when the length is not 2^|labels|, the
    /// labels repeat, or the norm differs from 1 by more than 1e-12.
    StateVector(Vector amplitudes, QubitList labels);

    const Vector &amplitudes() const { return amps_; }
    const QubitList &labels() const { return labels_; }
    int num_qubits() const { return static_cast<int>(labels_.size()); }

   private:
    Vector amps_;
    QubitList labels_;
};

/// Square complex matrix on an ordered qubit-label list. Basis index bit
/// (m-1-j) belongs to labels[j], so labels[0] is the most significant qubit.
class DenseOperator {
   public:
    DenseOperator(Matrix entries, QubitList labels);

    static DenseOperator identity(QubitList labels);
    static DenseOperator projector(const StateVector &state);
    static DenseOperator scalar(Complex value);

    const Matrix &entries() const { return m_; }
    const QubitList &labels() const { return labels_; }
    int num_qubits() const { return static_cast<int>(labels_.size()); }
    Eigen::Index dim() const { return m_.rows(); }

    Complex trace() const;
    /// Tr(rho^2).
    Complex purity() const;
    double max_abs() const;
    double hermiticity_error() const;
    /// Hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-10.
    bool is_density_matrix() const;
    /// Eigenvalues of the Hermitian part, ascending.
    std::vector<double> eigenvalues() const;

    DenseOperator operator+(const DenseOperator &o) const;
    DenseOperator operator-(const DenseOperator &o) const;
    DenseOperator operator*(Complex s) const;

   private:
    Matrix m_;
    QubitList labels_;
};

/// Largest |a_ij - b_ij| after aligning b to a's label order. Throws when the
/// label sets differ.
double max_entry_diff(const DenseOperator &a, const DenseOperator &b);

/// Kronecker product with concatenated labels. Throws on label collision.
DenseOperator tensor(const DenseOperator &a, const DenseOperator &b);
StateVector tensor(const StateVector &a, const StateVector &b);

/// Same operator expressed on a permutation of its labels.
DenseOperator reorder(const DenseOperator &op, std::span<const Qubit> labels);
StateVector reorder(const StateVector &state, std::span<const Qubit> labels);

/// Traces out every label not in `keep`; the result uses keep's order. An
/// empty keep yields a 1x1 operator holding the trace.
DenseOperator partial_trace(const DenseOperator &rho, std::span<const Qubit> keep);
/// Reduced state on the subset's labels in reduced-state order.
DenseOperator partial_trace(const DenseOperator &rho, const SubsetSpec &keep);

/// Reduced density matrix of the pure state |psi><psi| on `keep`, without
/// forming the full projector.
DenseOperator reduced_density(const StateVector &psi, std::span<const Qubit> keep);

/// Single-qubit pure state with the given Bloch vector. The |0> amplitude is
/// real and nonnegative; |1> is chosen when it vanishes. Throws
/// std::invalid_argument when |b| differs from 1 by more than 1e-10.
StateVector bloch_to_state(const BlochVector &b, Qubit label = Qubit::source());

/// <psi|P|psi> for a single-qubit state and P in {X, Y, Z} (index 1..3).
double single_qubit_expectation(const StateVector &psi, int pauli_index);

/// {"labels": [...], "entries": [[[re, im], ...], ...]}
nlohmann::json to_json(const DenseOperator &op);

}  // namespace qec

#endif
