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

#include "qec/dense.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace qec {

namespace {

void check_distinct(std::span<const Qubit> labels) {
    for (size_t a = 0; a < labels.size(); ++a) {
        for (size_t b = a + 1; b < labels.size(); ++b) {
            if (labels[a] == labels[b]) {
                throw std::invalid_argument("label " + labels[a].str() + " appears twice");
            }
        }
    }
}

Eigen::Index dim_for(size_t qubits) { return Eigen::Index{1} << qubits; }

/// For a split of `labels` into `keep` (in keep's order) and the rest (in
/// label order), index tables such that full = keep_part[a] | rest_part[t].
struct IndexSplit {
    std::vector<uint32_t> keep_part;
    std::vector<uint32_t> rest_part;
};

IndexSplit split_indices(std::span<const Qubit> labels, std::span<const Qubit> keep) {
    const int m = static_cast<int>(labels.size());
    const int k = static_cast<int>(keep.size());
    check_distinct(keep);
    std::vector<int> keep_pos(k);
    std::vector<bool> kept(m, false);
    for (int i = 0; i < k; ++i) {
        int p = find_label(labels, keep[i]);
        if (p < 0) {
            throw std::invalid_argument("label " + keep[i].str() + " is not present in [" + join_labels(labels) +
                                        "]");
        }
        keep_pos[i] = p;
        kept[p] = true;
    }
    std::vector<int> rest_pos;
    for (int p = 0; p < m; ++p) {
        if (!kept[p]) {
            rest_pos.push_back(p);
        }
    }
    auto table = [m](const std::vector<int> &positions) {
        const int w = static_cast<int>(positions.size());
        std::vector<uint32_t> out(size_t{1} << w, 0);
        for (size_t a = 0; a < out.size(); ++a) {
            uint32_t full = 0;
            for (int i = 0; i < w; ++i) {
                if (a >> (w - 1 - i) & 1) {
                    full |= uint32_t{1} << (m - 1 - positions[i]);
                }
            }
            out[a] = full;
        }
        return out;
    };
    return {table(keep_pos), table(rest_pos)};
}

std::vector<uint32_t> permutation_to_old(std::span<const Qubit> old_labels, std::span<const Qubit> new_labels) {
    if (old_labels.size() != new_labels.size()) {
        throw std::invalid_argument("reorder: label sets differ");
    }
    IndexSplit split = split_indices(old_labels, new_labels);
    return split.keep_part;
}

}  // namespace

int dense_qubit_limit() {
    if (const char *env = std::getenv("QEC_DENSE_LIMIT")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<int>(std::min<long>(v, 14));
        }
    }
    return kDefaultDenseQubitLimit;
}

DenseLimitExceeded::DenseLimitExceeded(int qubits, int limit)
    : std::length_error("dense path needs " + std::to_string(qubits) + " qubits but the ceiling is " +
                        std::to_string(limit) + " (set QEC_DENSE_LIMIT to raise it)") {}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double BlochVector::component(int r) const {
    switch (r) {
        case 0:
            return 1.0;
        case 1:
            return x;
        case 2:
            return y;
        case 3:
            return z;
    }
    throw std::out_of_range("Bloch component index " + std::to_string(r));
}

StateVector::StateVector(Vector amplitudes, QubitList labels) : amps_(std::move(amplitudes)), labels_(std::move(labels)) {
    check_distinct(labels_);
    if (amps_.size() != dim_for(labels_.size())) {
        throw std::invalid_argument("state vector length " + std::to_string(amps_.size()) + " is not 2^" +
                                    std::to_string(labels_.size()));
    }
    if (std::abs(amps_.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

DenseOperator::DenseOperator(Matrix entries, QubitList labels) : m_(std::move(entries)), labels_(std::move(labels)) {
    check_distinct(labels_);
    if (m_.rows() != m_.cols() || m_.rows() != dim_for(labels_.size())) {
        throw std::invalid_argument("operator shape " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) +
                                    " does not match " + std::to_string(labels_.size()) + " qubits");
    }
}

DenseOperator DenseOperator::identity(QubitList labels) {
    Eigen::Index d = dim_for(labels.size());
    return DenseOperator(Matrix::Identity(d, d), std::move(labels));
}

DenseOperator DenseOperator::projector(const StateVector &state) {
    const Vector &v = state.amplitudes();
    return DenseOperator(v * v.adjoint(), state.labels());
}

DenseOperator DenseOperator::scalar(Complex value) {
    Matrix m(1, 1);
    m(0, 0) = value;
    return DenseOperator(std::move(m), {});
}

Complex DenseOperator::trace() const { return m_.trace(); }

Complex DenseOperator::purity() const {
    // Tr(rho^2) = sum_ij rho_ij rho_ji
    return (m_.array() * m_.transpose().array()).sum();
}

double DenseOperator::max_abs() const { return m_.size() ? m_.cwiseAbs().maxCoeff() : 0.0; }

double DenseOperator::hermiticity_error() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }

bool DenseOperator::is_density_matrix() const {
    if (hermiticity_error() > 1e-12 || std::abs(trace() - Complex(1.0)) > 1e-12) {
        return false;
    }
    std::vector<double> ev = eigenvalues();
    return ev.empty() || ev.front() >= -1e-10;
}

std::vector<double> DenseOperator::eigenvalues() const {
    Matrix h = (m_ + m_.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

DenseOperator DenseOperator::operator+(const DenseOperator &o) const {
    return DenseOperator(m_ + reorder(o, labels_).entries(), labels_);
}

DenseOperator DenseOperator::operator-(const DenseOperator &o) const {
    return DenseOperator(m_ - reorder(o, labels_).entries(), labels_);
}

DenseOperator DenseOperator::operator*(Complex s) const { return DenseOperator(m_ * s, labels_); }

double max_entry_diff(const DenseOperator &a, const DenseOperator &b) {
    return (a.entries() - reorder(b, a.labels()).entries()).cwiseAbs().maxCoeff();
}

DenseOperator tensor(const DenseOperator &a, const DenseOperator &b) {
    QubitList labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    check_distinct(labels);
    const Matrix &x = a.entries();
    const Matrix &y = b.entries();
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return DenseOperator(std::move(out), std::move(labels));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    QubitList labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    check_distinct(labels);
    const Vector &x = a.amplitudes();
    const Vector &y = b.amplitudes();
    Vector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out.segment(i * y.size(), y.size()) = x(i) * y;
    }
    return StateVector(std::move(out), std::move(labels));
}

DenseOperator reorder(const DenseOperator &op, std::span<const Qubit> labels) {
    if (std::equal(labels.begin(), labels.end(), op.labels().begin(), op.labels().end())) {
        return op;
    }
    std::vector<uint32_t> old = permutation_to_old(op.labels(), labels);
    const Eigen::Index d = op.dim();
    Matrix out(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            out(r, c) = op.entries()(old[r], old[c]);
        }
    }
    return DenseOperator(std::move(out), QubitList(labels.begin(), labels.end()));
}

StateVector reorder(const StateVector &state, std::span<const Qubit> labels) {
    if (std::equal(labels.begin(), labels.end(), state.labels().begin(), state.labels().end())) {
        return state;
    }
    std::vector<uint32_t> old = permutation_to_old(state.labels(), labels);
    Vector out(state.amplitudes().size());
    for (Eigen::Index r = 0; r < out.size(); ++r) {
        out(r) = state.amplitudes()(old[r]);
    }
    return StateVector(std::move(out), QubitList(labels.begin(), labels.end()));
}

DenseOperator partial_trace(const DenseOperator &rho, std::span<const Qubit> keep) {
    IndexSplit split = split_indices(rho.labels(), keep);
    const auto dk = static_cast<Eigen::Index>(split.keep_part.size());
    const Matrix &m = rho.entries();
    Matrix out = Matrix::Zero(dk, dk);
    for (Eigen::Index a = 0; a < dk; ++a) {
        for (Eigen::Index b = 0; b < dk; ++b) {
            Complex acc = 0;
            for (uint32_t t : split.rest_part) {
                acc += m(split.keep_part[a] | t, split.keep_part[b] | t);
            }
            out(a, b) = acc;
        }
    }
    return DenseOperator(std::move(out), QubitList(keep.begin(), keep.end()));
}

DenseOperator partial_trace(const DenseOperator &rho, const SubsetSpec &keep) {
    QubitList labels = keep.labels();
    return partial_trace(rho, labels);
}

DenseOperator reduced_density(const StateVector &psi, std::span<const Qubit> keep) {
    IndexSplit split = split_indices(psi.labels(), keep);
    const auto dk = static_cast<Eigen::Index>(split.keep_part.size());
    const auto dt = static_cast<Eigen::Index>(split.rest_part.size());
    Matrix amps(dk, dt);
    for (Eigen::Index a = 0; a < dk; ++a) {
        for (Eigen::Index t = 0; t < dt; ++t) {
            amps(a, t) = psi.amplitudes()(split.keep_part[a] | split.rest_part[t]);
        }
    }
    return DenseOperator(amps * amps.adjoint(), QubitList(keep.begin(), keep.end()));
}

StateVector bloch_to_state(const BlochVector &b, Qubit label) {
    double r = b.norm();
    if (std::abs(r - 1.0) > 1e-10) {
        throw std::invalid_argument("Bloch vector has norm " + std::to_string(r) + ", expected 1");
    }
    double x = b.x / r, y = b.y / r, z = b.z / r;
    Vector amps(2);
    if (1.0 + z <= 0.0) {
        amps << 0.0, 1.0;
    } else {
        double a0 = std::sqrt((1.0 + z) / 2.0);
        amps << a0, Complex(x, y) / (2.0 * a0);
        amps.normalize();
    }
    return StateVector(std::move(amps), {label});
}

double single_qubit_expectation(const StateVector &psi, int pauli_index) {
    if (psi.num_qubits() != 1) {
        throw std::invalid_argument("expected a single-qubit state");
    }
    Complex a0 = psi.amplitudes()(0), a1 = psi.amplitudes()(1);
    switch (pauli_index) {
        case 1:
            return 2.0 * (std::conj(a0) * a1).real();
        case 2:
            return 2.0 * (std::conj(a0) * a1).imag();
        case 3:
            return std::norm(a0) - std::norm(a1);
    }
    throw std::out_of_range("Pauli index must be 1..3");
}

nlohmann::json to_json(const DenseOperator &op) {
    nlohmann::json labels = nlohmann::json::array();
    for (const Qubit &q : op.labels()) {
        labels.push_back(q.str());
    }
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < op.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < op.dim(); ++c) {
            row.push_back({op.entries()(r, c).real(), op.entries()(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return {{"labels", std::move(labels)}, {"entries", std::move(rows)}};
}

}  // namespace qec
