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

#include "qec/oracle.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qec/analytic.h"
#include "qec/encoding.h"

namespace qec {

namespace {

template <class Op>
ChannelDecomposition<Op> solve_channels(QubitList labels, const std::array<Op, 5> &reduced,
                                        const BlochVector &check) {
    const Op &pz = reduced[0];
    const Op &mz = reduced[1];
    const Op &px = reduced[2];
    const Op &py = reduced[3];
    Op t0 = (pz + mz) * Complex(0.5);
    Op t3 = (pz - mz) * Complex(0.5);
    Op t1 = px - t0;
    Op t2 = py - t0;
    ChannelDecomposition<Op> d{std::move(labels), {t0, t1, t2, t3}, {}, 0};
    Op model = t0 + t1 * Complex(check.x) + t2 * Complex(check.y) + t3 * Complex(check.z);
    if constexpr (std::is_same_v<Op, DenseOperator>) {
        for (int r = 0; r < 4; ++r) {
            d.norms[r] = d.channels[r].max_abs();
        }
        d.consistency_error = max_entry_diff(reduced[4], model);
    } else {
        for (int r = 0; r < 4; ++r) {
            d.norms[r] = d.channels[r].max_abs_entry();
        }
        d.consistency_error = max_entry_diff(reduced[4], model);
    }
    return d;
}

void check_keep(int n, const SubsetSpec &keep) {
    if (keep.n() != n) {
        throw std::invalid_argument("subset is for n=" + std::to_string(keep.n()) + ", oracle for n=" +
                                    std::to_string(n));
    }
}

double spectrum_gap(std::vector<double> a, std::vector<double> b) {
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    const size_t len = std::max(a.size(), b.size());
    a.resize(len, 0.0);
    b.resize(len, 0.0);
    double worst = 0;
    for (size_t k = 0; k < len; ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

}  // namespace

std::string_view to_string(OraclePath p) { return p == OraclePath::Dense ? "dense" : "pauli"; }

std::array<BlochVector, 4> probe_inputs() {
    return {BlochVector{0, 0, 1}, BlochVector{0, 0, -1}, BlochVector{1, 0, 0}, BlochVector{0, 1, 0}};
}

BlochVector random_bloch(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> cos_theta(-1.0, 1.0);
    std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
    const double z = cos_theta(rng);
    const double a = phi(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(a), r * std::sin(a), z};
}

std::mt19937_64 seeded_rng(uint64_t seed, int n) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(n)};
    return std::mt19937_64(seq);
}

DenseOracle::DenseOracle(int n, std::mt19937_64 &rng)
    : n_(n),
      check_input_(random_bloch(rng)),
      states_{encode_state_vector(n, probe_inputs()[0]), encode_state_vector(n, probe_inputs()[1]),
              encode_state_vector(n, probe_inputs()[2]), encode_state_vector(n, probe_inputs()[3]),
              encode_state_vector(n, check_input_)} {}

DenseOperator DenseOracle::reduce(const StateVector &encoded, const SubsetSpec &keep) {
    QubitList labels = keep.labels();
    return reduced_density(encoded, labels);
}

ChannelDecomposition<DenseOperator> DenseOracle::decompose(const SubsetSpec &keep) const {
    check_keep(n_, keep);
    std::array<DenseOperator, 5> reduced{reduce(states_[0], keep), reduce(states_[1], keep), reduce(states_[2], keep),
                                         reduce(states_[3], keep), reduce(states_[4], keep)};
    return solve_channels(keep.labels(), reduced, check_input_);
}

uint64_t global_mask(const SubsetSpec &s) {
    uint64_t mask = 0;
    for (const Qubit &q : s.labels()) {
        mask |= uint64_t{1} << global_position(q);
    }
    return mask;
}

SupportIndex::SupportIndex(const PauliSum &global) : n_((global.num_qubits() - 1) / 2) {
    if (global.labels() != canonical_global_order(n_)) {
        throw std::invalid_argument("SupportIndex expects labels in canonical global order");
    }
    for (const auto &[key, c] : global.terms()) {
        buckets_[key.support()].emplace_back(key, c);
    }
}

PauliSum SupportIndex::reduce(const SubsetSpec &keep) const {
    check_keep(n_, keep);
    QubitList labels = keep.labels();
    std::vector<int> pos;
    for (const Qubit &q : labels) {
        pos.push_back(global_position(q));
    }
    const uint64_t km = global_mask(keep);
    const double scale = std::ldexp(1.0, 2 * n_ + 1 - static_cast<int>(labels.size()));
    PauliSum out(std::move(labels));
    for (uint64_t s = km;; s = (s - 1) & km) {
        auto it = buckets_.find(s);
        if (it != buckets_.end()) {
            for (const auto &[key, c] : it->second) {
                PauliKey k;
                for (size_t j = 0; j < pos.size(); ++j) {
                    k.x |= (key.x >> pos[j] & 1) << j;
                    k.z |= (key.z >> pos[j] & 1) << j;
                }
                out.add(k, c * scale);
            }
        }
        if (s == 0) {
            break;
        }
    }
    out.prune();
    return out;
}

PauliOracle::PauliOracle(int n, std::mt19937_64 &rng) : n_(n), check_input_(random_bloch(rng)) {
    for (const BlochVector &b : probe_inputs()) {
        states_.emplace_back(build_encoded_branch_sum(n, b));
    }
    states_.emplace_back(build_encoded_branch_sum(n, check_input_));
}

ChannelDecomposition<PauliSum> PauliOracle::decompose(const SubsetSpec &keep) const {
    check_keep(n_, keep);
    std::array<PauliSum, 5> reduced{states_[0].reduce(keep), states_[1].reduce(keep), states_[2].reduce(keep),
                                    states_[3].reduce(keep), states_[4].reduce(keep)};
    return solve_channels(keep.labels(), reduced, check_input_);
}

DenseOperator reduce_encoded_dense(int n, const BlochVector &b, const SubsetSpec &keep) {
    check_keep(n, keep);
    return DenseOracle::reduce(encode_state_vector(n, b), keep);
}

PauliSum reduce_encoded_pauli(int n, const BlochVector &b, const SubsetSpec &keep) {
    check_keep(n, keep);
    return SupportIndex(build_encoded_branch_sum(n, b)).reduce(keep);
}

ChannelDecomposition<DenseOperator> channel_decompose_dense(int n, const SubsetSpec &keep, uint64_t seed) {
    auto rng = seeded_rng(seed, n);
    return DenseOracle(n, rng).decompose(keep);
}

ChannelDecomposition<PauliSum> channel_decompose_pauli(int n, const SubsetSpec &keep, uint64_t seed) {
    auto rng = seeded_rng(seed, n);
    return PauliOracle(n, rng).decompose(keep);
}

std::array<bool, 3> active_channels(const std::array<double, 3> &norms, double tol) {
    return {norms[0] > tol, norms[1] > tol, norms[2] > tol};
}

InformativenessClass observed_class(const std::array<double, 3> &norms, double tol) {
    const auto active = active_channels(norms, tol);
    const int count = active[0] + active[1] + active[2];
    if (count == 0) {
        return InformativenessClass::CompletelyUninformative;
    }
    return count == 3 ? InformativenessClass::FullyInformative : InformativenessClass::PartiallyInformative;
}

std::optional<PauliSum> closed_form_for(const SubsetSpec &keep, const BlochVector &b) {
    const int n = keep.n();
    if (keep.includes_a()) {
        const SubsetSpec c = keep.with_a(false);
        if (!all_pairs_incomplete(c) || c.register_size() != n) {
            return std::nullopt;
        }
        return reduced_with_a_case_form(n, c.signal_count(), b).relabeled(keep.labels());
    }
    if (!spans_all_pairs(keep) || keep.register_size() != n) {
        return std::nullopt;
    }
    return reduced_storage_span_form(n, keep.signal_count(), b).relabeled(keep.labels());
}

double complementary_spectrum_error(const StateVector &encoded, const SubsetSpec &c) {
    const SubsetSpec h = c.with_a(true);
    const SubsetSpec b = complement_in_register(c.with_a(false));
    return spectrum_gap(DenseOracle::reduce(encoded, h).eigenvalues(), DenseOracle::reduce(encoded, b).eigenvalues());
}

double SubsetResult::max_error() const { return std::max(consistency_error, analytic_error.value_or(0.0)); }

size_t VerificationReport::mismatch_count() const {
    return static_cast<size_t>(std::count_if(results.begin(), results.end(), [](const auto &r) { return r.mismatch; }));
}

double VerificationReport::max_error() const {
    double worst = 0;
    for (const SubsetResult &r : results) {
        worst = std::max(worst, r.max_error());
    }
    return worst;
}

namespace {

/// Sweeps both families for one n with a given oracle. `reduce_sample(k, s)`
/// returns the numeric reduced state of sample k as the oracle's operator type.
template <class Oracle, class ReduceSample>
void sweep_n(int n, OraclePath path, const Oracle &oracle, const std::vector<BlochVector> &samples,
             ReduceSample reduce_sample, const VerifyOptions &opt, std::vector<SubsetResult> &out) {
    const uint64_t count = uint64_t{1} << (2 * n);
    for (bool with_a : {false, true}) {
        for (uint64_t mask = 0; mask < count; ++mask) {
            SubsetResult r;
            r.n = n;
            r.subset = SubsetSpec::from_register_mask(n, with_a, mask);
            r.path = path;
            r.predicted = explain(r.subset);
            const auto d = oracle.decompose(r.subset);
            r.norms = d.bloch_norms();
            r.active = active_channels(r.norms, opt.tol);
            r.observed = observed_class(r.norms, opt.tol);
            r.consistency_error = d.consistency_error;
            if (closed_form_for(r.subset, BlochVector{}).has_value()) {
                double worst = 0;
                for (size_t k = 0; k < samples.size(); ++k) {
                    worst = std::max(worst, reduce_sample(k, r.subset, *closed_form_for(r.subset, samples[k])));
                }
                r.analytic_error = worst;
            }
            const bool partial = r.predicted.cls == InformativenessClass::PartiallyInformative ||
                                 r.observed == InformativenessClass::PartiallyInformative;
            const bool y_only = !r.active[0] && r.active[1] && !r.active[2];
            r.mismatch = r.predicted.cls != r.observed || (partial && !y_only) || r.consistency_error > opt.tol ||
                         r.analytic_error.value_or(0.0) > opt.tol;
            out.push_back(std::move(r));
        }
    }
}

}  // namespace

VerificationReport verify_all(const VerifyOptions &opt) {
    if (opt.n_min < 1 || opt.n_max < opt.n_min) {
        throw std::invalid_argument("verify: need 1 <= n_min <= n_max");
    }
    if (opt.n_max > 8) {
        throw std::invalid_argument("verify: n_max above 8 is out of reach for exhaustive sweeps");
    }
    if (opt.samples < 0 || !(opt.tol > 0)) {
        throw std::invalid_argument("verify: samples must be >= 0 and tol > 0");
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.options = opt;
    const int limit = dense_qubit_limit();
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        OraclePath path = OraclePath::Dense;
        if (opt.path == PathChoice::Pauli || (opt.path == PathChoice::Auto && 2 * n + 1 > limit)) {
            path = OraclePath::Pauli;
        }
        auto rng = seeded_rng(opt.seed, n);
        if (path == OraclePath::Dense) {
            DenseOracle oracle(n, rng);
            std::vector<BlochVector> samples;
            std::vector<StateVector> states;
            for (int k = 0; k < opt.samples; ++k) {
                samples.push_back(random_bloch(rng));
                states.push_back(encode_state_vector(n, samples.back()));
            }
            auto reduce_sample = [&](size_t k, const SubsetSpec &s, const PauliSum &form) {
                return max_entry_diff(sum_to_dense(form, limit), DenseOracle::reduce(states[k], s));
            };
            sweep_n(n, path, oracle, samples, reduce_sample, opt, report.results);
        } else {
            PauliOracle oracle(n, rng);
            std::vector<BlochVector> samples;
            std::vector<SupportIndex> states;
            for (int k = 0; k < opt.samples; ++k) {
                samples.push_back(random_bloch(rng));
                states.emplace_back(build_encoded_branch_sum(n, samples.back()));
            }
            auto reduce_sample = [&](size_t k, const SubsetSpec &s, const PauliSum &form) {
                return max_entry_diff(form, states[k].reduce(s));
            };
            sweep_n(n, path, oracle, samples, reduce_sample, opt, report.results);
        }
    }
    if (opt.timing) {
        report.duration_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

}  // namespace qec
