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

#ifndef QEC_ORACLE_H
#define QEC_ORACLE_H

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "qec/classifier.h"
#include "qec/dense.h"
#include "qec/pauli.h"
#include "qec/subset.h"

namespace qec {

enum class OraclePath : uint8_t { Dense, Pauli };
std::string_view to_string(OraclePath p);

/// +z, -z, +x, +y: enough to solve the affine model ρ(b) = T0 + xT1 + yT2 + zT3.
std::array<BlochVector, 4> probe_inputs();

/// Uniform on the Bloch sphere.
BlochVector random_bloch(std::mt19937_64 &rng);

/// Generator for one pair count of a seeded sweep; independent of the order in
/// which pair counts are visited.
std::mt19937_64 seeded_rng(uint64_t seed, int n);

/// Constant (T0) and x/y/z channel operators (T1..T3) of a reduced state.
template <class Op>
struct ChannelDecomposition {
    QubitList labels;
    std::array<Op, 4> channels;
    /// Max-abs matrix entry of each channel.
    std::array<double, 4> norms{};
    /// Max-abs entry of ρ(b5) - (T0 + x T1 + y T2 + z T3) for the check input b5.
    double consistency_error = 0;

    std::array<double, 3> bloch_norms() const { return {norms[1], norms[2], norms[3]}; }
};

/// Pure encoded state for a fixed n held as state vectors: four probes plus
/// a seeded check input.
class DenseOracle {
   public:
    DenseOracle(int n, std::mt19937_64 &rng);

    int n() const { return n_; }
    const BlochVector &check_input() const { return check_input_; }

    static DenseOperator reduce(const StateVector &encoded, const SubsetSpec &keep);
    ChannelDecomposition<DenseOperator> decompose(const SubsetSpec &keep) const;

   private:
    int n_;
    BlochVector check_input_;
    std::array<StateVector, 5> states_;  // probes then the check input
};

/// Terms of an encoded Pauli sum bucketed by support, so a reduction onto a
/// subset visits only the strings that survive the partial trace.
class SupportIndex {
   public:
    explicit SupportIndex(const PauliSum &global);

    PauliSum reduce(const SubsetSpec &keep) const;

   private:
    int n_;
    std::unordered_map<uint64_t, std::vector<std::pair<PauliKey, Complex>>> buckets_;
};

class PauliOracle {
   public:
    PauliOracle(int n, std::mt19937_64 &rng);

    int n() const { return n_; }
    const BlochVector &check_input() const { return check_input_; }

    ChannelDecomposition<PauliSum> decompose(const SubsetSpec &keep) const;

   private:
    int n_;
    BlochVector check_input_;
    std::vector<SupportIndex> states_;  // probes then the check input
};

/// Global position bitmask (A = bit 0, S_i = bit 2i-1, N_i = bit 2i).
uint64_t global_mask(const SubsetSpec &s);

/// Reduced encoded state on `keep` (reduced-state label order).
DenseOperator reduce_encoded_dense(int n, const BlochVector &b, const SubsetSpec &keep);
PauliSum reduce_encoded_pauli(int n, const BlochVector &b, const SubsetSpec &keep);

ChannelDecomposition<DenseOperator> channel_decompose_dense(int n, const SubsetSpec &keep, uint64_t seed = 42);
ChannelDecomposition<PauliSum> channel_decompose_pauli(int n, const SubsetSpec &keep, uint64_t seed = 42);

/// Channels with norm above tol.
std::array<bool, 3> active_channels(const std::array<double, 3> &norms, double tol);
/// No active channel: CU; all three: FI; otherwise PI.
InformativenessClass observed_class(const std::array<double, 3> &norms, double tol);
template <class Op>
InformativenessClass observed_class(const ChannelDecomposition<Op> &d, double tol) {
    return observed_class(d.bloch_norms(), tol);
}

/// Closed-form reduced state for the subsets that have one: H-sets with one
/// qubit from every pair (parity case forms) and storage sets with one qubit
/// from every pair. Labels follow keep.labels().
std::optional<PauliSum> closed_form_for(const SubsetSpec &keep, const BlochVector &b);

/// Largest difference between the descending spectra of ρ_{A∪C} and ρ_B,
/// B = R_n \ C, padded with zeros.
double complementary_spectrum_error(const StateVector &encoded, const SubsetSpec &c);

enum class PathChoice : uint8_t { Auto, Dense, Pauli };

struct VerifyOptions {
    int n_min = 1;
    int n_max = 3;
    double tol = 1e-10;
    int samples = 20;
    uint64_t seed = 42;
    PathChoice path = PathChoice::Auto;
    bool timing = false;
};

struct SubsetResult {
    int n = 0;
    SubsetSpec subset;
    OraclePath path = OraclePath::Dense;
    Classification predicted;
    InformativenessClass observed = InformativenessClass::CompletelyUninformative;
    std::array<double, 3> norms{};
    std::array<bool, 3> active{};
    double consistency_error = 0;
    /// Max-abs entry error of the closed form over the sampled inputs, when one exists.
    std::optional<double> analytic_error;
    bool mismatch = false;

    std::string family() const { return subset.includes_a() ? "with_a" : "storage"; }
    double max_error() const;
};

struct VerificationReport {
    VerifyOptions options;
    std::vector<SubsetResult> results;
    std::optional<double> duration_ms;

    size_t mismatch_count() const;
    double max_error() const;
    bool passed() const { return mismatch_count() == 0; }
};

inline constexpr const char *kFullInformativenessAssumption =
    "FullyInformative is observed as all three Bloch channels active; recoverability itself is not tested";

/// Classifies every storage subset and every H = {A} ∪ C for each n in
/// [n_min, n_max], compares with the parity rules, checks that partial
/// leakage is y-only and that closed forms match the numerics. Results are
/// sorted by (n, family, register mask).
VerificationReport verify_all(const VerifyOptions &options);

}  // namespace qec

#endif
