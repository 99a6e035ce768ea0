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

#include "qec/pauli.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qec {

namespace {

constexpr Complex kMinusIPow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_same_labels(const QubitList &a, const QubitList &b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": label lists differ ([" + join_labels(a) + "] vs [" +
                                    join_labels(b) + "])");
    }
}

/// Bit j of a key mask -> basis-index bit (m-1-j).
uint64_t to_index_mask(uint64_t key_mask, int m) {
    uint64_t out = 0;
    while (key_mask) {
        int j = std::countr_zero(key_mask);
        key_mask &= key_mask - 1;
        out |= uint64_t{1} << (m - 1 - j);
    }
    return out;
}

/// In-place Walsh-Hadamard transform: out[z] = sum_r (-1)^{popcount(r & z)} in[r].
void walsh_hadamard(std::vector<Complex> &v) {
    for (size_t h = 1; h < v.size(); h <<= 1) {
        for (size_t i = 0; i < v.size(); i += 2 * h) {
            for (size_t j = i; j < i + h; ++j) {
                Complex a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

/// Extracts the bits of `v` selected by `mask` into the low bits.
uint64_t compress_bits(uint64_t v, uint64_t mask) {
    uint64_t out = 0;
    int k = 0;
    while (mask) {
        int j = std::countr_zero(mask);
        mask &= mask - 1;
        out |= ((v >> j) & 1) << k++;
    }
    return out;
}

/// Positions of `keep` inside `labels`; throws when absent or duplicated.
std::vector<int> positions_of(const QubitList &labels, std::span<const Qubit> keep) {
    std::vector<int> pos;
    pos.reserve(keep.size());
    uint64_t seen = 0;
    for (const Qubit &q : keep) {
        int p = find_label(labels, q);
        if (p < 0) {
            throw std::invalid_argument("label " + q.str() + " is not present in [" + join_labels(labels) + "]");
        }
        if (seen >> p & 1) {
            throw std::invalid_argument("label " + q.str() + " appears twice");
        }
        seen |= uint64_t{1} << p;
        pos.push_back(p);
    }
    return pos;
}

}  // namespace

char letter_char(PauliLetter p) { return "IXYZ"[letter_index(p)]; }

PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return PauliLetter::I;
        case 'X':
        case 'x':
            return PauliLetter::X;
        case 'Y':
        case 'y':
            return PauliLetter::Y;
        case 'Z':
        case 'z':
            return PauliLetter::Z;
    }
    throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
}

PauliLetter letter_from_index(int index) {
    if (index < 0 || index > 3) {
        throw std::out_of_range("Pauli index " + std::to_string(index) + " outside 0..3");
    }
    return static_cast<PauliLetter>(index);
}

Complex Phase4::to_complex() const { return kIPow[k_]; }

std::string Phase4::str() const {
    static const char *names[4] = {"+", "+i", "-", "-i"};
    return names[k_];
}

LetterProduct pauli_product(PauliLetter a, PauliLetter b) {
    if (a == PauliLetter::I) {
        return {Phase4::one(), b};
    }
    if (b == PauliLetter::I) {
        return {Phase4::one(), a};
    }
    if (a == b) {
        return {Phase4::one(), PauliLetter::I};
    }
    int ia = letter_index(a), ib = letter_index(b);
    auto c = static_cast<PauliLetter>(6 - ia - ib);
    bool cyclic = (ib - ia + 3) % 3 == 1;
    return {cyclic ? Phase4::i() : Phase4::minus_i(), c};
}

PauliString::PauliString(Phase4 phase, std::vector<PauliLetter> letters, QubitList labels)
    : phase_(phase), letters_(std::move(letters)), labels_(std::move(labels)) {
    if (letters_.size() != labels_.size()) {
        throw std::invalid_argument("Pauli string has " + std::to_string(letters_.size()) + " letters for " +
                                    std::to_string(labels_.size()) + " labels");
    }
}

PauliString PauliString::identity(QubitList labels) {
    std::vector<PauliLetter> letters(labels.size(), PauliLetter::I);
    return PauliString(Phase4::one(), std::move(letters), std::move(labels));
}

PauliString PauliString::parse(std::string_view text, QubitList labels) {
    Phase4 phase;
    std::string_view rest = text;
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
        if (rest[0] == '-') {
            phase = Phase4::minus_one();
        }
        rest.remove_prefix(1);
    }
    if (!rest.empty() && rest[0] == 'i' && rest.size() == labels.size() + 1) {
        phase *= Phase4::i();
        rest.remove_prefix(1);
    }
    if (rest.size() != labels.size()) {
        throw std::invalid_argument("Pauli string '" + std::string(text) + "' does not have " +
                                    std::to_string(labels.size()) + " letters");
    }
    std::vector<PauliLetter> letters;
    for (char c : rest) {
        letters.push_back(letter_from_char(c));
    }
    return PauliString(phase, std::move(letters), std::move(labels));
}

std::string PauliString::letters_str() const {
    std::string out;
    for (PauliLetter p : letters_) {
        out += letter_char(p);
    }
    return out;
}

std::string PauliString::str() const { return phase_.str() + letters_str(); }

PauliString PauliString::dagger() const { return PauliString(phase_.conj(), letters_, labels_); }

PauliString operator*(const PauliString &a, const PauliString &b) {
    check_same_labels(a.labels(), b.labels(), "string product");
    Phase4 phase = a.phase() * b.phase();
    std::vector<PauliLetter> letters(a.letters().size());
    for (size_t k = 0; k < letters.size(); ++k) {
        LetterProduct p = pauli_product(a.letters()[k], b.letters()[k]);
        phase *= p.phase;
        letters[k] = p.letter;
    }
    return PauliString(phase, std::move(letters), a.labels());
}

PauliLetter PauliKey::letter(int position) const {
    int xb = static_cast<int>(x >> position & 1);
    int zb = static_cast<int>(z >> position & 1);
    static constexpr PauliLetter table[2][2] = {{PauliLetter::I, PauliLetter::Z}, {PauliLetter::X, PauliLetter::Y}};
    return table[xb][zb];
}

void PauliKey::set(int position, PauliLetter p) {
    uint64_t bit = uint64_t{1} << position;
    x &= ~bit;
    z &= ~bit;
    if (p == PauliLetter::X || p == PauliLetter::Y) {
        x |= bit;
    }
    if (p == PauliLetter::Z || p == PauliLetter::Y) {
        z |= bit;
    }
}

size_t PauliKeyHash::operator()(const PauliKey &k) const noexcept {
    uint64_t h = k.x * 0x9E3779B97F4A7C15ull ^ (k.z + 0x632BE59BD9B4E019ull + (k.x << 6) + (k.x >> 2));
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 29;
    return static_cast<size_t>(h);
}

PauliSum::PauliSum(QubitList labels) : labels_(std::move(labels)) {
    if (labels_.size() > static_cast<size_t>(kMaxQubits)) {
        throw std::invalid_argument("PauliSum supports at most 64 qubits");
    }
    for (size_t a = 0; a < labels_.size(); ++a) {
        for (size_t b = a + 1; b < labels_.size(); ++b) {
            if (labels_[a] == labels_[b]) {
                throw std::invalid_argument("label " + labels_[a].str() + " appears twice");
            }
        }
    }
}

PauliSum PauliSum::identity(QubitList labels, Complex coefficient) {
    PauliSum s(std::move(labels));
    s.add(PauliKey{}, coefficient);
    s.prune();
    return s;
}

PauliSum PauliSum::from_string(const PauliString &str, Complex coefficient) {
    PauliSum s(str.labels());
    s.add(str, coefficient);
    s.prune();
    return s;
}

void PauliSum::add(const PauliKey &key, Complex coefficient) { terms_[key] += coefficient; }

void PauliSum::add(const PauliString &s, Complex coefficient) {
    check_same_labels(labels_, s.labels(), "PauliSum::add");
    PauliKey key;
    for (int j = 0; j < s.num_qubits(); ++j) {
        key.set(j, s.letters()[j]);
    }
    add(key, coefficient * s.phase().to_complex());
}

void PauliSum::prune() { std::erase_if(terms_, [](const auto &kv) { return std::abs(kv.second) <= kPruneTolerance; }); }

Complex PauliSum::coefficient(const PauliKey &key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Complex(0) : it->second;
}

Complex PauliSum::coefficient(std::string_view letters) const {
    if (letters.size() != labels_.size()) {
        throw std::invalid_argument("expected " + std::to_string(labels_.size()) + " letters, got '" +
                                    std::string(letters) + "'");
    }
    PauliKey key;
    for (size_t j = 0; j < letters.size(); ++j) {
        key.set(static_cast<int>(j), letter_from_char(letters[j]));
    }
    return coefficient(key);
}

std::vector<std::pair<std::string, Complex>> PauliSum::sorted_terms() const {
    std::vector<std::pair<std::string, Complex>> out;
    out.reserve(terms_.size());
    for (const auto &[key, c] : terms_) {
        std::string s(labels_.size(), 'I');
        for (size_t j = 0; j < s.size(); ++j) {
            s[j] = letter_char(key.letter(static_cast<int>(j)));
        }
        out.emplace_back(std::move(s), c);
    }
    // ASCII order already puts I < X < Y < Z.
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

PauliSum PauliSum::operator+(const PauliSum &o) const {
    PauliSum out = *this;
    for (const auto &[key, c] : o.reordered(labels_).terms_) {
        out.add(key, c);
    }
    out.prune();
    return out;
}

PauliSum PauliSum::operator-(const PauliSum &o) const { return *this + o * Complex(-1.0); }

PauliSum PauliSum::operator*(Complex s) const {
    PauliSum out = *this;
    for (auto &kv : out.terms_) {
        kv.second *= s;
    }
    out.prune();
    return out;
}

PauliSum PauliSum::operator*(const PauliSum &o) const {
    check_same_labels(labels_, o.labels_, "PauliSum product");
    // P(x,z) = i^{x.z} X^x Z^z, and Z^z1 X^x2 = (-1)^{z1.x2} X^x2 Z^z1.
    PauliSum out(labels_);
    for (const auto &[ka, ca] : terms_) {
        for (const auto &[kb, cb] : o.terms_) {
            PauliKey kc{ka.x ^ kb.x, ka.z ^ kb.z};
            int e = std::popcount(ka.x & ka.z) + std::popcount(kb.x & kb.z) + 2 * std::popcount(ka.z & kb.x) -
                    std::popcount(kc.x & kc.z);
            out.add(kc, ca * cb * kIPow[((e % 4) + 4) % 4]);
        }
    }
    out.prune();
    return out;
}

Complex PauliSum::trace() const { return coefficient(PauliKey{}) * std::ldexp(1.0, num_qubits()); }

Complex PauliSum::purity() const {
    Complex acc = 0;
    for (const auto &kv : terms_) {
        acc += kv.second * kv.second;
    }
    return acc * std::ldexp(1.0, num_qubits());
}

bool PauliSum::is_hermitian(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(), [tol](const auto &kv) { return std::abs(kv.second.imag()) <= tol; });
}

double PauliSum::max_abs_coefficient() const {
    double best = 0;
    for (const auto &kv : terms_) {
        best = std::max(best, std::abs(kv.second));
    }
    return best;
}

double PauliSum::max_abs_entry() const {
    // Entry (r, r^x) of P(x,z) is (-i)^{popcount(x&z)} (-1)^{popcount(r&z)}
    // (up to a bit permutation of r), so each X-pattern is a signed sum over r.
    std::map<uint64_t, std::vector<std::pair<uint64_t, Complex>>> groups;
    for (const auto &[key, c] : terms_) {
        groups[key.x].emplace_back(key.z, c * kMinusIPow[std::popcount(key.x & key.z) % 4]);
    }
    double best = 0;
    for (const auto &[x, members] : groups) {
        if (members.size() == 1) {
            best = std::max(best, std::abs(members.front().second));
            continue;
        }
        uint64_t used = 0;
        for (const auto &m : members) {
            used |= m.first;
        }
        const int w = std::popcount(used);
        if (w > 26) {
            throw std::length_error("max_abs_entry: Z-support too wide for exact evaluation");
        }
        std::vector<Complex> f(size_t{1} << w, Complex(0));
        for (const auto &[z, c] : members) {
            f[compress_bits(z, used)] += c;
        }
        walsh_hadamard(f);
        for (const Complex &v : f) {
            best = std::max(best, std::abs(v));
        }
    }
    return best;
}

PauliSum PauliSum::reordered(std::span<const Qubit> labels) const {
    if (std::equal(labels.begin(), labels.end(), labels_.begin(), labels_.end())) {
        return *this;
    }
    if (labels.size() != labels_.size()) {
        throw std::invalid_argument("reorder: label sets differ");
    }
    std::vector<int> pos = positions_of(labels_, labels);
    PauliSum out(QubitList(labels.begin(), labels.end()));
    for (const auto &[key, c] : terms_) {
        PauliKey k;
        for (size_t j = 0; j < pos.size(); ++j) {
            k.x |= (key.x >> pos[j] & 1) << j;
            k.z |= (key.z >> pos[j] & 1) << j;
        }
        out.terms_.emplace(k, c);
    }
    return out;
}

PauliSum PauliSum::relabeled(QubitList labels) const {
    if (labels.size() != labels_.size()) {
        throw std::invalid_argument("relabel: expected " + std::to_string(labels_.size()) + " labels");
    }
    PauliSum out(std::move(labels));
    out.terms_ = terms_;
    return out;
}

PauliSum PauliSum::partial_trace(std::span<const Qubit> keep) const {
    std::vector<int> pos = positions_of(labels_, keep);
    uint64_t keep_mask = 0;
    for (int p : pos) {
        keep_mask |= uint64_t{1} << p;
    }
    const int traced = num_qubits() - static_cast<int>(pos.size());
    const double scale = std::ldexp(1.0, traced);
    PauliSum out(QubitList(keep.begin(), keep.end()));
    for (const auto &[key, c] : terms_) {
        if (key.support() & ~keep_mask) {
            continue;
        }
        PauliKey k;
        for (size_t j = 0; j < pos.size(); ++j) {
            k.x |= (key.x >> pos[j] & 1) << j;
            k.z |= (key.z >> pos[j] & 1) << j;
        }
        out.add(k, c * scale);
    }
    out.prune();
    return out;
}

PauliSum PauliSum::tensor(const PauliSum &o) const {
    QubitList labels = labels_;
    labels.insert(labels.end(), o.labels_.begin(), o.labels_.end());
    PauliSum out(std::move(labels));
    const int shift = num_qubits();
    for (const auto &[ka, ca] : terms_) {
        for (const auto &[kb, cb] : o.terms_) {
            out.add(PauliKey{ka.x | (kb.x << shift), ka.z | (kb.z << shift)}, ca * cb);
        }
    }
    out.prune();
    return out;
}

double max_coefficient_diff(const PauliSum &a, const PauliSum &b) {
    PauliSum bb = b.reordered(a.labels());
    double best = 0;
    for (const auto &[key, c] : a.terms()) {
        best = std::max(best, std::abs(c - bb.coefficient(key)));
    }
    for (const auto &[key, c] : bb.terms()) {
        if (!a.terms().contains(key)) {
            best = std::max(best, std::abs(c));
        }
    }
    return best;
}

double max_entry_diff(const PauliSum &a, const PauliSum &b) { return (a - b).max_abs_entry(); }

DenseOperator sum_to_dense(const PauliSum &s, int limit) {
    const int m = s.num_qubits();
    if (m > limit) {
        throw DenseLimitExceeded(m, limit);
    }
    const Eigen::Index d = Eigen::Index{1} << m;
    Matrix out = Matrix::Zero(d, d);
    for (const auto &[key, c] : s.terms()) {
        const uint64_t x = to_index_mask(key.x, m);
        const uint64_t z = to_index_mask(key.z, m);
        const Complex base = c * kMinusIPow[std::popcount(key.x & key.z) % 4];
        for (Eigen::Index r = 0; r < d; ++r) {
            out(r, static_cast<Eigen::Index>(r ^ x)) += std::popcount(r & z) % 2 ? -base : base;
        }
    }
    return DenseOperator(std::move(out), s.labels());
}

PauliSum dense_to_sum(const DenseOperator &d) {
    const int m = d.num_qubits();
    const Eigen::Index dim = d.dim();
    PauliSum out(d.labels());
    // Basis-index bit b belongs to position m-1-b.
    auto to_key_mask = [m](uint64_t index_mask) { return to_index_mask(index_mask, m); };
    const double norm = std::ldexp(1.0, -m);
    std::vector<Complex> g(static_cast<size_t>(dim));
    for (Eigen::Index x = 0; x < dim; ++x) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            g[r] = d.entries()(r ^ x, r);
        }
        walsh_hadamard(g);
        for (Eigen::Index z = 0; z < dim; ++z) {
            if (std::abs(g[z]) * norm <= PauliSum::kPruneTolerance) {
                continue;
            }
            PauliKey key{to_key_mask(static_cast<uint64_t>(x)), to_key_mask(static_cast<uint64_t>(z))};
            out.add(key, g[z] * norm * kMinusIPow[std::popcount(static_cast<uint64_t>(x & z)) % 4]);
        }
    }
    out.prune();
    return out;
}

nlohmann::json to_json(const PauliSum &s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &[letters, c] : s.sorted_terms()) {
        out.push_back({{"string", letters}, {"re", c.real() == 0 ? 0.0 : c.real()}, {"im", c.imag() == 0 ? 0.0 : c.imag()}});
    }
    return out;
}

PauliSum pauli_sum_from_json(const nlohmann::json &j, QubitList labels) {
    PauliSum out(std::move(labels));
    for (const auto &term : j) {
        PauliString s = PauliString::parse(term.at("string").get<std::string>(), out.labels());
        out.add(s, Complex(term.at("re").get<double>(), term.at("im").get<double>()));
    }
    out.prune();
    return out;
}

}  // namespace qec
