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

#include "qec/analytic.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qec/encoding.h"

namespace qec {

namespace {

using P = Phase4;

void check_sector(int j) {
    if (j < 1 || j > 3) {
        throw std::out_of_range("sector j must be 1..3, got " + std::to_string(j));
    }
}

void check_nq(int n, int q) {
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    if (q < 0 || q > n) {
        throw std::invalid_argument("q=" + std::to_string(q) + " outside 0..n=" + std::to_string(n));
    }
}

CoeffMatrix4 from_entries(std::initializer_list<std::tuple<int, int, Phase4>> entries) {
    CoeffMatrix4 m;
    for (const auto &[mu, nu, v] : entries) {
        m.set(mu, nu, v);
    }
    return m;
}

/// Transpose sign of a Pauli letter: Y^T = -Y, the others are symmetric.
Phase4 transpose_sign(PauliLetter p) { return p == PauliLetter::Y ? P::minus_one() : P::one(); }

std::string phase_text(Phase4 p) {
    static const char *names[4] = {"1", "i", "-1", "-i"};
    return names[p.exponent()];
}

PauliKey register_key(int n, PauliLetter a_letter, PauliLetter reg_letter) {
    PauliKey key;
    key.set(0, a_letter);
    for (int k = 1; k <= n; ++k) {
        key.set(k, reg_letter);
    }
    return key;
}

}  // namespace

int CoeffMatrix4::nonzero_count() const { return std::popcount(support()); }

uint16_t CoeffMatrix4::support() const {
    uint16_t s = 0;
    for (int k = 0; k < 16; ++k) {
        if (e_[k]) {
            s |= static_cast<uint16_t>(1u << k);
        }
    }
    return s;
}

CoeffMatrix4 CoeffMatrix4::hadamard(const CoeffMatrix4 &o) const {
    CoeffMatrix4 out;
    for (int k = 0; k < 16; ++k) {
        if (e_[k] && o.e_[k]) {
            out.e_[k] = *e_[k] * *o.e_[k];
        }
    }
    return out;
}

CoeffMatrix4 CoeffMatrix4::hadamard_pow(int e) const {
    if (e < 0) {
        throw std::invalid_argument("Hadamard power must be >= 0");
    }
    CoeffMatrix4 out;
    for (int k = 0; k < 16; ++k) {
        if (e_[k]) {
            out.e_[k] = e_[k]->pow(e);
        }
    }
    return out;
}

CoeffMatrix4 CoeffMatrix4::disjoint_sum(const CoeffMatrix4 &o) const {
    if (support() & o.support()) {
        throw std::logic_error("disjoint_sum: supports overlap");
    }
    CoeffMatrix4 out = *this;
    for (int k = 0; k < 16; ++k) {
        if (o.e_[k]) {
            out.e_[k] = o.e_[k];
        }
    }
    return out;
}

std::string CoeffMatrix4::str() const {
    std::string out;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            std::string cell = at(mu, nu) ? phase_text(*at(mu, nu)) : ".";
            out += std::string(4 - cell.size(), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

CoeffMatrix4 identity_coeff4() {
    return from_entries({{0, 0, P::one()}, {1, 1, P::one()}, {2, 2, P::one()}, {3, 3, P::one()}});
}

CoeffMatrix4 s_matrix(int j) {
    check_sector(j);
    switch (j) {
        case 1:
            return from_entries({{0, 1, P::one()}, {1, 0, P::one()}, {2, 3, P::i()}, {3, 2, P::minus_i()}});
        case 2:
            return from_entries({{0, 2, P::one()}, {1, 3, P::minus_i()}, {2, 0, P::one()}, {3, 1, P::i()}});
        default:
            return from_entries({{0, 3, P::one()}, {1, 2, P::i()}, {2, 1, P::minus_i()}, {3, 0, P::one()}});
    }
}

CoeffMatrix4 n_matrix(int j) {
    check_sector(j);
    switch (j) {
        case 1:
            return from_entries({{0, 1, P::one()}, {1, 0, P::one()}, {2, 3, P::minus_i()}, {3, 2, P::i()}});
        case 2:
            return from_entries(
                {{0, 2, P::minus_one()}, {1, 3, P::minus_i()}, {2, 0, P::minus_one()}, {3, 1, P::i()}});
        default:
            return from_entries({{0, 3, P::one()}, {1, 2, P::minus_i()}, {2, 1, P::i()}, {3, 0, P::one()}});
    }
}

CoeffMatrix4 c_matrix(int n, int j) {
    check_sector(j);
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    switch (j) {
        case 1:
            return from_entries({{0, 1, P::i()},
                                 {1, 0, P::minus_i()},
                                 {2, 3, -P::i_pow(-n)},
                                 {3, 2, P::i_pow(n + 2)}});
        case 2:
            return from_entries({{0, 2, -P::i_pow(n + 1)},
                                 {1, 3, P::one()},
                                 {2, 0, -P::i_pow(-(n + 1))},
                                 {3, 1, P::one()}});
        default:
            return from_entries({{0, 3, P::i()},
                                 {1, 2, P::i_pow(n + 2)},
                                 {2, 1, -P::i_pow(-n)},
                                 {3, 0, P::minus_i()}});
    }
}

CoeffMatrix4 derived_s_matrix(int j) {
    check_sector(j);
    CoeffMatrix4 m;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            LetterProduct p = pauli_product(letter_from_index(mu), letter_from_index(nu));
            if (letter_index(p.letter) == j) {
                m.set(mu, nu, p.phase);
            }
        }
    }
    return m;
}

CoeffMatrix4 derived_n_matrix(int j) {
    check_sector(j);
    CoeffMatrix4 m;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            LetterProduct p = pauli_product(letter_from_index(nu), letter_from_index(mu));
            if (letter_index(p.letter) == j) {
                m.set(mu, nu, p.phase * transpose_sign(p.letter));
            }
        }
    }
    return m;
}

CoeffMatrix4 alpha_product_matrix(int n) {
    CoeffMatrix4 m;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            m.set(mu, nu, alpha(n, mu).inverse() * alpha(n, nu));
        }
    }
    return m;
}

CoeffMatrix4 derived_c_matrix(int n, int j) {
    const CoeffMatrix4 full = alpha_product_matrix(n);
    const uint16_t support = derived_s_matrix(j).support();
    CoeffMatrix4 m;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            if (support >> (4 * mu + nu) & 1) {
                m.set(mu, nu, full.at(mu, nu));
            }
        }
    }
    return m;
}

CoeffMatrix4 l_matrix(int n, int q, int j) {
    check_nq(n, q);
    return c_matrix(n, j).hadamard(s_matrix(j).hadamard_pow(q)).hadamard(n_matrix(j).hadamard_pow(n - q));
}

CoeffMatrix4 l_matrix_closed_form(int n, int q, int j) {
    check_nq(n, q);
    check_sector(j);
    switch (j) {
        case 1: {
            const P s = sign_pow(n - q + 1);
            return from_entries({{0, 1, P::i()}, {1, 0, P::minus_i()}, {2, 3, s}, {3, 2, s}});
        }
        case 2: {
            const P s = -sign_pow(n - q);
            return from_entries({{0, 2, s * P::i_pow(n + 1)},
                                 {1, 3, P::minus_i().pow(n)},
                                 {2, 0, s * P::i_pow(-(n + 1))},
                                 {3, 1, P::i_pow(n)}});
        }
        default: {
            const P s = sign_pow(q + 1);
            return from_entries({{0, 3, P::i()}, {1, 2, s}, {2, 1, s}, {3, 0, P::minus_i()}});
        }
    }
}

GaussianInt &GaussianInt::operator+=(Phase4 p) {
    switch (p.exponent()) {
        case 0:
            ++re;
            break;
        case 1:
            ++im;
            break;
        case 2:
            --re;
            break;
        default:
            --im;
            break;
    }
    return *this;
}

bool SingleQubitOperator::is_zero() const {
    return std::all_of(coeff.begin(), coeff.end(), [](const GaussianInt &g) { return g.is_zero(); });
}

std::optional<std::pair<long, PauliLetter>> SingleQubitOperator::as_signed_letter() const {
    std::optional<std::pair<long, PauliLetter>> found;
    for (int k = 0; k < 4; ++k) {
        if (coeff[k].is_zero()) {
            continue;
        }
        if (found || coeff[k].im != 0) {
            return std::nullopt;
        }
        found = std::make_pair(coeff[k].re, letter_from_index(k));
    }
    return found;
}

std::string SingleQubitOperator::str() const {
    if (auto s = as_signed_letter()) {
        return std::to_string(s->first) + letter_char(s->second);
    }
    std::string out;
    for (int k = 0; k < 4; ++k) {
        const GaussianInt &g = coeff[k];
        if (g.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + std::to_string(g.re) + (g.im < 0 ? "-" : "+") + std::to_string(std::labs(g.im)) + "i)";
        out += letter_char(letter_from_index(k));
    }
    return out.empty() ? "0" : out;
}

SingleQubitOperator gamma(int n, int q, int j, int r) {
    if (r < 0 || r > 3) {
        throw std::out_of_range("Bloch index r must be 0..3");
    }
    const CoeffMatrix4 l = l_matrix(n, q, j);
    SingleQubitOperator out;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            if (!l.at(mu, nu)) {
                continue;
            }
            LetterProduct left = pauli_product(letter_from_index(mu), letter_from_index(r));
            LetterProduct full = pauli_product(left.letter, letter_from_index(nu));
            out.coeff[letter_index(full.letter)] += *l.at(mu, nu) * left.phase * full.phase;
        }
    }
    return out;
}

GammaTable gamma_table(int n, int q) {
    GammaTable t{n, q, {}};
    for (int j = 1; j <= 3; ++j) {
        int hits = 0;
        for (int r = 0; r < 4; ++r) {
            SingleQubitOperator g = gamma(n, q, j, r);
            if (g.is_zero()) {
                continue;
            }
            auto s = g.as_signed_letter();
            if (!s || std::labs(s->first) != 4) {
                throw std::logic_error("Gamma_{" + std::to_string(j) + "," + std::to_string(r) + "} = " + g.str() +
                                       " is not of the form ±4σ");
            }
            t.sector[j - 1] = {r, s->first, s->second};
            ++hits;
        }
        if (hits != 1) {
            throw std::logic_error("sector " + std::to_string(j) + " has " + std::to_string(hits) +
                                   " nonzero Gamma operators");
        }
    }
    return t;
}

GammaTable tabulated_gamma_table(int n, int q) {
    check_nq(n, q);
    using enum PauliLetter;
    GammaTable t{n, q, {}};
    t.sector[0] = (n - q) % 2 == 0 ? GammaEntry{3, -4, Y} : GammaEntry{2, 4, Z};
    const bool n_even = n % 2 == 0, q_even = q % 2 == 0;
    if (n_even && q_even) {
        t.sector[1] = {1, 4 * (((n / 2) % 2) ? -1 : 1), Z};
    } else if (n_even) {
        t.sector[1] = {3, 4 * (((n / 2) % 2) ? -1 : 1), X};
    } else if (q_even) {
        t.sector[1] = {0, 4 * ((((n + 1) / 2) % 2) ? -1 : 1), Y};
    } else {
        t.sector[1] = {2, 4 * ((((n - 1) / 2) % 2) ? -1 : 1), I};
    }
    t.sector[2] = q_even ? GammaEntry{2, -4, X} : GammaEntry{1, 4, Y};
    return t;
}

QubitList with_a_form_labels(int n, int q) {
    check_nq(n, q);
    QubitList out = {Qubit::source()};
    for (int i = 1; i <= q; ++i) {
        out.push_back(Qubit::signal(i));
    }
    for (int i = q + 1; i <= n; ++i) {
        out.push_back(Qubit::noise(i));
    }
    return out;
}

QubitList storage_form_labels(int n, int p) {
    check_nq(n, p);
    QubitList out;
    for (int i = 1; i <= p; ++i) {
        out.push_back(Qubit::signal(i));
    }
    for (int i = p + 1; i <= n; ++i) {
        out.push_back(Qubit::noise(i));
    }
    return out;
}

PauliSum reduced_with_a_via_gamma(int n, int q, const BlochVector &b) {
    PauliSum rho(with_a_form_labels(n, q));
    rho.add(PauliKey{}, std::ldexp(1.0, -(n + 1)));
    const double scale = std::ldexp(1.0, -(n + 3));
    for (int j = 1; j <= 3; ++j) {
        for (int r = 0; r < 4; ++r) {
            const SingleQubitOperator g = gamma(n, q, j, r);
            for (int k = 0; k < 4; ++k) {
                if (g.coeff[k].is_zero()) {
                    continue;
                }
                const Complex c(static_cast<double>(g.coeff[k].re), static_cast<double>(g.coeff[k].im));
                rho.add(register_key(n, letter_from_index(k), letter_from_index(j)), scale * b.component(r) * c);
            }
        }
    }
    rho.prune();
    return rho;
}

PauliSum reduced_with_a_case_form(int n, int q, const BlochVector &b) {
    check_nq(n, q);
    using enum PauliLetter;
    struct Term {
        int r;  // Bloch component carried (0 for the constant term)
        int sign;
        PauliLetter a;
        PauliLetter reg;
    };
    const int half_even = (n / 2) % 2 ? -1 : 1;              // (-1)^{n/2}
    const int half_odd_minus = ((n - 1) / 2) % 2 ? -1 : 1;   // (-1)^{(n-1)/2}
    const int half_odd_plus = ((n + 1) / 2) % 2 ? -1 : 1;    // (-1)^{(n+1)/2}
    std::array<Term, 3> terms;
    if (n % 2 == 0 && q % 2 == 0) {
        terms = {Term{3, -1, Y, X}, Term{1, half_even, Z, Y}, Term{2, -1, X, Z}};
    } else if (n % 2 == 0) {
        terms = {Term{2, 1, Z, X}, Term{3, half_even, X, Y}, Term{1, 1, Y, Z}};
    } else if (q % 2 == 1) {
        terms = {Term{3, -1, Y, X}, Term{2, half_odd_minus, I, Y}, Term{1, 1, Y, Z}};
    } else {
        terms = {Term{2, 1, Z, X}, Term{0, half_odd_plus, Y, Y}, Term{2, -1, X, Z}};
    }
    const double scale = std::ldexp(1.0, -(n + 1));
    PauliSum rho(with_a_form_labels(n, q));
    rho.add(PauliKey{}, scale);
    for (const Term &t : terms) {
        rho.add(register_key(n, t.a, t.reg), scale * t.sign * b.component(t.r));
    }
    rho.prune();
    return rho;
}

PauliSum reduced_storage_span_form(int n, int p, const BlochVector &b) {
    PauliSum rho(storage_form_labels(n, p));
    const double scale = std::ldexp(1.0, -n);
    rho.add(PauliKey{}, scale);
    if (n % 2 == 1 && p % 2 == 1) {
        PauliKey all_y;
        for (int k = 0; k < n; ++k) {
            all_y.set(k, PauliLetter::Y);
        }
        const int sign = ((n - 1) / 2) % 2 ? -1 : 1;
        rho.add(all_y, scale * sign * b.y);
    }
    rho.prune();
    return rho;
}

}  // namespace qec
