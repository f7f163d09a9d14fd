// Copyright 2026 The QSS Authors
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

#include "qss/paulistab.h"

#include <stdexcept>

#include "qss/gfield.h"

namespace qss {

namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Exponent of i picked up by the single-qubit product P(x1,z1) * P(x2,z2).
int product_phase(int x1, int z1, int x2, int z2) {
    if (x1 == 0 && z1 == 0) {
        return 0;
    }
    if (x1 == 1 && z1 == 1) {
        return z2 - x2;
    }
    if (x1 == 1) {
        return z2 * (2 * x2 - 1);
    }
    return x2 * (1 - 2 * z2);
}

void require_same_length(const PauliOperator &p, const PauliOperator &q, const char *what) {
    if (p.n() != q.n()) {
        throw std::invalid_argument(std::string(what) + ": operators act on " + std::to_string(p.n()) + " and " +
                                    std::to_string(q.n()) + " qubits");
    }
}

GFMatrix symplectic_matrix(const std::vector<PauliOperator> &ops, std::size_t n) {
    GFMatrix m(PrimeField(2), ops.size(), 2 * n);
    for (std::size_t r = 0; r < ops.size(); r++) {
        auto bits = ops[r].symplectic();
        for (std::size_t c = 0; c < bits.size(); c++) {
            m.set(r, c, bits[c]);
        }
    }
    return m;
}

}  // namespace

PauliOperator::PauliOperator(std::size_t n) : x_(n, 0), z_(n, 0) {}

PauliOperator::PauliOperator(std::vector<std::uint8_t> x_bits, std::vector<std::uint8_t> z_bits, std::uint8_t phase)
    : x_(std::move(x_bits)), z_(std::move(z_bits)), phase_(phase % 4) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("Pauli x and z bit vectors differ in length");
    }
    for (std::size_t k = 0; k < x_.size(); k++) {
        x_[k] &= 1;
        z_[k] &= 1;
    }
}

PauliOperator PauliOperator::parse(std::string_view text) {
    std::uint8_t phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) % 4;
        pos++;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("Pauli string has no qubit factors: '" + std::string(text) + "'");
    }
    std::vector<std::uint8_t> x, z;
    for (; pos < text.size(); pos++) {
        switch (text[pos]) {
            case 'I': x.push_back(0); z.push_back(0); break;
            case 'X': x.push_back(1); z.push_back(0); break;
            case 'Y': x.push_back(1); z.push_back(1); break;
            case 'Z': x.push_back(0); z.push_back(1); break;
            default:
                throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[pos]) + "' in '" +
                                            std::string(text) + "'");
        }
    }
    return PauliOperator(std::move(x), std::move(z), phase);
}

PauliOperator pauli_parse(std::string_view text) { return PauliOperator::parse(text); }

std::size_t PauliOperator::weight() const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < n(); k++) {
        w += (x_[k] | z_[k]);
    }
    return w;
}

PauliOperator PauliOperator::unsigned_part() const { return PauliOperator(x_, z_, 0); }

std::vector<std::uint8_t> PauliOperator::symplectic() const {
    std::vector<std::uint8_t> bits = x_;
    bits.insert(bits.end(), z_.begin(), z_.end());
    return bits;
}

PauliOperator PauliOperator::from_symplectic(const std::vector<std::uint8_t> &bits) {
    if (bits.size() % 2 != 0) {
        throw std::invalid_argument("symplectic vector has odd length");
    }
    std::size_t n = bits.size() / 2;
    return PauliOperator(std::vector<std::uint8_t>(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(n)),
                         std::vector<std::uint8_t>(bits.begin() + static_cast<std::ptrdiff_t>(n), bits.end()));
}

std::string PauliOperator::to_string() const {
    static constexpr const char *kPrefix[4] = {"", "i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (std::size_t k = 0; k < n(); k++) {
        out += "IZXY"[x_[k] * 2 + z_[k]];
    }
    return out;
}

CVector PauliOperator::apply(const CVector &v) const {
    const std::size_t n_qubits = n();
    if (n_qubits >= 8 * sizeof(std::size_t) || static_cast<std::size_t>(v.size()) != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("Pauli apply: vector length does not match 2^n");
    }
    std::size_t xmask = 0, zmask = 0;
    int y_count = 0;
    for (std::size_t k = 0; k < n_qubits; k++) {
        std::size_t bit = std::size_t{1} << (n_qubits - 1 - k);
        if (x_[k]) xmask |= bit;
        if (z_[k]) zmask |= bit;
        if (x_[k] && z_[k]) y_count++;
    }
    // Y|b> = i(-1)^b |1-b>, so every Y contributes a factor i beyond the Z sign.
    const Complex global = kIPowers[(phase_ + y_count) % 4];
    CVector out(v.size());
    for (std::size_t b = 0; b < static_cast<std::size_t>(v.size()); b++) {
        double sign = (__builtin_popcountll(b & zmask) & 1) ? -1.0 : 1.0;
        out(static_cast<Eigen::Index>(b ^ xmask)) = global * sign * v(static_cast<Eigen::Index>(b));
    }
    return out;
}

CMatrix PauliOperator::matrix() const {
    if (n() > kMaxDenseQubits) {
        throw std::invalid_argument("dense Pauli matrices are limited to 7 qubits");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n());
    CMatrix m(dim, dim);
    for (Eigen::Index c = 0; c < dim; c++) {
        m.col(c) = apply(CVector::Unit(dim, c));
    }
    return m;
}

PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    require_same_length(p, q, "Pauli product");
    int phase = p.phase() + q.phase();
    std::vector<std::uint8_t> x(p.n()), z(p.n());
    for (std::size_t k = 0; k < p.n(); k++) {
        phase += product_phase(p.x_bits()[k], p.z_bits()[k], q.x_bits()[k], q.z_bits()[k]);
        x[k] = p.x_bits()[k] ^ q.x_bits()[k];
        z[k] = p.z_bits()[k] ^ q.z_bits()[k];
    }
    return PauliOperator(std::move(x), std::move(z), static_cast<std::uint8_t>(((phase % 4) + 4) % 4));
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    require_same_length(p, q, "commutes");
    int acc = 0;
    for (std::size_t k = 0; k < p.n(); k++) {
        acc += (p.x_bits()[k] & q.z_bits()[k]) + (p.z_bits()[k] & q.x_bits()[k]);
    }
    return acc % 2 == 0;
}

PauliOperator restrict(const PauliOperator &p, const std::vector<std::size_t> &positions) {
    std::vector<std::uint8_t> x, z;
    for (std::size_t pos : positions) {
        if (pos < 1 || pos > p.n()) {
            throw std::out_of_range("restrict: position " + std::to_string(pos) + " outside 1.." + std::to_string(p.n()));
        }
        x.push_back(p.x_bits()[pos - 1]);
        z.push_back(p.z_bits()[pos - 1]);
    }
    return PauliOperator(std::move(x), std::move(z), p.phase());
}

std::size_t symplectic_rank(const std::vector<PauliOperator> &ops) {
    if (ops.empty()) {
        return 0;
    }
    for (const auto &op : ops) {
        require_same_length(ops.front(), op, "independent");
    }
    return rank(symplectic_matrix(ops, ops.front().n()));
}

bool independent(const std::vector<PauliOperator> &ops) { return symplectic_rank(ops) == ops.size(); }

void StabilizerCode::validate() const {
    if (n == 0) {
        throw std::invalid_argument("code length must be positive");
    }
    if (generators.size() + 1 != n) {
        throw std::invalid_argument("a one-qubit code of length " + std::to_string(n) + " needs " +
                                    std::to_string(n - 1) + " generators, got " + std::to_string(generators.size()));
    }
    auto check_op = [&](const PauliOperator &op, const std::string &what) {
        if (op.n() != n) {
            throw std::invalid_argument(what + " '" + op.to_string() + "' does not act on " + std::to_string(n) +
                                        " qubits");
        }
        if (!op.hermitian()) {
            throw std::invalid_argument(what + " '" + op.to_string() + "' is not Hermitian");
        }
    };
    for (std::size_t j = 0; j < generators.size(); j++) {
        check_op(generators[j], "generator " + std::to_string(j + 1));
    }
    check_op(logical_x, "logical X");
    check_op(logical_z, "logical Z");
    for (std::size_t a = 0; a < generators.size(); a++) {
        for (std::size_t b = a + 1; b < generators.size(); b++) {
            if (!commutes(generators[a], generators[b])) {
                throw std::invalid_argument("generators " + generators[a].to_string() + " and " +
                                            generators[b].to_string() + " anticommute");
            }
        }
        if (!commutes(generators[a], logical_x) || !commutes(generators[a], logical_z)) {
            throw std::invalid_argument("a logical operator anticommutes with generator " + generators[a].to_string());
        }
    }
    if (!independent(generators)) {
        throw std::invalid_argument("generators are not independent");
    }
    if (commutes(logical_x, logical_z)) {
        throw std::invalid_argument("logical X and logical Z must anticommute");
    }
}

StabilizerCode StabilizerCode::trivial() {
    return {"trivial", 1, {}, pauli_parse("X"), pauli_parse("Z")};
}

StabilizerCode StabilizerCode::five_qubit() {
    StabilizerCode code{"five_qubit",
                        5,
                        {pauli_parse("XZZXI"), pauli_parse("IXZZX"), pauli_parse("XIXZZ"), pauli_parse("ZXIXZ")},
                        pauli_parse("XXXXX"),
                        pauli_parse("ZZZZZ")};
    code.validate();
    return code;
}

std::pair<PureState, PureState> codewords(const StabilizerCode &code) {
    code.validate();
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << code.n);
    SystemLayout layout = qubit_layout(code.n);
    auto project = [&](CVector v) {
        for (const auto &g : code.generators) {
            v = 0.5 * (v + g.apply(v));
        }
        return CVector(0.5 * (v + code.logical_z.apply(v)));
    };
    for (Eigen::Index seed = 0; seed < dim; seed++) {
        CVector v = project(CVector::Unit(dim, seed));
        if (v.norm() < 1e-8) {
            continue;
        }
        v.normalize();
        CVector one = code.logical_x.apply(v);
        return {PureState(layout, std::move(v)), PureState(layout, std::move(one))};
    }
    throw std::invalid_argument("code projector annihilates every basis state");
}

std::size_t code_distance(const StabilizerCode &code) {
    code.validate();
    if (code.n > kMaxDenseQubits) {
        throw std::invalid_argument("code_distance enumerates 4^n operators and is limited to n <= 7");
    }
    const std::size_t n = code.n;
    const std::size_t stab_rank = symplectic_rank(code.generators);
    std::size_t best = n + 1;
    std::vector<std::uint8_t> bits(2 * n);
    for (std::size_t word = 1; word < (std::size_t{1} << (2 * n)); word++) {
        for (std::size_t k = 0; k < 2 * n; k++) {
            bits[k] = (word >> k) & 1;
        }
        PauliOperator p = PauliOperator::from_symplectic(bits);
        std::size_t w = p.weight();
        if (w >= best) {
            continue;
        }
        bool centralizes = true;
        for (const auto &g : code.generators) {
            if (!commutes(p, g)) {
                centralizes = false;
                break;
            }
        }
        if (!centralizes) {
            continue;
        }
        auto extended = code.generators;
        extended.push_back(p);
        if (symplectic_rank(extended) == stab_rank) {
            continue;
        }
        best = w;
    }
    if (best > n) {
        throw std::logic_error("no logical operator found; code is inconsistent");
    }
    return best;
}

SystemLayout qubit_layout(std::size_t n, const std::string &prefix) {
    std::vector<Subsystem> subs;
    for (std::size_t k = 1; k <= n; k++) {
        subs.push_back({prefix + std::to_string(k), 2});
    }
    return SystemLayout(std::move(subs));
}

}  // namespace qss
