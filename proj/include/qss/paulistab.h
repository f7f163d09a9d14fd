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

#ifndef QSS_PAULISTAB_H
#define QSS_PAULISTAB_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qss/tensorlab.h"

namespace qss {

inline constexpr std::size_t kMaxDenseQubits = 7;

/// Pauli operator i^phase * P_1 (x) ... (x) P_n in symplectic form.
///
/// Position k carries bits (x_k, z_k): (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y,
/// where Y is the Hermitian Pauli matrix itself. The phase exponent is kept
/// mod 4, so phase() == 2 is the operator -P.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n);
    PauliOperator(std::vector<std::uint8_t> x_bits, std::vector<std::uint8_t> z_bits, std::uint8_t phase = 0);

    /// Parses e.g. "XZZXI", "-ZZ", "+iXY", "-iZ".
    static PauliOperator parse(std::string_view text);

    std::size_t n() const { return x_.size(); }
    const std::vector<std::uint8_t> &x_bits() const { return x_; }
    const std::vector<std::uint8_t> &z_bits() const { return z_; }
    std::uint8_t phase() const { return phase_; }
    bool hermitian() const { return phase_ % 2 == 0; }
    std::size_t weight() const;

    /// Same operator with phase stripped.
    PauliOperator unsigned_part() const;
    /// 2n-bit vector (x_1..x_n | z_1..z_n).
    std::vector<std::uint8_t> symplectic() const;
    static PauliOperator from_symplectic(const std::vector<std::uint8_t> &bits);

    std::string to_string() const;

    /// Dense 2^n x 2^n image; position 1 is the most significant qubit.
    CMatrix matrix() const;
    /// In-place action on a state vector of n qubits.
    CVector apply(const CVector &v) const;

    bool operator==(const PauliOperator &) const = default;

   private:
    std::vector<std::uint8_t> x_;
    std::vector<std::uint8_t> z_;
    std::uint8_t phase_ = 0;
};

PauliOperator pauli_parse(std::string_view text);

/// Operator product p * q with phase bookkeeping.
PauliOperator operator*(const PauliOperator &p, const PauliOperator &q);

bool commutes(const PauliOperator &p, const PauliOperator &q);

/// Keeps the factors at `positions` (1-based, in the order given); phase kept.
PauliOperator restrict(const PauliOperator &p, const std::vector<std::size_t> &positions);

/// Full GF(2) rank of the symplectic vectors; phases ignored.
bool independent(const std::vector<PauliOperator> &ops);
std::size_t symplectic_rank(const std::vector<PauliOperator> &ops);

/// One-logical-qubit stabilizer code [[n,1]].
struct StabilizerCode {
    std::string name;
    std::size_t n = 0;
    std::vector<PauliOperator> generators;
    PauliOperator logical_x;
    PauliOperator logical_z;

    /// Throws std::invalid_argument describing the first violated invariant.
    void validate() const;

    static StabilizerCode trivial();
    static StabilizerCode five_qubit();
};

/// Logical basis |0_L>, |1_L>: |0_L> is the normalized projection of the first
/// computational basis state with nonzero image under prod_j (I+G_j)/2 (I+Z)/2,
/// and |1_L> = X|0_L>.
std::pair<PureState, PureState> codewords(const StabilizerCode &code);

/// Minimum weight of an operator commuting with every generator but outside
/// the stabilizer group (phases ignored). Exhaustive; n <= 7.
std::size_t code_distance(const StabilizerCode &code);

/// Layout "P1".."Pn" of n qubits, matching the share labels of stabilizer schemes.
SystemLayout qubit_layout(std::size_t n, const std::string &prefix = "P");

}  // namespace qss

#endif  // QSS_PAULISTAB_H
