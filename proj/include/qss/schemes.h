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

#ifndef QSS_SCHEMES_H
#define QSS_SCHEMES_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qss/paulistab.h"
#include "qss/structures.h"
#include "qss/tensorlab.h"

namespace qss {

/// Label of the purifying reference system in every scheme layout.
inline const std::string kReferenceLabel = "R";

/// Diagonal secret rho_S = sum_i probs[i] |i><i|.
struct SecretSpec {
    std::size_t dim = 2;
    std::vector<double> probs;

    static SecretSpec uniform(std::size_t dim);
    /// Throws unless dim >= 2, probs has dim nonnegative entries summing to 1.
    void validate() const;
    double entropy_bits() const;
};

enum class SchemeKind { kStabilizer, kMsp, kGhz };

const char *to_string(SchemeKind kind);

struct StabilizerParams {
    std::size_t t;
    StabilizerCode code;
};

struct MspParams {
    MSP msp;
};

struct GhzParams {
    std::size_t n;
};

struct ShareOwner {
    std::string label;
    int player;

    bool operator==(const ShareOwner &) const = default;
};

/// Share labels owned by the players of `players`, in layout order.
LabelSet shares_of(const std::vector<ShareOwner> &ownership, PlayerSet players);

/// Purified scheme state over [R, share_1, ..., share_d].
struct SchemeInstance {
    PureState state;
    std::vector<ShareOwner> ownership;
    std::size_t n_players;
    SchemeKind kind;
    std::variant<StabilizerParams, MspParams, GhzParams> params;
    SecretSpec secret;

    LabelSet shares_of(PlayerSet players) const { return qss::shares_of(ownership, players); }
};

/// Scheme state after some shares were discarded. The reference correlation
/// I(R:S) of the original pure scheme is carried along.
struct MixedScheme {
    DensityOperator state;
    std::vector<ShareOwner> ownership;
    std::size_t n_players;
    SchemeKind kind;
    double secret_entropy_bits;
    double reference_mutual_bits;

    LabelSet shares_of(PlayerSet players) const { return qss::shares_of(ownership, players); }
    /// Players that still own at least one share.
    PlayerSet active_players() const;
};

/// sqrt(a_0)|0>_R|0_L> + sqrt(a_1)|1>_R|1_L> for a code of odd length n = 2t-1.
SchemeInstance encode_stabilizer_qts(const StabilizerCode &code, const SecretSpec &secret);

/// q^{-(e-1)/2} sum_i sum_a sqrt(a_i) |i>_R |M(i,a)^T>, one qudit "Q<r>" per row.
/// Rejects MSPs whose structure is not self-dual.
SchemeInstance encode_msp(const MSP &msp, const SecretSpec &secret);

struct MspEigenpair {
    double eigenvalue;
    FieldElem secret_index;
    PureState vector;
};

/// Distinct eigenvectors phi_x^i of rho_A for an authorized A, each with
/// eigenvalue a_i / q^{m+l-e}. Vectors live on A's row qudits.
std::vector<MspEigenpair> msp_eigensystem(const MSP &msp, const SecretSpec &secret, PlayerSet players);

/// sqrt(a_0)|0>_R|0...0> + sqrt(a_1)|1>_R|1...1>, one qubit per player.
SchemeInstance encode_ghz_direct(std::size_t n, const SecretSpec &secret);

/// Bell outcome on the dealer's (S, D) pair: phase bit a selects a Z
/// correction, flip bit b an X correction.
struct BellOutcome {
    int phase_bit = 0;
    int flip_bit = 0;

    bool operator==(const BellOutcome &) const = default;
};

struct TeleportResult {
    SchemeInstance scheme;
    BellOutcome outcome;
    double probability;
};

struct TeleportOptions {
    std::optional<BellOutcome> forced_outcome;
    /// Player whose qubit receives the Z correction.
    int z_player = 1;
    /// Seed for sampling the outcome when none is forced.
    std::uint64_t seed = 0;
};

/// Simulates the dealer's Bell measurement on |RS> (x) GHZ_{D,P1..Pn} and the
/// players' corrections: X on every player qubit if b = 1, then Z on the
/// z_player qubit if a = 1.
TeleportResult teleport_protocol(std::size_t n, const SecretSpec &secret, const TeleportOptions &options = {});

/// Born probabilities of the four outcomes, indexed by 2a + b.
std::vector<double> teleport_outcome_probabilities(std::size_t n, const SecretSpec &secret);

MixedScheme discard_share(const SchemeInstance &scheme, const std::string &share_label);
MixedScheme discard_share(const MixedScheme &scheme, const std::string &share_label);

}  // namespace qss

#endif  // QSS_SCHEMES_H
