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

#ifndef QSS_STRUCTURES_H
#define QSS_STRUCTURES_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qss/gfield.h"

namespace qss {

inline constexpr std::size_t kMaxPlayers = 12;

/// Set of players 1..n packed as a bitmask (bit k-1 is player k).
class PlayerSet {
   public:
    constexpr PlayerSet() = default;
    constexpr explicit PlayerSet(std::uint32_t bits) : bits_(bits) {}
    PlayerSet(std::initializer_list<int> players);
    static PlayerSet from_members(const std::vector<int> &players);
    static constexpr PlayerSet all(std::size_t n) { return PlayerSet((std::uint32_t{1} << n) - 1); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool contains(int player) const { return player >= 1 && ((bits_ >> (player - 1)) & 1); }
    constexpr bool empty() const { return bits_ == 0; }
    std::size_t size() const;
    std::vector<int> members() const;
    PlayerSet complement(std::size_t n) const { return PlayerSet(all(n).bits_ & ~bits_); }
    constexpr bool subset_of(PlayerSet other) const { return (bits_ & ~other.bits_) == 0; }

    /// "{1,2,3}"; the empty set prints as "{}".
    std::string to_string() const;

    constexpr bool operator==(const PlayerSet &) const = default;

   private:
    std::uint32_t bits_ = 0;
};

/// Every subset of {1..n} except the empty one, ordered by size and then
/// lexicographically by sorted member list.
std::vector<PlayerSet> nonempty_subsets(std::size_t n);

/// Downward-closed family of unauthorized player subsets, stored explicitly.
class AdversaryStructure {
   public:
    /// Builds from the unauthorized predicate evaluated on all 2^n subsets.
    /// Throws when the resulting family is not downward closed.
    AdversaryStructure(std::size_t n_players, const std::function<bool(PlayerSet)> &unauthorized);

    /// Downward closure of the given maximal unauthorized sets.
    static AdversaryStructure from_maximal(std::size_t n_players, const std::vector<PlayerSet> &maximal);

    std::size_t n_players() const { return n_; }
    bool is_unauthorized(PlayerSet s) const { return unauthorized_.at(s.bits()); }
    bool is_authorized(PlayerSet s) const { return !is_unauthorized(s); }
    std::size_t unauthorized_count() const;
    std::vector<PlayerSet> maximal_unauthorized() const;

    bool operator==(const AdversaryStructure &) const = default;

   private:
    std::size_t n_;
    std::vector<bool> unauthorized_;
};

AdversaryStructure threshold_structure(std::size_t t, std::size_t n);

/// B unauthorized <=> complement(B) authorized, for every subset B.
bool is_self_dual(const AdversaryStructure &s);

/// Monotone span program (F_q, M, g). Row r belongs to player labels[r].
class MSP {
   public:
    /// Throws when labels do not match the rows, fall outside 1..n_players,
    /// or the columns of M are dependent. n_players defaults to the largest label.
    MSP(GFMatrix matrix, std::vector<int> labels, std::size_t n_players = 0);

    const PrimeField &field() const { return matrix_.field(); }
    const GFMatrix &matrix() const { return matrix_; }
    const std::vector<int> &labels() const { return labels_; }
    std::size_t n_players() const { return n_players_; }
    std::size_t rows() const { return matrix_.rows(); }
    std::size_t cols() const { return matrix_.cols(); }

    /// Row indices owned by the players in `players`, ascending.
    std::vector<std::size_t> rows_of(PlayerSet players) const;
    GFMatrix submatrix(PlayerSet players) const;

   private:
    GFMatrix matrix_;
    std::vector<int> labels_;
    std::size_t n_players_;
};

/// Accepts A iff e_1 = (1,0,...,0) lies in the row span of M_A.
bool msp_accepts(const MSP &msp, PlayerSet players);

/// Structure whose unauthorized sets are exactly the rejected sets.
AdversaryStructure msp_structure(const MSP &msp, std::size_t n_players);

struct MspRanks {
    std::size_t l;  ///< rank of M_A
    std::size_t m;  ///< rank of M_B, B the complement of A
};

MspRanks ranks(const MSP &msp, PlayerSet players);

}  // namespace qss

#endif  // QSS_STRUCTURES_H
