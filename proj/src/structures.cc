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

#include "qss/structures.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qss {

namespace {

void check_player_count(std::size_t n) {
    if (n == 0 || n > kMaxPlayers) {
        throw std::invalid_argument("player count must be in 1..12, got " + std::to_string(n));
    }
}

}  // namespace

PlayerSet::PlayerSet(std::initializer_list<int> players) : PlayerSet(from_members(players)) {}

PlayerSet PlayerSet::from_members(const std::vector<int> &players) {
    std::uint32_t bits = 0;
    for (int p : players) {
        if (p < 1 || p > static_cast<int>(kMaxPlayers)) {
            throw std::invalid_argument("player id " + std::to_string(p) + " outside 1..12");
        }
        bits |= std::uint32_t{1} << (p - 1);
    }
    return PlayerSet(bits);
}

std::size_t PlayerSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<int> PlayerSet::members() const {
    std::vector<int> out;
    for (int k = 0; k < 32; k++) {
        if ((bits_ >> k) & 1) {
            out.push_back(k + 1);
        }
    }
    return out;
}

std::string PlayerSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int p : members()) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

std::vector<PlayerSet> nonempty_subsets(std::size_t n) {
    check_player_count(n);
    std::vector<PlayerSet> out;
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); bits++) {
        out.emplace_back(bits);
    }
    std::sort(out.begin(), out.end(), [](PlayerSet a, PlayerSet b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a.members() < b.members();
    });
    return out;
}

AdversaryStructure::AdversaryStructure(std::size_t n_players, const std::function<bool(PlayerSet)> &unauthorized)
    : n_(n_players) {
    check_player_count(n_players);
    const std::uint32_t count = std::uint32_t{1} << n_players;
    unauthorized_.resize(count);
    for (std::uint32_t bits = 0; bits < count; bits++) {
        unauthorized_[bits] = unauthorized(PlayerSet(bits));
    }
    // Removing one player at a time suffices for downward closure.
    for (std::uint32_t bits = 0; bits < count; bits++) {
        if (!unauthorized_[bits]) {
            continue;
        }
        for (std::uint32_t k = 0; k < n_players; k++) {
            std::uint32_t smaller = bits & ~(std::uint32_t{1} << k);
            if (!unauthorized_[smaller]) {
                throw std::invalid_argument("adversary structure is not downward closed: " +
                                            PlayerSet(bits).to_string() + " is unauthorized but " +
                                            PlayerSet(smaller).to_string() + " is not");
            }
        }
    }
}

AdversaryStructure AdversaryStructure::from_maximal(std::size_t n_players, const std::vector<PlayerSet> &maximal) {
    for (PlayerSet s : maximal) {
        if (!s.subset_of(PlayerSet::all(n_players))) {
            throw std::invalid_argument("unauthorized set " + s.to_string() + " names a player beyond " +
                                        std::to_string(n_players));
        }
    }
    return AdversaryStructure(n_players, [&](PlayerSet s) {
        return std::any_of(maximal.begin(), maximal.end(), [&](PlayerSet m) { return s.subset_of(m); }) || s.empty();
    });
}

std::size_t AdversaryStructure::unauthorized_count() const {
    return static_cast<std::size_t>(std::count(unauthorized_.begin(), unauthorized_.end(), true));
}

std::vector<PlayerSet> AdversaryStructure::maximal_unauthorized() const {
    std::vector<PlayerSet> out;
    for (std::uint32_t bits = 0; bits < unauthorized_.size(); bits++) {
        if (!unauthorized_[bits]) {
            continue;
        }
        bool maximal = true;
        for (std::uint32_t k = 0; k < n_ && maximal; k++) {
            std::uint32_t bigger = bits | (std::uint32_t{1} << k);
            if (bigger != bits && unauthorized_[bigger]) {
                maximal = false;
            }
        }
        if (maximal) {
            out.emplace_back(bits);
        }
    }
    std::sort(out.begin(), out.end(), [](PlayerSet a, PlayerSet b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a.members() < b.members();
    });
    return out;
}

AdversaryStructure threshold_structure(std::size_t t, std::size_t n) {
    if (t < 1 || t > n) {
        throw std::invalid_argument("threshold needs 1 <= t <= n, got t=" + std::to_string(t) +
                                    " n=" + std::to_string(n));
    }
    return AdversaryStructure(n, [t](PlayerSet s) { return s.size() + 1 <= t; });
}

bool is_self_dual(const AdversaryStructure &s) {
    const std::size_t n = s.n_players();
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); bits++) {
        PlayerSet b(bits);
        if (s.is_unauthorized(b) != s.is_authorized(b.complement(n))) {
            return false;
        }
    }
    return true;
}

MSP::MSP(GFMatrix matrix, std::vector<int> labels, std::size_t n_players)
    : matrix_(std::move(matrix)), labels_(std::move(labels)), n_players_(n_players) {
    if (labels_.size() != matrix_.rows()) {
        throw std::invalid_argument("MSP has " + std::to_string(matrix_.rows()) + " rows but " +
                                    std::to_string(labels_.size()) + " labels");
    }
    if (matrix_.rows() == 0 || matrix_.cols() == 0) {
        throw std::invalid_argument("MSP matrix must be nonempty");
    }
    int max_label = *std::max_element(labels_.begin(), labels_.end());
    if (n_players_ == 0) {
        n_players_ = static_cast<std::size_t>(std::max(max_label, 0));
    }
    check_player_count(n_players_);
    for (std::size_t r = 0; r < labels_.size(); r++) {
        if (labels_[r] < 1 || labels_[r] > static_cast<int>(n_players_)) {
            throw std::invalid_argument("row " + std::to_string(r + 1) + " is labeled with player " +
                                        std::to_string(labels_[r]) + " outside 1.." + std::to_string(n_players_));
        }
    }
    if (!columns_independent(matrix_)) {
        throw std::invalid_argument("MSP matrix columns are not independent");
    }
}

std::vector<std::size_t> MSP::rows_of(PlayerSet players) const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < labels_.size(); r++) {
        if (players.contains(labels_[r])) {
            out.push_back(r);
        }
    }
    return out;
}

GFMatrix MSP::submatrix(PlayerSet players) const { return matrix_.select_rows(rows_of(players)); }

bool msp_accepts(const MSP &msp, PlayerSet players) {
    FieldVector target(msp.cols(), 0);
    target[0] = 1;
    return in_row_span(msp.submatrix(players), target).has_value();
}

AdversaryStructure msp_structure(const MSP &msp, std::size_t n_players) {
    if (n_players < msp.n_players()) {
        throw std::invalid_argument("MSP labels players beyond " + std::to_string(n_players));
    }
    return AdversaryStructure(n_players, [&](PlayerSet s) { return !msp_accepts(msp, s); });
}

MspRanks ranks(const MSP &msp, PlayerSet players) {
    PlayerSet rest = players.complement(msp.n_players());
    return {rank(msp.submatrix(players)), rank(msp.submatrix(rest))};
}

}  // namespace qss
