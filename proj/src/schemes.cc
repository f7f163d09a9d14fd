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

#include "qss/schemes.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qss {

namespace {

constexpr double kProbSumTolerance = 1e-12;

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

std::vector<ShareOwner> one_share_per_player(std::size_t n) {
    std::vector<ShareOwner> out;
    for (std::size_t k = 1; k <= n; k++) {
        out.push_back({"P" + std::to_string(k), static_cast<int>(k)});
    }
    return out;
}

SystemLayout reference_layout(std::size_t dim) { return SystemLayout({{kReferenceLabel, dim}}); }

// Flat index of a digit vector over equal-dimension qudits.
std::size_t qudit_index(const FieldVector &digits, std::size_t q) {
    std::size_t idx = 0;
    for (FieldElem d : digits) {
        idx = idx * q + d;
    }
    return idx;
}

// All vectors of F_q^len in lexicographic order.
std::vector<FieldVector> all_vectors(std::size_t q, std::size_t len) {
    std::vector<FieldVector> out;
    FieldVector v(len, 0);
    const std::size_t count = ipow(q, len);
    out.reserve(count);
    for (std::size_t step = 0; step < count; step++) {
        out.push_back(v);
        for (std::size_t k = len; k-- > 0;) {
            if (++v[k] < q) {
                break;
            }
            v[k] = 0;
        }
    }
    return out;
}

PureState ghz_scheme_state(std::size_t n, const SecretSpec &secret) {
    SystemLayout layout = reference_layout(2).concat(qubit_layout(n));
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
    amps(0) = std::sqrt(secret.probs[0]);
    amps(amps.size() - 1) = std::sqrt(secret.probs[1]);
    return PureState(std::move(layout), std::move(amps));
}

// Post-measurement amplitudes on (R, P1..Pn), unnormalized, for one Bell
// outcome on (S, D). Qubit order of `full` is R, S, D, P1..Pn.
CVector bell_project(const CVector &full, std::size_t n, BellOutcome outcome) {
    const double r2 = 1.0 / std::sqrt(2.0);
    // Bell vector (|0,b> + (-1)^a |1,1-b>)/sqrt(2), indexed by 2s + d.
    Complex bell[4] = {0, 0, 0, 0};
    bell[0 * 2 + outcome.flip_bit] = r2;
    bell[1 * 2 + (1 - outcome.flip_bit)] = outcome.phase_bit ? -r2 : r2;

    const std::size_t players_dim = std::size_t{1} << n;
    CVector out = CVector::Zero(static_cast<Eigen::Index>(2 * players_dim));
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(full.size()); idx++) {
        std::size_t p = idx & (players_dim - 1);
        std::size_t d = (idx >> n) & 1;
        std::size_t s = (idx >> (n + 1)) & 1;
        std::size_t r = (idx >> (n + 2)) & 1;
        out(static_cast<Eigen::Index>(r * players_dim + p)) +=
            std::conj(bell[s * 2 + d]) * full(static_cast<Eigen::Index>(idx));
    }
    return out;
}

CVector teleport_initial_state(std::size_t n, const SecretSpec &secret) {
    // |RS> = sum_s sqrt(a_s)|s>|s>, GHZ over D,P1..Pn.
    PureState rs = purify(DensityOperator::diagonal(SystemLayout({{"S", 2}}), secret.probs), kReferenceLabel);
    PureState ghz = encode_ghz_direct(n, SecretSpec::uniform(2)).state;
    PureState dp(SystemLayout({{"D", 2}}).concat(qubit_layout(n)), ghz.amplitudes());
    return tensor(rs, dp).amplitudes();
}

void check_teleport_args(std::size_t n, const SecretSpec &secret) {
    secret.validate();
    if (secret.dim != 2) {
        throw std::invalid_argument("teleportation shares a qubit secret; got dimension " + std::to_string(secret.dim));
    }
    if (n < 1 || n + 3 > 14) {
        throw std::invalid_argument("teleportation supports 1..11 players, got " + std::to_string(n));
    }
}

}  // namespace

SecretSpec SecretSpec::uniform(std::size_t dim) {
    return SecretSpec{dim, std::vector<double>(dim, 1.0 / static_cast<double>(dim))};
}

void SecretSpec::validate() const {
    if (dim < 2) {
        throw std::invalid_argument("secret dimension must be at least 2");
    }
    if (probs.size() != dim) {
        throw std::invalid_argument("secret has " + std::to_string(probs.size()) + " probabilities for dimension " +
                                    std::to_string(dim));
    }
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument("secret probabilities must be finite and nonnegative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbSumTolerance) {
        throw std::invalid_argument("secret probabilities sum to " + std::to_string(sum) + ", not 1");
    }
}

double SecretSpec::entropy_bits() const { return spectrum_entropy(probs); }

const char *to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::kStabilizer: return "stabilizer";
        case SchemeKind::kMsp: return "msp";
        case SchemeKind::kGhz: return "ghz";
    }
    return "unknown";
}

LabelSet shares_of(const std::vector<ShareOwner> &ownership, PlayerSet players) {
    LabelSet out;
    for (const auto &o : ownership) {
        if (players.contains(o.player)) {
            out.push_back(o.label);
        }
    }
    return out;
}

PlayerSet MixedScheme::active_players() const {
    std::vector<int> ids;
    for (const auto &o : ownership) {
        ids.push_back(o.player);
    }
    return PlayerSet::from_members(ids);
}

SchemeInstance encode_stabilizer_qts(const StabilizerCode &code, const SecretSpec &secret) {
    secret.validate();
    if (secret.dim != 2) {
        throw std::invalid_argument("stabilizer schemes share a qubit secret; got dimension " +
                                    std::to_string(secret.dim));
    }
    code.validate();
    if (code.n % 2 == 0) {
        throw std::invalid_argument("threshold scheme needs odd code length n = 2t-1, got " + std::to_string(code.n));
    }
    if (code.n + 1 > 14) {
        throw std::invalid_argument("code length exceeds the 13-qubit state budget");
    }
    auto [zero, one] = codewords(code);
    SystemLayout layout = reference_layout(2).concat(zero.layout());
    const Eigen::Index half = zero.amplitudes().size();
    CVector amps(2 * half);
    amps.head(half) = std::sqrt(secret.probs[0]) * zero.amplitudes();
    amps.tail(half) = std::sqrt(secret.probs[1]) * one.amplitudes();
    return SchemeInstance{PureState(std::move(layout), std::move(amps)),
                          one_share_per_player(code.n),
                          code.n,
                          SchemeKind::kStabilizer,
                          StabilizerParams{(code.n + 1) / 2, code},
                          secret};
}

SchemeInstance encode_msp(const MSP &msp, const SecretSpec &secret) {
    secret.validate();
    const std::size_t q = msp.field().order();
    if (secret.dim != q) {
        throw std::invalid_argument("secret dimension " + std::to_string(secret.dim) + " does not match field order " +
                                    std::to_string(q));
    }
    AdversaryStructure structure = msp_structure(msp, msp.n_players());
    if (!is_self_dual(structure)) {
        std::string witness;
        for (PlayerSet s : nonempty_subsets(msp.n_players())) {
            if (structure.is_unauthorized(s) == structure.is_unauthorized(s.complement(msp.n_players()))) {
                witness = s.to_string() + " and its complement are both " +
                          (structure.is_unauthorized(s) ? "unauthorized" : "authorized");
                break;
            }
        }
        throw std::invalid_argument("MSP structure is not self-dual: " + witness);
    }

    std::vector<Subsystem> subs{{kReferenceLabel, q}};
    std::vector<ShareOwner> ownership;
    for (std::size_t r = 0; r < msp.rows(); r++) {
        std::string label = "Q" + std::to_string(r + 1);
        subs.push_back({label, q});
        ownership.push_back({label, msp.labels()[r]});
    }
    SystemLayout layout(std::move(subs));
    const std::size_t share_dim = layout.total_dim() / q;
    const std::size_t e = msp.cols();
    const double norm = 1.0 / std::sqrt(static_cast<double>(ipow(q, e - 1)));

    CVector amps = CVector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
    for (const FieldVector &a : all_vectors(q, e - 1)) {
        FieldVector x(e);
        std::copy(a.begin(), a.end(), x.begin() + 1);
        for (std::size_t i = 0; i < q; i++) {
            x[0] = static_cast<FieldElem>(i);
            std::size_t share_idx = qudit_index(msp.matrix().apply(x), q);
            amps(static_cast<Eigen::Index>(i * share_dim + share_idx)) += norm * std::sqrt(secret.probs[i]);
        }
    }
    return SchemeInstance{PureState(std::move(layout), std::move(amps)),
                          std::move(ownership),
                          msp.n_players(),
                          SchemeKind::kMsp,
                          MspParams{msp},
                          secret};
}

std::vector<MspEigenpair> msp_eigensystem(const MSP &msp, const SecretSpec &secret, PlayerSet players) {
    secret.validate();
    const std::size_t q = msp.field().order();
    if (secret.dim != q) {
        throw std::invalid_argument("secret dimension does not match field order");
    }
    if (!msp_accepts(msp, players)) {
        throw std::invalid_argument("msp_eigensystem needs an authorized set; " + players.to_string() + " is rejected");
    }
    const std::size_t e = msp.cols();
    const PlayerSet rest = players.complement(msp.n_players());
    const GFMatrix m_a = msp.submatrix(players);
    const GFMatrix m_b = msp.submatrix(rest);
    const auto [l, m] = ranks(msp, players);
    if (l + m < e) {
        throw std::logic_error("rank(M_A) + rank(M_B) < e for an authorized set");
    }
    const double scale = static_cast<double>(ipow(q, l + m - e));
    const double norm = 1.0 / std::sqrt(static_cast<double>(ipow(q, e - m - 1)));

    std::vector<Subsystem> subs;
    for (std::size_t r : msp.rows_of(players)) {
        subs.push_back({"Q" + std::to_string(r + 1), q});
    }
    SystemLayout layout(std::move(subs));

    // Image of M_B, enumerated as the set of all M_B y.
    std::vector<FieldVector> image;
    for (const FieldVector &y : all_vectors(q, e)) {
        image.push_back(m_b.apply(y));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());

    // Support of each |phi_x^i> keyed by its sorted basis indices.
    std::map<std::vector<std::size_t>, FieldElem> seen;
    std::vector<MspEigenpair> out;
    for (std::size_t i = 0; i < q; i++) {
        for (const FieldVector &x : image) {
            auto preimage = enumerate_preimage(m_b, static_cast<FieldElem>(i), x);
            if (preimage.empty()) {
                continue;
            }
            std::vector<std::size_t> support;
            for (const FieldVector &ia : preimage) {
                support.push_back(qudit_index(m_a.apply(ia), q));
            }
            std::sort(support.begin(), support.end());
            auto [it, inserted] = seen.emplace(support, static_cast<FieldElem>(i));
            if (!inserted) {
                if (it->second != i) {
                    throw std::logic_error("eigenvector shared by two secret values for an authorized set");
                }
                continue;
            }
            CVector amps = CVector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
            for (std::size_t idx : support) {
                amps(static_cast<Eigen::Index>(idx)) += norm;
            }
            if (std::abs(amps.norm() - 1.0) > kNormTolerance) {
                throw std::logic_error("phi_x^i is not normalized: support size " + std::to_string(support.size()));
            }
            out.push_back({secret.probs[i] / scale, static_cast<FieldElem>(i), PureState(layout, std::move(amps))});
        }
    }
    return out;
}

SchemeInstance encode_ghz_direct(std::size_t n, const SecretSpec &secret) {
    secret.validate();
    if (secret.dim != 2) {
        throw std::invalid_argument("GHZ schemes share a qubit secret; got dimension " + std::to_string(secret.dim));
    }
    if (n < 1 || n + 1 > 14) {
        throw std::invalid_argument("GHZ scheme supports 1..13 players, got " + std::to_string(n));
    }
    return SchemeInstance{ghz_scheme_state(n, secret), one_share_per_player(n), n, SchemeKind::kGhz, GhzParams{n},
                          secret};
}

std::vector<double> teleport_outcome_probabilities(std::size_t n, const SecretSpec &secret) {
    check_teleport_args(n, secret);
    CVector full = teleport_initial_state(n, secret);
    std::vector<double> probs;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            probs.push_back(bell_project(full, n, {a, b}).squaredNorm());
        }
    }
    return probs;
}

TeleportResult teleport_protocol(std::size_t n, const SecretSpec &secret, const TeleportOptions &options) {
    check_teleport_args(n, secret);
    if (options.z_player < 1 || options.z_player > static_cast<int>(n)) {
        throw std::invalid_argument("Z-correction player out of range");
    }
    CVector full = teleport_initial_state(n, secret);

    BellOutcome outcome;
    if (options.forced_outcome) {
        outcome = *options.forced_outcome;
        if ((outcome.phase_bit != 0 && outcome.phase_bit != 1) || (outcome.flip_bit != 0 && outcome.flip_bit != 1)) {
            throw std::invalid_argument("Bell outcome bits must be 0 or 1");
        }
    } else {
        auto probs = teleport_outcome_probabilities(n, secret);
        std::mt19937_64 rng(options.seed);
        std::discrete_distribution<int> pick(probs.begin(), probs.end());
        int k = pick(rng);
        outcome = {k / 2, k % 2};
    }

    CVector projected = bell_project(full, n, outcome);
    const double probability = projected.squaredNorm();
    if (probability < 1e-15) {
        throw std::invalid_argument("forced Bell outcome has zero probability");
    }
    projected /= std::sqrt(probability);

    const std::size_t players_dim = std::size_t{1} << n;
    const std::size_t z_bit = std::size_t{1} << (n - static_cast<std::size_t>(options.z_player));
    CVector corrected(projected.size());
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(projected.size()); idx++) {
        std::size_t r = idx / players_dim;
        std::size_t p = idx % players_dim;
        if (outcome.flip_bit) {
            p ^= players_dim - 1;
        }
        Complex amp = projected(static_cast<Eigen::Index>(idx));
        if (outcome.phase_bit && (p & z_bit)) {
            amp = -amp;
        }
        corrected(static_cast<Eigen::Index>(r * players_dim + p)) = amp;
    }

    SystemLayout layout = reference_layout(2).concat(qubit_layout(n));
    SchemeInstance scheme{PureState(std::move(layout), std::move(corrected)),
                          one_share_per_player(n),
                          n,
                          SchemeKind::kGhz,
                          GhzParams{n},
                          secret};
    return {std::move(scheme), outcome, probability};
}

namespace {

// Remaining labels (reference first) and ownership after dropping one share.
std::pair<LabelSet, std::vector<ShareOwner>> without_share(const std::vector<ShareOwner> &ownership,
                                                           const std::string &share_label) {
    if (share_label == kReferenceLabel) {
        throw std::invalid_argument("the reference system cannot be discarded");
    }
    auto it = std::find_if(ownership.begin(), ownership.end(),
                           [&](const ShareOwner &o) { return o.label == share_label; });
    if (it == ownership.end()) {
        throw std::invalid_argument("unknown share label: " + share_label);
    }
    LabelSet keep{kReferenceLabel};
    std::vector<ShareOwner> rest;
    for (const auto &o : ownership) {
        if (o.label != share_label) {
            keep.push_back(o.label);
            rest.push_back(o);
        }
    }
    return {std::move(keep), std::move(rest)};
}

}  // namespace

MixedScheme discard_share(const MixedScheme &scheme, const std::string &share_label) {
    auto [keep, ownership] = without_share(scheme.ownership, share_label);
    return MixedScheme{partial_trace(scheme.state, keep), std::move(ownership), scheme.n_players, scheme.kind,
                       scheme.secret_entropy_bits, scheme.reference_mutual_bits};
}

MixedScheme discard_share(const SchemeInstance &scheme, const std::string &share_label) {
    auto [keep, ownership] = without_share(scheme.ownership, share_label);
    // For the pure scheme I(R:S) = S(R) + S(S) - S(RS) = 2 S(R).
    const double s_ref = subsystem_entropy(scheme.state, {kReferenceLabel});
    return MixedScheme{partial_trace(scheme.state, keep), std::move(ownership), scheme.n_players, scheme.kind, s_ref,
                       2.0 * s_ref};
}

}  // namespace qss
