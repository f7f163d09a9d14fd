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

#include "qss/verifier.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qss {

namespace {

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    std::string s = buf;
    if (s.find_first_of(".e") == std::string::npos) {
        s += ".0";
    }
    return s;
}

double clamp_mutual(double mi, Tolerance tol) { return (mi < tol.eps()) ? 0.0 : mi; }

SubsetClass classify(double mi, double reference, Tolerance tol) {
    if (std::abs(mi - reference) < tol.eps()) {
        return SubsetClass::kFull;
    }
    if (mi < tol.eps()) {
        return SubsetClass::kZero;
    }
    return SubsetClass::kPartial;
}

LabelSet with_reference(const LabelSet &shares) {
    LabelSet out{kReferenceLabel};
    out.insert(out.end(), shares.begin(), shares.end());
    return out;
}

template <typename State>
SubsetResult evaluate_subset(const State &state, const std::vector<ShareOwner> &ownership, PlayerSet players,
                             double s_ref, double reference, Tolerance tol) {
    LabelSet shares = shares_of(ownership, players);
    double s_a = 0.0;
    double mi = 0.0;
    if (!shares.empty()) {
        s_a = subsystem_entropy(state, shares);
        mi = s_ref + s_a - subsystem_entropy(state, with_reference(shares));
    }
    mi = clamp_mutual(mi, tol);
    return {players, std::max(s_a, 0.0), mi, classify(mi, reference, tol)};
}

void assign_verdict(VerificationReport &report) {
    Verdict &v = report.verdict;
    for (const auto &r : report.results) {
        if (r.cls == SubsetClass::kPartial) {
            v.witnesses.push_back(r.players);
        }
    }
    if (!v.witnesses.empty()) {
        v.kind = VerdictKind::kNonPerfect;
        return;
    }

    const bool degenerate = report.reference_mutual_bits < report.tol.eps();
    std::vector<bool> zero(std::size_t{1} << report.n_players, false);
    zero[0] = true;
    if (!degenerate) {
        for (const auto &r : report.results) {
            zero[r.players.bits()] = (r.cls == SubsetClass::kZero);
        }
    }
    try {
        AdversaryStructure realized(report.n_players, [&](PlayerSet s) { return static_cast<bool>(zero[s.bits()]); });
        if (report.pure && !degenerate && !is_self_dual(realized)) {
            v.kind = VerdictKind::kInvalid;
            v.diagnostics.push_back("pure scheme whose authorized sets are not the complements of its unauthorized sets");
            return;
        }
        v.kind = VerdictKind::kPerfect;
        v.structure = std::move(realized);
    } catch (const std::invalid_argument &e) {
        v.kind = VerdictKind::kInvalid;
        v.diagnostics.push_back(e.what());
    }
}

void require_kind(const SchemeInstance &scheme, SchemeKind kind, const char *what) {
    if (scheme.kind != kind) {
        throw std::invalid_argument(std::string(what) + " applies to " + to_string(kind) + " schemes, got " +
                                    to_string(scheme.kind));
    }
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps < 1e-2)) {
        throw std::invalid_argument("tolerance must satisfy 0 < eps < 1e-2, got " + std::to_string(eps));
    }
}

const char *to_string(SubsetClass c) {
    switch (c) {
        case SubsetClass::kFull: return "FULL";
        case SubsetClass::kZero: return "ZERO";
        case SubsetClass::kPartial: return "PARTIAL";
    }
    return "?";
}

const char *to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::kPerfect: return "PERFECT";
        case VerdictKind::kNonPerfect: return "NON_PERFECT";
        case VerdictKind::kInvalid: return "INVALID";
    }
    return "?";
}

const SubsetResult &VerificationReport::find(PlayerSet s) const {
    for (const auto &r : results) {
        if (r.players == s) {
            return r;
        }
    }
    throw std::out_of_range("subset " + s.to_string() + " not in report");
}

std::string describe(const SubsetResult &r) {
    return r.players.to_string() + ": " + to_string(r.cls) + " I=" + short_number(r.mutual_info_bits);
}

VerificationReport subset_report(const SchemeInstance &scheme, Tolerance tol) {
    VerificationReport report;
    report.tol = tol;
    report.pure = true;
    report.n_players = scheme.n_players;
    report.players = PlayerSet::all(scheme.n_players);
    const double s_ref = subsystem_entropy(scheme.state, {kReferenceLabel});
    report.secret_entropy_bits = s_ref;
    report.reference_mutual_bits = 2.0 * s_ref;
    for (PlayerSet s : nonempty_subsets(scheme.n_players)) {
        report.results.push_back(
            evaluate_subset(scheme.state, scheme.ownership, s, s_ref, report.reference_mutual_bits, tol));
    }
    assign_verdict(report);
    return report;
}

VerificationReport subset_report(const MixedScheme &scheme, Tolerance tol) {
    const PlayerSet active = scheme.active_players();
    const std::size_t k = active.size();
    if (k == 0 || active != PlayerSet::all(k)) {
        throw std::invalid_argument("players owning shares must be numbered 1..k; got " + active.to_string());
    }
    VerificationReport report;
    report.tol = tol;
    report.pure = false;
    report.n_players = k;
    report.players = active;
    report.secret_entropy_bits = scheme.secret_entropy_bits;
    report.reference_mutual_bits = scheme.reference_mutual_bits;
    const double s_ref = subsystem_entropy(scheme.state, {kReferenceLabel});
    for (PlayerSet s : nonempty_subsets(k)) {
        report.results.push_back(
            evaluate_subset(scheme.state, scheme.ownership, s, s_ref, report.reference_mutual_bits, tol));
    }
    assign_verdict(report);
    return report;
}

CheckResult verify_against(const VerificationReport &report, const AdversaryStructure &expected, Tolerance tol) {
    if (expected.n_players() != report.n_players) {
        throw std::invalid_argument("expected structure has " + std::to_string(expected.n_players()) +
                                    " players, scheme has " + std::to_string(report.n_players));
    }
    for (const auto &r : report.results) {
        bool ok = expected.is_unauthorized(r.players)
                      ? r.mutual_info_bits < tol.eps()
                      : std::abs(r.mutual_info_bits - report.reference_mutual_bits) < tol.eps();
        if (!ok) {
            std::string want = expected.is_unauthorized(r.players) ? "unauthorized" : "authorized";
            return {false, r.players, describe(r) + " (expected " + want + ")"};
        }
    }
    return {true, std::nullopt, "all " + std::to_string(report.results.size()) + " subsets match"};
}

bool erasure_correctable(const PureState &state, const LabelSet &shares, Tolerance tol) {
    if (std::find(shares.begin(), shares.end(), kReferenceLabel) != shares.end()) {
        throw std::invalid_argument("erasure set must not contain the reference system");
    }
    if (shares.empty()) {
        return true;
    }
    return mutual_information(state, {kReferenceLabel}, shares) < tol.eps();
}

CheckResult check_pure_duality(const SchemeInstance &scheme, Tolerance tol) {
    const std::size_t n = scheme.n_players;
    const double s_ref = subsystem_entropy(scheme.state, {kReferenceLabel});
    const double reference = 2.0 * s_ref;
    auto info = [&](PlayerSet s) {
        LabelSet shares = scheme.shares_of(s);
        return shares.empty() ? 0.0 : mutual_information(scheme.state, {kReferenceLabel}, shares);
    };
    double worst = 0.0;
    std::size_t pairs = 0;
    for (PlayerSet a : nonempty_subsets(n)) {
        PlayerSet b = a.complement(n);
        if (b.empty() || b.bits() < a.bits()) {
            continue;
        }
        pairs++;
        double dev = std::abs(reference - info(a) - info(b));
        worst = std::max(worst, dev);
        if (dev >= tol.eps()) {
            return {false, a,
                    "I(R:S) - I(R:A) - I(R:B) = " + short_number(reference - info(a) - info(b)) + " for A=" +
                        a.to_string() + ", B=" + b.to_string()};
        }
    }
    return {true, std::nullopt,
            std::to_string(pairs) + " complementary pairs, max deviation " + short_number(worst)};
}

bool AuditTable::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const AuditRow &r) { return r.passed; });
}

const AuditRow *AuditTable::first_failure() const {
    for (const auto &r : rows) {
        if (!r.passed) {
            return &r;
        }
    }
    return nullptr;
}

AuditTable audit_stabilizer_entropies(const SchemeInstance &scheme, Tolerance tol) {
    require_kind(scheme, SchemeKind::kStabilizer, "stabilizer entropy audit");
    const std::size_t t = std::get<StabilizerParams>(scheme.params).t;
    const std::size_t n = scheme.n_players;
    if (n != 2 * t - 1) {
        throw std::invalid_argument("stabilizer audit needs n = 2t-1");
    }
    const double s_secret = scheme.secret.entropy_bits();
    const double a0 = scheme.secret.probs[0];
    const double a1 = scheme.secret.probs[1];

    AuditTable table{"stabilizer entropy audit (t=" + std::to_string(t) + ", n=" + std::to_string(n) + ")", {}};
    for (PlayerSet s : nonempty_subsets(n)) {
        const std::size_t k = s.size();
        const LabelSet shares = scheme.shares_of(s);
        const double actual = subsystem_entropy(scheme.state, shares);
        const double expected =
            k + 1 <= t ? static_cast<double>(k) : s_secret + static_cast<double>(2 * t - 1 - k);
        table.rows.push_back({s, "S", expected, actual, std::abs(actual - expected) < tol.eps()});

        if (k == t) {
            auto spectrum = eig_hermitian(partial_trace(scheme.state, shares));
            const std::size_t half = std::size_t{1} << (t - 1);
            const double scale = std::ldexp(1.0, -static_cast<int>(t));
            std::vector<double> want;
            want.insert(want.end(), half, scale * (1.0 + a0 - a1));
            want.insert(want.end(), half, scale * (1.0 - a0 + a1));
            std::sort(want.begin(), want.end(), std::greater<>());
            double dev = 0.0;
            for (std::size_t j = 0; j < want.size(); j++) {
                dev = std::max(dev, std::abs(spectrum[j] - want[j]));
            }
            table.rows.push_back({s, "spectrum deviation", 0.0, dev, dev < kSpectrumTolerance});
        }
    }
    return table;
}

AuditTable audit_msp_entropies(const SchemeInstance &scheme, Tolerance tol) {
    require_kind(scheme, SchemeKind::kMsp, "MSP entropy audit");
    const MSP &msp = std::get<MspParams>(scheme.params).msp;
    const std::size_t n = scheme.n_players;
    const double log_q = std::log2(static_cast<double>(msp.field().order()));
    const double s_secret = scheme.secret.entropy_bits();
    const auto e = static_cast<long>(msp.cols());

    AuditTable table{"MSP entropy audit (q=" + std::to_string(msp.field().order()) + ", e=" + std::to_string(e) + ")",
                     {}};
    for (PlayerSet a : nonempty_subsets(n)) {
        if (!msp_accepts(msp, a)) {
            continue;
        }
        const PlayerSet b = a.complement(n);
        const auto [l, m] = ranks(msp, a);
        const long excess = static_cast<long>(l + m) - e;
        const double offset = static_cast<double>(excess) * log_q;
        if (excess < 0) {
            throw std::logic_error("rank excess l+m-e is negative for " + a.to_string());
        }
        const std::string tag = " [l+m-e=" + std::to_string(excess) + "]";

        const double s_a = subsystem_entropy(scheme.state, scheme.shares_of(a));
        table.rows.push_back({a, "S(A)" + tag, s_secret + offset, s_a, std::abs(s_a - s_secret - offset) < tol.eps()});

        const LabelSet b_shares = scheme.shares_of(b);
        const double s_b = b_shares.empty() ? 0.0 : subsystem_entropy(scheme.state, b_shares);
        table.rows.push_back({b, "S(B)" + tag, offset, s_b, std::abs(s_b - offset) < tol.eps()});
    }
    return table;
}

}  // namespace qss
