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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qss/paulistab.h"
#include "qss/schemes.h"
#include "qss/verifier.h"
#include "test_util.h"

namespace qss {
namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

MSP vandermonde5() { return MSP(GFMatrix(PrimeField(5), {{1, 1}, {1, 2}, {1, 3}}, 2), {1, 2, 3}); }

SchemeInstance five_qubit(const SecretSpec &secret = SecretSpec::uniform(2)) {
    return encode_stabilizer_qts(StabilizerCode::five_qubit(), secret);
}

std::vector<SchemeInstance> all_schemes() {
    std::vector<SchemeInstance> out;
    out.push_back(five_qubit());
    out.push_back(five_qubit(SecretSpec{2, {0.25, 0.75}}));
    out.push_back(encode_stabilizer_qts(StabilizerCode::trivial(), SecretSpec::uniform(2)));
    out.push_back(encode_msp(vandermonde5(), SecretSpec::uniform(5)));
    for (std::size_t n = 1; n <= 3; n++) {
        out.push_back(encode_ghz_direct(n, SecretSpec::uniform(2)));
        out.push_back(teleport_protocol(n, SecretSpec::uniform(2), {BellOutcome{1, 1}, 1, 0}).scheme);
    }
    return out;
}

Outcome five_qubit_threshold() {
    VerificationReport r = subset_report(five_qubit());
    int authorized = 0, unauthorized = 0;
    double worst = 0.0;
    for (const auto &res : r.results) {
        double target = res.players.size() >= 3 ? 2.0 : 0.0;
        (res.players.size() >= 3 ? authorized : unauthorized)++;
        worst = std::max(worst, std::abs(res.mutual_info_bits - target));
    }
    // 10 pairs plus 5 singletons.
    bool ok = authorized == 16 && unauthorized == 15 && worst < 1e-6;
    return {ok, std::to_string(authorized) + " sets at 2 bits, " + std::to_string(unauthorized) +
                    " sets at 0, max deviation " + sci(worst)};
}

Outcome entropy_ladder() {
    SchemeInstance s = five_qubit();
    const double ladder[] = {0, 1, 2, 3, 2, 1};
    double worst = 0.0;
    for (PlayerSet a : nonempty_subsets(5)) {
        worst = std::max(worst, std::abs(subsystem_entropy(s.state, s.shares_of(a)) - ladder[a.size()]));
    }
    SchemeInstance skewed = five_qubit(SecretSpec{2, {0.25, 0.75}});
    double spec_dev = 0.0;
    for (PlayerSet a : nonempty_subsets(5)) {
        if (a.size() != 3) {
            continue;
        }
        auto ev = eig_hermitian(partial_trace(skewed.state, skewed.shares_of(a)));
        for (std::size_t k = 0; k < ev.size(); k++) {
            spec_dev = std::max(spec_dev, std::abs(ev[k] - (k < 4 ? 0.1875 : 0.0625)));
        }
    }
    bool ok = worst < 1e-6 && spec_dev < 1e-9 && audit_stabilizer_entropies(s).passed() &&
              audit_stabilizer_entropies(skewed).passed();
    return {ok, "ladder deviation " + sci(worst) + ", |A|=3 spectrum deviation " + sci(spec_dev)};
}

Outcome restricted_independence() {
    StabilizerCode code = StabilizerCode::five_qubit();
    std::vector<PauliOperator> ops = code.generators;
    ops.push_back(code.logical_x);
    ops.push_back(code.logical_z);
    int full_rank = 0;
    for (std::size_t a = 1; a <= 5; a++) {
        for (std::size_t b = a + 1; b <= 5; b++) {
            std::vector<PauliOperator> restricted;
            for (const auto &op : ops) {
                restricted.push_back(restrict(op, {a, b}));
            }
            full_rank += symplectic_rank(restricted) == 4;
        }
    }
    std::size_t d = code_distance(code);
    return {full_rank == 10 && d == 3,
            std::to_string(full_rank) + "/10 position pairs at full rank 4, distance " + std::to_string(d)};
}

Outcome stabilizer_conjugation() {
    std::mt19937_64 rng(2026);
    double worst = 0.0;
    int cases = 0;
    while (cases < 100) {
        const std::size_t n = 2 + rng() % 5;
        auto sample = testing::random_stabilizer_state(n, rng);
        PauliOperator w(n);
        for (const auto &g : sample.generators) {
            if (rng() & 1) {
                w = w * g;
            }
        }
        std::vector<std::size_t> keep;
        LabelSet labels;
        for (std::size_t k = 1; k <= n; k++) {
            if (rng() & 1) {
                keep.push_back(k);
                labels.push_back("Q" + std::to_string(k));
            }
        }
        if (keep.empty() || keep.size() == n) {
            continue;
        }
        CMatrix rho = partial_trace(sample.state, labels).matrix();
        CMatrix w2 = restrict(w, keep).matrix();
        worst = std::max(worst, max_abs_entry(w2 * rho * w2.adjoint() - rho));
        cases++;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d cases, max deviation %.3e", cases, worst);
    return {worst < 1e-10, buf};
}

Outcome msp_scheme() {
    const MSP msp = vandermonde5();
    const SecretSpec secret = SecretSpec::uniform(5);
    SchemeInstance s = encode_msp(msp, secret);
    VerificationReport r = subset_report(s);
    bool ok = verify_against(r, threshold_structure(2, 3)).passed && audit_msp_entropies(s).passed();
    double eig_dev = 0.0, gram_dev = 0.0;
    for (PlayerSet a : nonempty_subsets(3)) {
        if (!msp_accepts(msp, a)) {
            continue;
        }
        auto pairs = msp_eigensystem(msp, secret, a);
        auto [l, m] = ranks(msp, a);
        std::size_t mult = 1;
        for (std::size_t k = 0; k < l + m - msp.cols(); k++) {
            mult *= 5;
        }
        ok = ok && pairs.size() == 5 * mult;
        std::vector<double> predicted;
        for (const auto &p : pairs) {
            eig_dev = std::max(eig_dev, std::abs(p.eigenvalue - secret.probs[p.secret_index] / mult));
            predicted.push_back(p.eigenvalue);
        }
        auto numeric = eig_hermitian(partial_trace(s.state, s.shares_of(a)));
        predicted.resize(numeric.size(), 0.0);
        std::sort(predicted.rbegin(), predicted.rend());
        for (std::size_t k = 0; k < numeric.size(); k++) {
            eig_dev = std::max(eig_dev, std::abs(numeric[k] - predicted[k]));
        }
        for (std::size_t u = 0; u < pairs.size(); u++) {
            for (std::size_t w = 0; w < pairs.size(); w++) {
                Complex g = pairs[u].vector.amplitudes().dot(pairs[w].vector.amplitudes());
                gram_dev = std::max(gram_dev, std::abs(g - (u == w ? 1.0 : 0.0)));
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "eigenvalue deviation %.3e, Gram deviation %.3e", eig_dev, gram_dev);
    return {ok && eig_dev < 1e-9 && gram_dev < 1e-10, buf};
}

Outcome teleport_non_perfect() {
    bool ok = true;
    double worst = 0.0;
    for (std::size_t n : {2u, 3u}) {
        TeleportResult t = teleport_protocol(n, SecretSpec::uniform(2), {std::nullopt, 1, n});
        VerificationReport r = subset_report(t.scheme);
        for (const auto &res : r.results) {
            double target = res.players.size() == n ? 2.0 : 1.0;
            worst = std::max(worst, std::abs(res.mutual_info_bits - target));
        }
        ok = ok && r.verdict.kind == VerdictKind::kNonPerfect && r.verdict.witnesses.size() == (1u << n) - 2;
    }
    return {ok && worst < 1e-6, "max deviation " + sci(worst) + ", verdict NON_PERFECT for n=2,3"};
}

Outcome teleport_equivalence() {
    std::mt19937_64 rng(7);
    double prob_dev = 0.0, min_fid = 1.0;
    for (std::size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 5; trial++) {
            SecretSpec secret = testing::random_qubit_secret(rng);
            SchemeInstance direct = encode_ghz_direct(n, secret);
            for (int k = 0; k < 4; k++) {
                TeleportResult t = teleport_protocol(n, secret, {BellOutcome{k / 2, k % 2}, 1, 0});
                prob_dev = std::max(prob_dev, std::abs(t.probability - 0.25));
                min_fid = std::min(min_fid, fidelity(t.scheme.state, direct.state));
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "probability deviation %.3e, min fidelity 1-%.3e", prob_dev, 1.0 - min_fid);
    return {prob_dev <= 1e-12 && min_fid >= 1.0 - 1e-12, buf};
}

Outcome reference_identity() {
    double worst = 0.0;
    for (const SchemeInstance &s : all_schemes()) {
        const double total = mutual_information(s.state, {kReferenceLabel}, s.shares_of(PlayerSet::all(s.n_players)));
        for (PlayerSet a : nonempty_subsets(s.n_players)) {
            PlayerSet b = a.complement(s.n_players);
            double ia = mutual_information(s.state, {kReferenceLabel}, s.shares_of(a));
            double ib = b.empty() ? 0.0 : mutual_information(s.state, {kReferenceLabel}, s.shares_of(b));
            worst = std::max(worst, std::abs(total - ia - ib));
        }
    }
    std::mt19937_64 rng(99);
    SystemLayout l({{"R", 2}, {"A", 2}, {"B", 3}});
    for (int trial = 0; trial < 100; trial++) {
        PureState psi = testing::random_pure_state(l, rng);
        double d = mutual_information(psi, {"R"}, {"A", "B"}) - mutual_information(psi, {"R"}, {"A"}) -
                   mutual_information(psi, {"R"}, {"B"});
        worst = std::max(worst, std::abs(d));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max deviation %.3e", worst);
    return {worst < 1e-8, buf};
}

Outcome erasure_bridge() {
    std::size_t checked = 0, mismatches = 0;
    for (const SchemeInstance &s : all_schemes()) {
        VerificationReport r = subset_report(s);
        for (const auto &res : r.results) {
            checked++;
            mismatches += erasure_correctable(s.state, s.shares_of(res.players)) != (res.cls == SubsetClass::kZero);
        }
    }
    return {mismatches == 0, std::to_string(checked) + " subsets, " + std::to_string(mismatches) + " mismatches"};
}

Outcome discarded_share() {
    MixedScheme m = discard_share(five_qubit(), "P5");
    VerificationReport r = subset_report(m);
    double worst = std::abs(r.find(PlayerSet{1, 2, 3}).mutual_info_bits - 2.0 * m.secret_entropy_bits);
    for (const auto &res : r.results) {
        if (res.players.size() <= 2) {
            worst = std::max(worst, res.mutual_info_bits);
        }
    }
    return {worst < 1e-6, "max deviation " + sci(worst)};
}

}  // namespace
}  // namespace qss

int main() {
    using qss::Outcome;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 five-qubit ((3,5)) threshold", qss::five_qubit_threshold},
        {"2 stabilizer entropy ladder and spectrum", qss::entropy_ladder},
        {"3 restricted generators independent, distance 3", qss::restricted_independence},
        {"4 restricted stabilizer commutes with reduced state", qss::stabilizer_conjugation},
        {"5 MSP scheme entropies and eigensystem", qss::msp_scheme},
        {"6 teleportation ((n,n)) is non-perfect", qss::teleport_non_perfect},
        {"7 teleport protocol equals direct encoding", qss::teleport_equivalence},
        {"8 I(R:S) = I(R:A) + I(R:B) for pure states", qss::reference_identity},
        {"9 erasure correctability matches ZERO", qss::erasure_bridge},
        {"10 discarded share keeps threshold", qss::discarded_share},
    };
    int failed = 0;
    for (const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %s: %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failed += !o.passed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
