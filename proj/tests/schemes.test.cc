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
#include <random>

#include <gtest/gtest.h>

#include "test_util.h"

namespace qss {
namespace {

MSP vandermonde5() { return MSP(GFMatrix(PrimeField(5), {{1, 1}, {1, 2}, {1, 3}}, 2), {1, 2, 3}); }

const SecretSpec kSkewed5{5, {0.1, 0.2, 0.3, 0.15, 0.25}};

TEST(SecretSpec, ValidationAndEntropy) {
    EXPECT_NEAR(SecretSpec::uniform(4).entropy_bits(), 2.0, 1e-15);
    EXPECT_NEAR((SecretSpec{2, {1.0, 0.0}}).entropy_bits(), 0.0, 1e-15);
    EXPECT_THROW((SecretSpec{2, {0.5, 0.6}}).validate(), std::invalid_argument);
    EXPECT_THROW((SecretSpec{2, {1.2, -0.2}}).validate(), std::invalid_argument);
    EXPECT_THROW((SecretSpec{3, {0.5, 0.5}}).validate(), std::invalid_argument);
    EXPECT_THROW((SecretSpec{1, {1.0}}).validate(), std::invalid_argument);
}

TEST(Stabilizer, EncodingIsTheCodeIsometry) {
    const SecretSpec secret{2, {0.25, 0.75}};
    StabilizerCode code = StabilizerCode::five_qubit();
    SchemeInstance s = encode_stabilizer_qts(code, secret);
    EXPECT_EQ(s.state.layout().labels(), (std::vector<std::string>{"R", "P1", "P2", "P3", "P4", "P5"}));
    EXPECT_EQ(std::get<StabilizerParams>(s.params).t, 3u);
    auto [zero, one] = codewords(code);
    CVector expect(64);
    expect << 0.5 * zero.amplitudes(), std::sqrt(0.75) * one.amplitudes();
    EXPECT_LT((s.state.amplitudes() - expect).norm(), 1e-14);
    EXPECT_NEAR(subsystem_entropy(s.state, {"R"}), secret.entropy_bits(), 1e-12);
    EXPECT_EQ(s.shares_of(PlayerSet{2, 4}), (LabelSet{"P2", "P4"}));
}

TEST(Stabilizer, RejectsBadInputs) {
    StabilizerCode even{"even", 2, {pauli_parse("ZZ")}, pauli_parse("XX"), pauli_parse("ZI")};
    EXPECT_THROW(encode_stabilizer_qts(even, SecretSpec::uniform(2)), std::invalid_argument);
    EXPECT_THROW(encode_stabilizer_qts(StabilizerCode::five_qubit(), SecretSpec::uniform(3)), std::invalid_argument);
}

TEST(Stabilizer, TrivialCodeIsIdentity) {
    SchemeInstance s = encode_stabilizer_qts(StabilizerCode::trivial(), SecretSpec{2, {0.3, 0.7}});
    EXPECT_NEAR(std::abs(s.state.amplitudes()(0)), std::sqrt(0.3), 1e-15);
    EXPECT_NEAR(std::abs(s.state.amplitudes()(3)), std::sqrt(0.7), 1e-15);
}

TEST(Msp, EncodingMatchesLinearMap) {
    MSP msp = vandermonde5();
    SchemeInstance s = encode_msp(msp, kSkewed5);
    EXPECT_EQ(s.state.layout().labels(), (std::vector<std::string>{"R", "Q1", "Q2", "Q3"}));
    // |i>_R (x) 5^{-1/2} sum_a |i+a, i+2a, i+3a>
    CVector expect = CVector::Zero(625);
    for (int i = 0; i < 5; i++) {
        for (int a = 0; a < 5; a++) {
            int idx = i * 125 + ((i + a) % 5) * 25 + ((i + 2 * a) % 5) * 5 + (i + 3 * a) % 5;
            expect(idx) = std::sqrt(kSkewed5.probs[i] / 5.0);
        }
    }
    EXPECT_LT((s.state.amplitudes() - expect).norm(), 1e-14);
    EXPECT_NEAR(subsystem_entropy(s.state, {"R"}), kSkewed5.entropy_bits(), 1e-12);
}

TEST(Msp, RejectsNonSelfDualAndWrongDimension) {
    MSP two_of_two(GFMatrix(PrimeField(3), {{1, 1}, {0, 1}}, 2), {1, 2});
    EXPECT_THROW(encode_msp(two_of_two, SecretSpec::uniform(3)), std::invalid_argument);
    EXPECT_THROW(encode_msp(vandermonde5(), SecretSpec::uniform(2)), std::invalid_argument);
}

void check_eigensystem(const MSP &msp, const SecretSpec &secret, PlayerSet a, std::size_t multiplicity) {
    SchemeInstance s = encode_msp(msp, secret);
    auto pairs = msp_eigensystem(msp, secret, a);
    ASSERT_EQ(pairs.size(), secret.dim * multiplicity);
    std::vector<double> predicted;
    for (const auto &p : pairs) {
        EXPECT_NEAR(p.eigenvalue, secret.probs[p.secret_index] / static_cast<double>(multiplicity), 1e-15);
        predicted.push_back(p.eigenvalue);
    }
    for (std::size_t i = 0; i < secret.dim; i++) {
        auto count = std::count_if(pairs.begin(), pairs.end(), [&](const MspEigenpair &p) { return p.secret_index == i; });
        EXPECT_EQ(static_cast<std::size_t>(count), multiplicity);
    }
    DensityOperator rho = partial_trace(s.state, s.shares_of(a));
    std::vector<double> numeric = eig_hermitian(rho);
    predicted.resize(numeric.size(), 0.0);
    std::sort(predicted.rbegin(), predicted.rend());
    for (std::size_t k = 0; k < numeric.size(); k++) {
        EXPECT_NEAR(numeric[k], predicted[k], 1e-9);
    }
    // Orthonormality and rho v = lambda v.
    for (std::size_t u = 0; u < pairs.size(); u++) {
        const CVector &vu = pairs[u].vector.amplitudes();
        EXPECT_LT((rho.matrix() * vu - pairs[u].eigenvalue * vu).norm(), 1e-10);
        for (std::size_t w = 0; w < pairs.size(); w++) {
            Complex g = vu.dot(pairs[w].vector.amplitudes());
            EXPECT_LT(std::abs(g - (u == w ? 1.0 : 0.0)), 1e-10);
        }
    }
}

TEST(Msp, EigensystemMatchesNumericSpectrum) {
    check_eigensystem(vandermonde5(), SecretSpec::uniform(5), PlayerSet{1, 2}, 5);
    check_eigensystem(vandermonde5(), kSkewed5, PlayerSet{2, 3}, 5);
    check_eigensystem(vandermonde5(), kSkewed5, PlayerSet{1, 2, 3}, 1);
    EXPECT_THROW(msp_eigensystem(vandermonde5(), kSkewed5, PlayerSet{1}), std::invalid_argument);
}

TEST(Ghz, DirectEncoding) {
    SchemeInstance s = encode_ghz_direct(3, SecretSpec{2, {0.4, 0.6}});
    EXPECT_NEAR(s.state.amplitudes()(0).real(), std::sqrt(0.4), 1e-15);
    EXPECT_NEAR(s.state.amplitudes()(15).real(), std::sqrt(0.6), 1e-15);
    EXPECT_THROW(encode_ghz_direct(0, SecretSpec::uniform(2)), std::invalid_argument);
    EXPECT_THROW(encode_ghz_direct(2, SecretSpec::uniform(3)), std::invalid_argument);
}

TEST(Teleport, EveryOutcomeReproducesDirectEncoding) {
    std::mt19937_64 rng(41);
    for (std::size_t n = 1; n <= 4; n++) {
        SecretSpec secret = testing::random_qubit_secret(rng);
        SchemeInstance direct = encode_ghz_direct(n, secret);
        auto probs = teleport_outcome_probabilities(n, secret);
        ASSERT_EQ(probs.size(), 4u);
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                EXPECT_NEAR(probs[2 * a + b], 0.25, 1e-12);
                for (int z = 1; z <= static_cast<int>(n); z++) {
                    TeleportResult r = teleport_protocol(n, secret, {BellOutcome{a, b}, z, 0});
                    EXPECT_NEAR(r.probability, 0.25, 1e-12);
                    EXPECT_LT((r.scheme.state.amplitudes() - direct.state.amplitudes()).norm(), 1e-12);
                    EXPECT_EQ(r.scheme.state.layout(), direct.state.layout());
                }
            }
        }
    }
}

TEST(Teleport, SeededSamplingIsDeterministic) {
    SecretSpec secret = SecretSpec::uniform(2);
    TeleportOptions opts;
    opts.seed = 99;
    EXPECT_EQ(teleport_protocol(2, secret, opts).outcome, teleport_protocol(2, secret, opts).outcome);
    opts.z_player = 3;
    EXPECT_THROW(teleport_protocol(2, secret, opts), std::invalid_argument);
    EXPECT_THROW(teleport_protocol(12, secret), std::invalid_argument);
    EXPECT_THROW(teleport_protocol(2, secret, {BellOutcome{2, 0}, 1, 0}), std::invalid_argument);
}

TEST(DiscardShare, KeepsReferenceCorrelation) {
    SchemeInstance s = encode_stabilizer_qts(StabilizerCode::five_qubit(), SecretSpec::uniform(2));
    MixedScheme m = discard_share(s, "P5");
    EXPECT_EQ(m.state.layout().labels(), (std::vector<std::string>{"R", "P1", "P2", "P3", "P4"}));
    EXPECT_EQ(m.active_players(), (PlayerSet{1, 2, 3, 4}));
    EXPECT_NEAR(m.secret_entropy_bits, 1.0, 1e-12);
    EXPECT_NEAR(m.reference_mutual_bits, 2.0, 1e-12);
    EXPECT_NEAR(mutual_information(m.state, {"R"}, {"P1", "P2", "P3"}), 2.0, 1e-9);
    EXPECT_NEAR(mutual_information(m.state, {"R"}, {"P1", "P2"}), 0.0, 1e-9);
    MixedScheme m2 = discard_share(m, "P4");
    EXPECT_EQ(m2.active_players(), (PlayerSet{1, 2, 3}));
    EXPECT_NEAR(m2.reference_mutual_bits, 2.0, 1e-12);
    EXPECT_THROW(discard_share(s, "R"), std::invalid_argument);
    EXPECT_THROW(discard_share(s, "P9"), std::invalid_argument);
}

}  // namespace
}  // namespace qss
