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

#include <random>

#include <gtest/gtest.h>

#include "test_util.h"

namespace qss {
namespace {

const Complex kI(0, 1);

StabilizerCode bit_flip_code() {
    return StabilizerCode{"bit_flip",
                          3,
                          {pauli_parse("ZZI"), pauli_parse("IZZ")},
                          pauli_parse("XXX"),
                          pauli_parse("ZII")};
}

TEST(Pauli, ParseAndPrint) {
    PauliOperator p = pauli_parse("XZZXI");
    EXPECT_EQ(p.n(), 5u);
    EXPECT_EQ(p.weight(), 4u);
    EXPECT_EQ(p.x_bits(), (std::vector<std::uint8_t>{1, 0, 0, 1, 0}));
    EXPECT_EQ(p.z_bits(), (std::vector<std::uint8_t>{0, 1, 1, 0, 0}));
    EXPECT_EQ(pauli_parse("-ZZ").phase(), 2);
    EXPECT_EQ(pauli_parse("+iXY").phase(), 1);
    EXPECT_EQ(pauli_parse("-iZ").phase(), 3);
    for (const char *s : {"XYZI", "-ZZ", "iX", "-iY"}) {
        EXPECT_EQ(pauli_parse(pauli_parse(s).to_string()), pauli_parse(s)) << s;
    }
    EXPECT_THROW(pauli_parse("XQ"), std::invalid_argument);
    EXPECT_THROW(pauli_parse("-"), std::invalid_argument);
}

TEST(Pauli, SingleQubitMatrices) {
    CMatrix y = pauli_parse("Y").matrix();
    EXPECT_EQ(y(0, 1), -kI);
    EXPECT_EQ(y(1, 0), kI);
    CMatrix zx = pauli_parse("ZX").matrix();
    // Position 1 is the most significant qubit: Z (x) X.
    EXPECT_EQ(zx(0, 1), Complex(1));
    EXPECT_EQ(zx(2, 3), Complex(-1));
    EXPECT_EQ(pauli_parse("X").matrix() * pauli_parse("Z").matrix(), -kI * y);
}

TEST(Pauli, ProductIsHomomorphism) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; trial++) {
        const std::size_t n = 1 + rng() % 3;
        PauliOperator p = testing::random_pauli(n, rng);
        PauliOperator q = testing::random_pauli(n, rng);
        PauliOperator pq = p * q;
        EXPECT_LT((pq.matrix() - p.matrix() * q.matrix()).cwiseAbs().maxCoeff(), 1e-14);
        CMatrix comm = p.matrix() * q.matrix() - q.matrix() * p.matrix();
        EXPECT_EQ(commutes(p, q), comm.cwiseAbs().maxCoeff() < 1e-14);
        CVector v = testing::random_vector(std::size_t{1} << n, rng);
        EXPECT_LT((p.apply(v) - p.matrix() * v).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(Pauli, SymplecticRoundTrip) {
    PauliOperator p = pauli_parse("XYZ");
    EXPECT_EQ(p.symplectic(), (std::vector<std::uint8_t>{1, 1, 0, 0, 1, 1}));
    EXPECT_EQ(PauliOperator::from_symplectic(p.symplectic()), p);
    EXPECT_EQ(pauli_parse("-iXY").unsigned_part(), pauli_parse("XY"));
}

TEST(Pauli, Restrict) {
    EXPECT_EQ(restrict(pauli_parse("XZZXI"), {1, 2}), pauli_parse("XZ"));
    EXPECT_EQ(restrict(pauli_parse("XXXXX"), {3}), pauli_parse("X"));
    EXPECT_EQ(restrict(pauli_parse("-XYZ"), {1, 2, 3}), pauli_parse("-XYZ"));
    EXPECT_THROW(restrict(pauli_parse("XX"), {3}), std::out_of_range);
}

TEST(Pauli, Independence) {
    EXPECT_TRUE(independent({pauli_parse("XI"), pauli_parse("IX")}));
    EXPECT_FALSE(independent({pauli_parse("XX"), pauli_parse("ZZ"), pauli_parse("-YY")}));
    EXPECT_EQ(symplectic_rank({pauli_parse("XX"), pauli_parse("ZZ"), pauli_parse("YY")}), 2u);
}

TEST(StabilizerCode, Validation) {
    EXPECT_NO_THROW(StabilizerCode::five_qubit().validate());
    EXPECT_NO_THROW(StabilizerCode::trivial().validate());
    EXPECT_NO_THROW(bit_flip_code().validate());
    StabilizerCode bad = bit_flip_code();
    bad.generators[1] = pauli_parse("XII");
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = bit_flip_code();
    bad.generators[1] = pauli_parse("ZZI");
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = bit_flip_code();
    bad.logical_z = pauli_parse("iZII");
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = bit_flip_code();
    bad.logical_z = pauli_parse("ZZI");
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(StabilizerCode, CodewordsAreStabilized) {
    for (const StabilizerCode &code : {StabilizerCode::five_qubit(), bit_flip_code(), StabilizerCode::trivial()}) {
        auto [zero, one] = codewords(code);
        for (const auto &g : code.generators) {
            EXPECT_LT((g.apply(zero.amplitudes()) - zero.amplitudes()).norm(), 1e-12);
            EXPECT_LT((g.apply(one.amplitudes()) - one.amplitudes()).norm(), 1e-12);
        }
        EXPECT_LT((code.logical_z.apply(zero.amplitudes()) - zero.amplitudes()).norm(), 1e-12);
        EXPECT_LT((code.logical_z.apply(one.amplitudes()) + one.amplitudes()).norm(), 1e-12);
        EXPECT_LT((code.logical_x.apply(zero.amplitudes()) - one.amplitudes()).norm(), 1e-12);
        EXPECT_LT(std::abs(zero.amplitudes().dot(one.amplitudes())), 1e-12);
    }
}

TEST(StabilizerCode, Distance) {
    EXPECT_EQ(code_distance(StabilizerCode::five_qubit()), 3u);
    EXPECT_EQ(code_distance(bit_flip_code()), 1u);
    EXPECT_EQ(code_distance(StabilizerCode::trivial()), 1u);
}

TEST(StabilizerCode, RestrictedGeneratorsStayIndependent) {
    StabilizerCode code = StabilizerCode::five_qubit();
    std::vector<PauliOperator> ops = code.generators;
    ops.push_back(code.logical_x);
    ops.push_back(code.logical_z);
    int pairs = 0;
    for (std::size_t a = 1; a <= 5; a++) {
        for (std::size_t b = a + 1; b <= 5; b++) {
            // Each pair of positions spans the full 4-dimensional local group.
            std::vector<PauliOperator> restricted;
            for (const auto &op : ops) {
                restricted.push_back(restrict(op, {a, b}));
            }
            EXPECT_EQ(symplectic_rank(restricted), 4u) << a << "," << b;
            pairs++;
        }
    }
    EXPECT_EQ(pairs, 10);
    for (std::size_t a = 1; a <= 5; a++) {
        std::vector<PauliOperator> restricted;
        for (const auto &op : ops) {
            restricted.push_back(restrict(op, {a}));
        }
        EXPECT_EQ(symplectic_rank(restricted), 2u);
    }
}

TEST(StabilizerState, ConjugationByRestrictedStabilizer) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; trial++) {
        const std::size_t n = 2 + rng() % 4;
        auto sample = testing::random_stabilizer_state(n, rng);
        PauliOperator w(n);
        for (const auto &g : sample.generators) {
            if (rng() & 1) {
                w = w * g;
            }
        }
        EXPECT_LT((w.apply(sample.state.amplitudes()) - sample.state.amplitudes()).norm(), 1e-10);
        std::vector<std::size_t> keep;
        LabelSet keep_labels;
        for (std::size_t k = 1; k <= n; k++) {
            if (rng() & 1) {
                keep.push_back(k);
                keep_labels.push_back("Q" + std::to_string(k));
            }
        }
        if (keep.empty() || keep.size() == n) {
            continue;
        }
        CMatrix rho = partial_trace(sample.state, keep_labels).matrix();
        CMatrix w2 = restrict(w, keep).matrix();
        EXPECT_LT(max_abs_entry(w2 * rho * w2.adjoint() - rho), 1e-10);
    }
}

}  // namespace
}  // namespace qss
