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

#ifndef QSS_TENSORLAB_H
#define QSS_TENSORLAB_H

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qss {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Largest total Hilbert-space dimension any layout may have.
inline constexpr std::size_t kMaxTotalDim = std::size_t{1} << 14;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kNegativeEigenTolerance = 1e-10;
inline constexpr double kEigenClip = 1e-12;

struct Subsystem {
    std::string label;
    std::size_t dim = 2;

    bool operator==(const Subsystem &) const = default;
};

/// Labels name subsystems; a LabelSet is read as a set, order is irrelevant.
using LabelSet = std::vector<std::string>;

/// Ordered list of labeled subsystems. The first subsystem is the most
/// significant digit of a flat basis index.
class SystemLayout {
   public:
    SystemLayout() = default;
    explicit SystemLayout(std::vector<Subsystem> subsystems);

    const std::vector<Subsystem> &subsystems() const { return subsystems_; }
    std::size_t size() const { return subsystems_.size(); }
    std::size_t total_dim() const { return total_dim_; }
    std::vector<std::string> labels() const;

    bool contains(std::string_view label) const;
    /// Position of `label`; throws std::invalid_argument when absent.
    std::size_t index_of(std::string_view label) const;
    /// Positions of `labels` sorted into layout order; rejects duplicates.
    std::vector<std::size_t> indices_of(const LabelSet &labels) const;
    /// Sub-layout of the given positions, in the order given.
    SystemLayout select(const std::vector<std::size_t> &positions) const;
    /// Concatenation; throws on label collision.
    SystemLayout concat(const SystemLayout &other) const;

    bool operator==(const SystemLayout &) const = default;

   private:
    std::vector<Subsystem> subsystems_;
    std::size_t total_dim_ = 1;
};

/// Unit vector over a layout.
class PureState {
   public:
    PureState(SystemLayout layout, CVector amplitudes);

    /// Computational basis state; `digits` holds one value per subsystem.
    static PureState basis(SystemLayout layout, const std::vector<std::size_t> &digits);

    const SystemLayout &layout() const { return layout_; }
    const CVector &amplitudes() const { return amplitudes_; }

   private:
    SystemLayout layout_;
    CVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix over a layout.
/// Construction checks hermiticity and trace; positivity is checked when the
/// spectrum is taken.
class DensityOperator {
   public:
    DensityOperator(SystemLayout layout, CMatrix matrix);

    static DensityOperator from_pure(const PureState &state);
    static DensityOperator maximally_mixed(SystemLayout layout);
    static DensityOperator diagonal(SystemLayout layout, const std::vector<double> &probs);

    const SystemLayout &layout() const { return layout_; }
    const CMatrix &matrix() const { return matrix_; }

   private:
    SystemLayout layout_;
    CMatrix matrix_;
};

PureState tensor(const PureState &a, const PureState &b);
DensityOperator tensor(const DensityOperator &a, const DensityOperator &b);

/// Reduced state on `keep`. The result lists the kept subsystems in their
/// original layout order.
DensityOperator partial_trace(const DensityOperator &rho, const LabelSet &keep);
DensityOperator partial_trace(const PureState &state, const LabelSet &keep);

/// Reduced state with the kept subsystems arranged in exactly the order given.
DensityOperator reduced_state_ordered(const DensityOperator &rho, const LabelSet &keep_in_order);
DensityOperator reduced_state_ordered(const PureState &state, const LabelSet &keep_in_order);

/// Eigenvalues in descending order. Values in [-1e-10, 1e-12) are clipped to
/// zero; anything more negative, or a non-Hermitian input, throws.
std::vector<double> eig_hermitian(const CMatrix &matrix);
std::vector<double> eig_hermitian(const DensityOperator &rho);

/// Shannon entropy in bits of a clipped spectrum.
double spectrum_entropy(const std::vector<double> &eigenvalues);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityOperator &rho);

/// Entropy of the reduced state on `labels`. An empty set has entropy 0.
/// For pure states the smaller side of the bipartition is diagonalized.
double subsystem_entropy(const PureState &state, const LabelSet &labels);
double subsystem_entropy(const DensityOperator &rho, const LabelSet &labels);

/// S(A) + S(B) - S(AB) in bits; A and B must be disjoint and nonempty.
double mutual_information(const PureState &state, const LabelSet &a, const LabelSet &b);
double mutual_information(const DensityOperator &rho, const LabelSet &a, const LabelSet &b);

/// Purification sum_i sqrt(l_i) |i>_ref |v_i>. The reference is placed first
/// and has dimension equal to the total dimension of `rho`. Diagonal inputs
/// keep the computational basis (giving sum_i sqrt(a_i)|i>|i>); otherwise the
/// eigenvectors are ordered by descending eigenvalue.
PureState purify(const DensityOperator &rho, const std::string &ref_label);

/// True iff max|rho_AB - rho_A (x) rho_B| < tol, where the partition must
/// cover every label exactly once.
bool is_product(const DensityOperator &rho, const std::pair<LabelSet, LabelSet> &partition, double tol);
bool is_product(const PureState &state, const std::pair<LabelSet, LabelSet> &partition, double tol);

double max_abs_entry(const CMatrix &matrix);
/// |<a|b>|^2 for states on equal layouts.
double fidelity(const PureState &a, const PureState &b);

}  // namespace qss

#endif  // QSS_TENSORLAB_H
