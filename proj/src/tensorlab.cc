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

#include "qss/tensorlab.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qss {

namespace {

// Flat-index contribution of every joint value of the subsystems at
// `positions`, enumerated with the first listed position most significant.
std::vector<std::size_t> joint_offsets(const SystemLayout &layout, const std::vector<std::size_t> &positions) {
    const auto &subs = layout.subsystems();
    std::vector<std::size_t> strides(subs.size());
    std::size_t stride = 1;
    for (std::size_t k = subs.size(); k-- > 0;) {
        strides[k] = stride;
        stride *= subs[k].dim;
    }
    std::vector<std::size_t> offsets{0};
    for (std::size_t p : positions) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * subs[p].dim);
        for (std::size_t base : offsets) {
            for (std::size_t v = 0; v < subs[p].dim; v++) {
                next.push_back(base + v * strides[p]);
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

std::vector<std::size_t> complement_positions(std::size_t count, const std::vector<std::size_t> &positions) {
    std::vector<bool> used(count, false);
    for (std::size_t p : positions) {
        used[p] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < count; k++) {
        if (!used[k]) {
            rest.push_back(k);
        }
    }
    return rest;
}

// Positions of `labels` in the order given, rejecting unknown and repeated labels.
std::vector<std::size_t> ordered_positions(const SystemLayout &layout, const LabelSet &labels) {
    std::vector<std::size_t> positions;
    std::set<std::size_t> seen;
    for (const auto &label : labels) {
        std::size_t p = layout.index_of(label);
        if (!seen.insert(p).second) {
            throw std::invalid_argument("label listed twice: " + label);
        }
        positions.push_back(p);
    }
    return positions;
}

DensityOperator reduce_pure(const PureState &state, const std::vector<std::size_t> &keep) {
    const auto &layout = state.layout();
    auto rest = complement_positions(layout.size(), keep);
    auto keep_off = joint_offsets(layout, keep);
    auto rest_off = joint_offsets(layout, rest);
    const CVector &amps = state.amplitudes();
    CMatrix psi(keep_off.size(), rest_off.size());
    for (std::size_t k = 0; k < keep_off.size(); k++) {
        for (std::size_t t = 0; t < rest_off.size(); t++) {
            psi(k, t) = amps(keep_off[k] + rest_off[t]);
        }
    }
    CMatrix rho = psi * psi.adjoint();
    return DensityOperator(layout.select(keep), std::move(rho));
}

DensityOperator reduce_mixed(const DensityOperator &rho, const std::vector<std::size_t> &keep) {
    const auto &layout = rho.layout();
    auto rest = complement_positions(layout.size(), keep);
    auto keep_off = joint_offsets(layout, keep);
    auto rest_off = joint_offsets(layout, rest);
    const CMatrix &m = rho.matrix();
    CMatrix out = CMatrix::Zero(keep_off.size(), keep_off.size());
    for (std::size_t r = 0; r < keep_off.size(); r++) {
        for (std::size_t c = 0; c < keep_off.size(); c++) {
            Complex acc = 0;
            for (std::size_t off : rest_off) {
                acc += m(keep_off[r] + off, keep_off[c] + off);
            }
            out(r, c) = acc;
        }
    }
    return DensityOperator(layout.select(keep), std::move(out));
}

void require_nonempty(const LabelSet &labels, const char *what) {
    if (labels.empty()) {
        throw std::invalid_argument(std::string(what) + ": label set is empty");
    }
}

void require_disjoint(const SystemLayout &layout, const LabelSet &a, const LabelSet &b) {
    require_nonempty(a, "mutual_information");
    require_nonempty(b, "mutual_information");
    auto pa = layout.indices_of(a);
    auto pb = layout.indices_of(b);
    for (std::size_t p : pa) {
        if (std::find(pb.begin(), pb.end(), p) != pb.end()) {
            throw std::invalid_argument("mutual_information: label sets overlap at " + layout.subsystems()[p].label);
        }
    }
}

LabelSet joined(const LabelSet &a, const LabelSet &b) {
    LabelSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void check_partition(const SystemLayout &layout, const std::pair<LabelSet, LabelSet> &partition) {
    require_nonempty(partition.first, "is_product");
    require_nonempty(partition.second, "is_product");
    auto all = ordered_positions(layout, joined(partition.first, partition.second));
    if (all.size() != layout.size()) {
        throw std::invalid_argument("is_product: partition does not cover every subsystem");
    }
}

}  // namespace

SystemLayout::SystemLayout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
    std::set<std::string> seen;
    for (const auto &s : subsystems_) {
        if (s.label.empty()) {
            throw std::invalid_argument("subsystem label must be nonempty");
        }
        if (!seen.insert(s.label).second) {
            throw std::invalid_argument("duplicate subsystem label: " + s.label);
        }
        if (s.dim < 2) {
            throw std::invalid_argument("subsystem " + s.label + " has dimension < 2");
        }
        if (total_dim_ * s.dim > kMaxTotalDim) {
            throw std::invalid_argument("layout exceeds the total dimension budget of 2^14");
        }
        total_dim_ *= s.dim;
    }
}

std::vector<std::string> SystemLayout::labels() const {
    std::vector<std::string> out;
    for (const auto &s : subsystems_) {
        out.push_back(s.label);
    }
    return out;
}

bool SystemLayout::contains(std::string_view label) const {
    return std::any_of(subsystems_.begin(), subsystems_.end(), [&](const Subsystem &s) { return s.label == label; });
}

std::size_t SystemLayout::index_of(std::string_view label) const {
    for (std::size_t k = 0; k < subsystems_.size(); k++) {
        if (subsystems_[k].label == label) {
            return k;
        }
    }
    throw std::invalid_argument("unknown subsystem label: " + std::string(label));
}

std::vector<std::size_t> SystemLayout::indices_of(const LabelSet &labels) const {
    auto positions = ordered_positions(*this, labels);
    std::sort(positions.begin(), positions.end());
    return positions;
}

SystemLayout SystemLayout::select(const std::vector<std::size_t> &positions) const {
    std::vector<Subsystem> out;
    for (std::size_t p : positions) {
        out.push_back(subsystems_.at(p));
    }
    return SystemLayout(std::move(out));
}

SystemLayout SystemLayout::concat(const SystemLayout &other) const {
    std::vector<Subsystem> out = subsystems_;
    out.insert(out.end(), other.subsystems_.begin(), other.subsystems_.end());
    return SystemLayout(std::move(out));
}

PureState::PureState(SystemLayout layout, CVector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != layout_.total_dim()) {
        throw std::invalid_argument("amplitude vector length does not match layout dimension");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

PureState PureState::basis(SystemLayout layout, const std::vector<std::size_t> &digits) {
    if (digits.size() != layout.size()) {
        throw std::invalid_argument("basis: one digit per subsystem required");
    }
    std::size_t index = 0;
    for (std::size_t k = 0; k < digits.size(); k++) {
        if (digits[k] >= layout.subsystems()[k].dim) {
            throw std::invalid_argument("basis: digit out of range");
        }
        index = index * layout.subsystems()[k].dim + digits[k];
    }
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
    amps(static_cast<Eigen::Index>(index)) = 1.0;
    return PureState(std::move(layout), std::move(amps));
}

DensityOperator::DensityOperator(SystemLayout layout, CMatrix matrix)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
    auto dim = static_cast<Eigen::Index>(layout_.total_dim());
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw std::invalid_argument("density matrix side does not match layout dimension");
    }
    if (max_abs_entry(matrix_ - matrix_.adjoint()) > kHermitianTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex(1.0)) > kTraceTolerance) {
        throw std::invalid_argument("density matrix does not have unit trace");
    }
}

DensityOperator DensityOperator::from_pure(const PureState &state) {
    const CVector &v = state.amplitudes();
    return DensityOperator(state.layout(), v * v.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(SystemLayout layout) {
    auto dim = static_cast<Eigen::Index>(layout.total_dim());
    CMatrix m = CMatrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityOperator(std::move(layout), std::move(m));
}

DensityOperator DensityOperator::diagonal(SystemLayout layout, const std::vector<double> &probs) {
    if (probs.size() != layout.total_dim()) {
        throw std::invalid_argument("diagonal: probability vector length mismatch");
    }
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(probs.size()), static_cast<Eigen::Index>(probs.size()));
    for (std::size_t k = 0; k < probs.size(); k++) {
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = probs[k];
    }
    return DensityOperator(std::move(layout), std::move(m));
}

PureState tensor(const PureState &a, const PureState &b) {
    SystemLayout layout = a.layout().concat(b.layout());
    const CVector &u = a.amplitudes();
    const CVector &v = b.amplitudes();
    CVector out(u.size() * v.size());
    for (Eigen::Index i = 0; i < u.size(); i++) {
        out.segment(i * v.size(), v.size()) = u(i) * v;
    }
    return PureState(std::move(layout), std::move(out));
}

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b) {
    SystemLayout layout = a.layout().concat(b.layout());
    return DensityOperator(std::move(layout), kron(a.matrix(), b.matrix()));
}

DensityOperator partial_trace(const DensityOperator &rho, const LabelSet &keep) {
    require_nonempty(keep, "partial_trace");
    return reduce_mixed(rho, rho.layout().indices_of(keep));
}

DensityOperator partial_trace(const PureState &state, const LabelSet &keep) {
    require_nonempty(keep, "partial_trace");
    return reduce_pure(state, state.layout().indices_of(keep));
}

DensityOperator reduced_state_ordered(const DensityOperator &rho, const LabelSet &keep_in_order) {
    require_nonempty(keep_in_order, "reduced_state_ordered");
    return reduce_mixed(rho, ordered_positions(rho.layout(), keep_in_order));
}

DensityOperator reduced_state_ordered(const PureState &state, const LabelSet &keep_in_order) {
    require_nonempty(keep_in_order, "reduced_state_ordered");
    return reduce_pure(state, ordered_positions(state.layout(), keep_in_order));
}

std::vector<double> eig_hermitian(const CMatrix &matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw std::invalid_argument("eig_hermitian: matrix is not square");
    }
    if (max_abs_entry(matrix - matrix.adjoint()) > kHermitianTolerance) {
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eig_hermitian: eigensolver did not converge");
    }
    std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(values.begin(), values.end(), std::greater<>());
    for (double &v : values) {
        if (v < -kNegativeEigenTolerance) {
            throw std::domain_error("eig_hermitian: matrix has a negative eigenvalue " + std::to_string(v));
        }
        if (v < kEigenClip) {
            v = 0.0;
        }
    }
    return values;
}

std::vector<double> eig_hermitian(const DensityOperator &rho) { return eig_hermitian(rho.matrix()); }

double spectrum_entropy(const std::vector<double> &eigenvalues) {
    double h = 0.0;
    for (double v : eigenvalues) {
        if (v > 0.0) {
            h -= v * std::log2(v);
        }
    }
    return std::max(h, 0.0);
}

double von_neumann_entropy(const DensityOperator &rho) { return spectrum_entropy(eig_hermitian(rho)); }

double subsystem_entropy(const PureState &state, const LabelSet &labels) {
    const auto &layout = state.layout();
    auto keep = layout.indices_of(labels);
    if (keep.empty() || keep.size() == layout.size()) {
        return 0.0;
    }
    auto rest = complement_positions(layout.size(), keep);
    std::size_t keep_dim = layout.select(keep).total_dim();
    std::size_t rest_dim = layout.total_dim() / keep_dim;
    // Schmidt symmetry: both sides share the nonzero spectrum.
    return von_neumann_entropy(reduce_pure(state, keep_dim <= rest_dim ? keep : rest));
}

double subsystem_entropy(const DensityOperator &rho, const LabelSet &labels) {
    auto keep = rho.layout().indices_of(labels);
    if (keep.empty()) {
        return 0.0;
    }
    if (keep.size() == rho.layout().size()) {
        return von_neumann_entropy(rho);
    }
    return von_neumann_entropy(reduce_mixed(rho, keep));
}

double mutual_information(const PureState &state, const LabelSet &a, const LabelSet &b) {
    require_disjoint(state.layout(), a, b);
    return subsystem_entropy(state, a) + subsystem_entropy(state, b) - subsystem_entropy(state, joined(a, b));
}

double mutual_information(const DensityOperator &rho, const LabelSet &a, const LabelSet &b) {
    require_disjoint(rho.layout(), a, b);
    return subsystem_entropy(rho, a) + subsystem_entropy(rho, b) - subsystem_entropy(rho, joined(a, b));
}

PureState purify(const DensityOperator &rho, const std::string &ref_label) {
    const CMatrix &m = rho.matrix();
    const Eigen::Index dim = m.rows();
    SystemLayout layout = SystemLayout({{ref_label, static_cast<std::size_t>(dim)}}).concat(rho.layout());

    CMatrix off = m;
    off.diagonal().setZero();
    CVector amps = CVector::Zero(dim * dim);
    if (max_abs_entry(off) < kEigenClip) {
        for (Eigen::Index i = 0; i < dim; i++) {
            double p = std::max(m(i, i).real(), 0.0);
            amps(i * dim + i) = std::sqrt(p);
        }
    } else {
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("purify: eigensolver did not converge");
        }
        for (Eigen::Index i = 0; i < dim; i++) {
            // Eigen returns ascending eigenvalues; reference index 0 gets the largest.
            Eigen::Index src = dim - 1 - i;
            double lambda = solver.eigenvalues()(src);
            if (lambda < -kNegativeEigenTolerance) {
                throw std::domain_error("purify: density matrix has a negative eigenvalue");
            }
            amps.segment(i * dim, dim) = std::sqrt(std::max(lambda, 0.0)) * solver.eigenvectors().col(src);
        }
    }
    amps.normalize();
    return PureState(std::move(layout), std::move(amps));
}

bool is_product(const DensityOperator &rho, const std::pair<LabelSet, LabelSet> &partition, double tol) {
    check_partition(rho.layout(), partition);
    auto whole = reduced_state_ordered(rho, joined(partition.first, partition.second));
    auto left = reduced_state_ordered(rho, partition.first);
    auto right = reduced_state_ordered(rho, partition.second);
    return max_abs_entry(whole.matrix() - kron(left.matrix(), right.matrix())) < tol;
}

bool is_product(const PureState &state, const std::pair<LabelSet, LabelSet> &partition, double tol) {
    return is_product(DensityOperator::from_pure(state), partition, tol);
}

double max_abs_entry(const CMatrix &matrix) {
    return matrix.size() == 0 ? 0.0 : matrix.cwiseAbs().maxCoeff();
}

double fidelity(const PureState &a, const PureState &b) {
    if (!(a.layout() == b.layout())) {
        throw std::invalid_argument("fidelity: layouts differ");
    }
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace qss
