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

#include "qss/gfield.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qss {

namespace {

constexpr std::size_t kMaxPreimageCount = std::size_t{1} << 20;

// Reduced row echelon form in place; returns pivot columns in row order.
std::vector<std::size_t> row_reduce(const PrimeField &f, std::vector<FieldVector> &rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); c++) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        FieldElem inv = f.inv(rows[r][c]);
        for (auto &x : rows[r]) {
            x = f.mul(x, inv);
        }
        for (std::size_t k = 0; k < rows.size(); k++) {
            if (k == r || rows[k][c] == 0) {
                continue;
            }
            FieldElem factor = rows[k][c];
            for (std::size_t j = 0; j < rows[k].size(); j++) {
                rows[k][j] = f.sub(rows[k][j], f.mul(factor, rows[r][j]));
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

struct AffineSolution {
    FieldVector particular;
    std::vector<FieldVector> kernel;
};

// Solutions x of A x = b as particular + span(kernel).
std::optional<AffineSolution> solve_affine(const GFMatrix &a, std::span<const FieldElem> b) {
    const PrimeField &f = a.field();
    const std::size_t n = a.cols();
    std::vector<FieldVector> aug(a.rows(), FieldVector(n + 1));
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = 0; c < n; c++) {
            aug[r][c] = a.at(r, c);
        }
        aug[r][n] = b[r];
    }
    auto pivots = row_reduce(f, aug, n + 1);
    if (!pivots.empty() && pivots.back() == n) {
        return std::nullopt;
    }
    AffineSolution sol;
    sol.particular.assign(n, 0);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < pivots.size(); r++) {
        sol.particular[pivots[r]] = aug[r][n];
        is_pivot[pivots[r]] = true;
    }
    for (std::size_t free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        FieldVector k(n, 0);
        k[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); r++) {
            k[pivots[r]] = f.neg(aug[r][free]);
        }
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint32_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) {
        throw std::invalid_argument("field order " + std::to_string(q) + " is not prime");
    }
    if (q > kMaxFieldOrder) {
        throw std::invalid_argument("field order " + std::to_string(q) + " exceeds 97");
    }
}

FieldElem PrimeField::reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<FieldElem>(r < 0 ? r + q_ : r);
}

FieldElem PrimeField::inv(FieldElem a) const {
    if (a % q_ == 0) {
        throw std::domain_error("inverse of zero");
    }
    // Fermat: a^(q-2).
    FieldElem result = 1;
    FieldElem base = a % q_;
    for (std::uint32_t e = q_ - 2; e > 0; e >>= 1) {
        if (e & 1) {
            result = mul(result, base);
        }
        base = mul(base, base);
    }
    return result;
}

GFMatrix::GFMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

GFMatrix::GFMatrix(PrimeField field, const std::vector<std::vector<std::int64_t>> &rows, std::size_t cols)
    : GFMatrix(field, rows.size(), cols) {
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("matrix row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                        " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; c++) {
            set(r, c, rows[r][c]);
        }
    }
}

FieldVector GFMatrix::row(std::size_t r) const {
    return FieldVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

GFMatrix GFMatrix::transpose() const {
    GFMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            t.data_[c * rows_ + r] = at(r, c);
        }
    }
    return t;
}

GFMatrix GFMatrix::select_rows(const std::vector<std::size_t> &rows) const {
    GFMatrix out(field_, rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); k++) {
        if (rows[k] >= rows_) {
            throw std::out_of_range("select_rows: row index out of range");
        }
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(rows[k] * cols_), cols_,
                    out.data_.begin() + static_cast<std::ptrdiff_t>(k * cols_));
    }
    return out;
}

GFMatrix GFMatrix::drop_first_column() const {
    if (cols_ == 0) {
        throw std::invalid_argument("drop_first_column: matrix has no columns");
    }
    GFMatrix out(field_, rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 1; c < cols_; c++) {
            out.data_[r * (cols_ - 1) + c - 1] = at(r, c);
        }
    }
    return out;
}

FieldVector GFMatrix::apply(std::span<const FieldElem> v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("apply: vector length does not match column count");
    }
    FieldVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out[r] = field_.add(out[r], field_.mul(at(r, c), v[c] % field_.order()));
        }
    }
    return out;
}

FieldVector GFMatrix::left_apply(std::span<const FieldElem> lambda) const {
    if (lambda.size() != rows_) {
        throw std::invalid_argument("left_apply: vector length does not match row count");
    }
    FieldVector out(cols_, 0);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out[c] = field_.add(out[c], field_.mul(lambda[r] % field_.order(), at(r, c)));
        }
    }
    return out;
}

std::size_t rank(const GFMatrix &m) {
    std::vector<FieldVector> rows;
    for (std::size_t r = 0; r < m.rows(); r++) {
        rows.push_back(m.row(r));
    }
    return row_reduce(m.field(), rows, m.cols()).size();
}

std::optional<FieldVector> in_row_span(const GFMatrix &m, std::span<const FieldElem> v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("in_row_span: vector length " + std::to_string(v.size()) +
                                    " does not match column count " + std::to_string(m.cols()));
    }
    FieldVector reduced(v.size());
    for (std::size_t k = 0; k < v.size(); k++) {
        reduced[k] = m.field().reduce(v[k]);
    }
    auto sol = solve_affine(m.transpose(), reduced);
    if (!sol) {
        return std::nullopt;
    }
    return sol->particular;
}

bool columns_independent(const GFMatrix &m) { return rank(m) == m.cols(); }

std::vector<FieldVector> enumerate_preimage(const GFMatrix &m, FieldElem fixed_first, std::span<const FieldElem> target) {
    if (target.size() != m.rows()) {
        throw std::invalid_argument("enumerate_preimage: target length does not match row count");
    }
    if (m.cols() == 0) {
        throw std::invalid_argument("enumerate_preimage: matrix has no columns");
    }
    const PrimeField &f = m.field();
    FieldElem first = f.reduce(fixed_first);

    FieldVector rhs(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        rhs[r] = f.sub(f.reduce(target[r]), f.mul(m.at(r, 0), first));
    }
    GFMatrix rest = m.drop_first_column();
    auto sol = solve_affine(rest, rhs);
    if (!sol) {
        return {};
    }

    std::size_t count = 1;
    for (std::size_t k = 0; k < sol->kernel.size(); k++) {
        count *= f.order();
        if (count > kMaxPreimageCount) {
            throw std::invalid_argument("enumerate_preimage: solution set too large to enumerate");
        }
    }

    std::vector<FieldVector> out;
    out.reserve(count);
    FieldVector coeffs(sol->kernel.size(), 0);
    for (std::size_t step = 0; step < count; step++) {
        FieldVector x(m.cols());
        x[0] = first;
        for (std::size_t j = 0; j + 1 < m.cols(); j++) {
            FieldElem v = sol->particular[j];
            for (std::size_t k = 0; k < coeffs.size(); k++) {
                v = f.add(v, f.mul(coeffs[k], sol->kernel[k][j]));
            }
            x[j + 1] = v;
        }
        out.push_back(std::move(x));
        for (std::size_t k = 0; k < coeffs.size(); k++) {
            if (++coeffs[k] < f.order()) {
                break;
            }
            coeffs[k] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qss
