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

#ifndef QSS_GFIELD_H
#define QSS_GFIELD_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qss {

/// Canonical residue 0..q-1.
using FieldElem = std::uint32_t;
using FieldVector = std::vector<FieldElem>;

inline constexpr std::uint32_t kMaxFieldOrder = 97;

/// Prime field F_q for 2 <= q <= 97.
class PrimeField {
   public:
    explicit PrimeField(std::uint32_t q);

    std::uint32_t order() const { return q_; }
    FieldElem reduce(std::int64_t v) const;
    FieldElem add(FieldElem a, FieldElem b) const { return (a + b) % q_; }
    FieldElem sub(FieldElem a, FieldElem b) const { return (a + q_ - b) % q_; }
    FieldElem neg(FieldElem a) const { return (q_ - a) % q_; }
    FieldElem mul(FieldElem a, FieldElem b) const { return (a * b) % q_; }
    /// Multiplicative inverse; throws on zero.
    FieldElem inv(FieldElem a) const;

    bool operator==(const PrimeField &) const = default;

   private:
    std::uint32_t q_;
};

bool is_prime(std::uint32_t n);

/// Dense row-major matrix over a prime field. A matrix may have zero rows.
class GFMatrix {
   public:
    GFMatrix(PrimeField field, std::size_t rows, std::size_t cols);
    /// Entries are reduced mod q; every row must have `cols` entries.
    GFMatrix(PrimeField field, const std::vector<std::vector<std::int64_t>> &rows, std::size_t cols);

    const PrimeField &field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }
    FieldVector row(std::size_t r) const;

    GFMatrix transpose() const;
    GFMatrix select_rows(const std::vector<std::size_t> &rows) const;
    GFMatrix drop_first_column() const;
    /// M * v for a column vector v of length cols().
    FieldVector apply(std::span<const FieldElem> v) const;
    /// lambda * M for a row vector lambda of length rows().
    FieldVector left_apply(std::span<const FieldElem> lambda) const;

    bool operator==(const GFMatrix &) const = default;

   private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    FieldVector data_;
};

/// Row rank by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(const GFMatrix &m);

/// Coefficients lambda with lambda * M = v, if any exist.
std::optional<FieldVector> in_row_span(const GFMatrix &m, std::span<const FieldElem> v);

bool columns_independent(const GFMatrix &m);

/// All x = (fixed_first, a_1..a_{e-1}) with M x = target, sorted
/// lexicographically. A matrix with no rows imposes no constraint.
std::vector<FieldVector> enumerate_preimage(const GFMatrix &m, FieldElem fixed_first, std::span<const FieldElem> target);

}  // namespace qss

#endif  // QSS_GFIELD_H
