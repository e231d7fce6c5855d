/*
 * Copyright 2026 The egrl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file matrix.hpp
 * @brief Dense matrices over a Field with exact elimination.
 *
 * Elimination always pivots on the first nonzero entry at or below the current
 * row (lowest row index wins), so rref() output is reproducible.
 */

#pragma once

#include "egrl/field.hpp"

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace egrl {

class Matrix {
public:
    Matrix() = default;

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw Error(Errc::DimMismatch, "matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                                               std::to_string(rows_ * cols_));
        for (Code c : data_)
            if (!field_->contains(c)) throw Error(Errc::DomainSize, "entry " + std::to_string(c) + " outside field");
    }

    /// Row-major initializer, e.g. Matrix::from_rows(f, {{1, 2}, {3, 4}}).
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Code>>& rows) {
        const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        std::vector<Code> data;
        data.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c) throw Error(Errc::DimMismatch, "ragged rows");
            data.insert(data.end(), row.begin(), row.end());
        }
        return Matrix(std::move(field), r, c, std::move(data));
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Code>& data() const noexcept { return data_; }

    Code& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Code operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Code> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const {
        for (Code c : data_)
            if (c) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && *field_ == *o.field_ && data_ == o.data_;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& b) const {
        if (cols_ != b.rows_)
            throw Error(Errc::DimMismatch, std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                                               std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        check_ctx(b);
        const Field& f = *field_;
        Matrix out(field_, rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Code a = (*this)(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, b(k, j)));
            }
        return out;
    }

    /// Multiplies column j by d[j]; every d[j] must be nonzero.
    Matrix scale_columns(std::span<const Code> d) const {
        if (d.size() != cols_) throw Error(Errc::DimMismatch, "scale vector length != cols");
        Matrix out = *this;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (d[c] == 0) throw Error(Errc::ZeroScale, "column " + std::to_string(c));
            for (std::size_t r = 0; r < rows_; ++r) out(r, c) = field_->mul(out(r, c), d[c]);
        }
        return out;
    }

    /// The listed columns, in order.
    Matrix select_columns(std::span<const std::size_t> idx) const {
        Matrix out(field_, rows_, idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = (*this)(r, idx[c]);
        return out;
    }

    /// Reduced row-echelon form; also reports pivot columns.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const {
        const Field& f = *field_;
        Matrix m = *this;
        std::vector<std::size_t> piv;
        std::size_t lead = 0;
        for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
            std::size_t r = lead;
            while (r < rows_ && m(r, c) == 0) ++r;
            if (r == rows_) continue;
            m.swap_rows(r, lead);
            const Code inv = f.inv(m(lead, c));
            for (std::size_t j = 0; j < cols_; ++j) m(lead, j) = f.mul(m(lead, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == lead || m(i, c) == 0) continue;
                const Code factor = f.neg(m(i, c));
                for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f.add(m(i, j), f.mul(factor, m(lead, j)));
            }
            piv.push_back(c);
            ++lead;
        }
        if (pivots) *pivots = std::move(piv);
        return m;
    }

    std::size_t rank() const {
        std::vector<std::size_t> piv;
        rref(&piv);
        return piv.size();
    }

    Code det() const {
        if (rows_ != cols_) throw Error(Errc::NotSquare, std::to_string(rows_) + "x" + std::to_string(cols_));
        const Field& f = *field_;
        Matrix m = *this;
        Code d = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t r = c;
            while (r < rows_ && m(r, c) == 0) ++r;
            if (r == rows_) return 0;
            if (r != c) {
                m.swap_rows(r, c);
                d = f.neg(d);
            }
            d = f.mul(d, m(c, c));
            const Code inv = f.inv(m(c, c));
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (m(i, c) == 0) continue;
                const Code factor = f.neg(f.mul(m(i, c), inv));
                for (std::size_t j = c; j < cols_; ++j) m(i, j) = f.add(m(i, j), f.mul(factor, m(c, j)));
            }
        }
        return d;
    }

    /// Inverse of a nonsingular square matrix.
    Matrix inverse() const {
        if (rows_ != cols_) throw Error(Errc::NotSquare, "inverse of non-square matrix");
        Matrix aug(field_, rows_, 2 * cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
            aug(r, cols_ + r) = 1;
        }
        std::vector<std::size_t> piv;
        Matrix red = aug.rref(&piv);
        if (piv.size() < rows_ || piv[rows_ - 1] >= cols_) throw Error(Errc::ZeroInverse, "singular matrix");
        Matrix out(field_, rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = red(r, cols_ + c);
        return out;
    }

    /// Basis of the right kernel {x : M x = 0}, one basis vector per row,
    /// ordered by free column ascending.
    Matrix null_space() const {
        std::vector<std::size_t> piv;
        Matrix red = rref(&piv);
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : piv) is_pivot[c] = true;
        Matrix out(field_, cols_ - piv.size(), cols_);
        std::size_t k = 0;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            out(k, fc) = 1;
            for (std::size_t r = 0; r < piv.size(); ++r) out(k, piv[r]) = field_->neg(red(r, fc));
            ++k;
        }
        return out;
    }

    /// Non-zero rows of rref(): a full-rank matrix with the same row space.
    Matrix row_basis() const {
        std::vector<std::size_t> piv;
        Matrix red = rref(&piv);
        Matrix out(field_, piv.size(), cols_);
        std::copy(red.data_.begin(), red.data_.begin() + static_cast<std::ptrdiff_t>(piv.size() * cols_), out.data_.begin());
        return out;
    }

    /// "rows cols" then one row per line, space-separated codes.
    void write(std::ostream& os) const {
        os << rows_ << ' ' << cols_ << '\n';
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
            os << '\n';
        }
    }

    std::string to_string() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }

    static Matrix read(FieldPtr field, std::istream& is) {
        long long r = -1, c = -1;
        if (!(is >> r >> c) || r < 0 || c < 0) throw Error(Errc::ParseError, "matrix header must be 'rows cols'");
        std::vector<Code> data;
        data.reserve(static_cast<std::size_t>(r * c));
        for (long long i = 0; i < r * c; ++i) {
            long long v;
            if (!(is >> v)) throw Error(Errc::ParseError, "matrix truncated after " + std::to_string(i) + " entries");
            if (!field->contains(v)) throw Error(Errc::ParseError, "entry " + std::to_string(v) + " outside field");
            data.push_back(static_cast<Code>(v));
        }
        return Matrix(std::move(field), static_cast<std::size_t>(r), static_cast<std::size_t>(c), std::move(data));
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void check_ctx(const Matrix& o) const {
        if (field_ != o.field_ && !(*field_ == *o.field_)) throw Error(Errc::CtxMismatch, "matrices over different fields");
    }

    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Code> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    m.write(os);
    return os;
}

/// Rows 1, x, ..., x^(n-2), x^n evaluated at the nodes.
inline Matrix vandermonde_skip_matrix(const FieldPtr& f, std::span<const Code> xs) {
    const std::size_t n = xs.size();
    Matrix m(f, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i + 1 < n; ++i) m(i, j) = f->pow(xs[j], static_cast<std::int64_t>(i));
        m(n - 1, j) = f->pow(xs[j], static_cast<std::int64_t>(n));
    }
    return m;
}

/// (sum x_s) * prod_{i<j} (x_j - x_i): the determinant of vandermonde_skip_matrix().
inline Code vandermonde_skip_det(const FieldPtr& f, std::span<const Code> xs) {
    const std::size_t n = xs.size();
    if (n < 2) throw Error(Errc::DimMismatch, "need at least two nodes");
    Code sum = 0, prod = 1;
    for (std::size_t j = 0; j < n; ++j) {
        sum = f->add(sum, xs[j]);
        for (std::size_t i = 0; i < j; ++i) {
            if (xs[i] == xs[j]) throw Error(Errc::DuplicateNodes, "node " + std::to_string(xs[j]) + " repeated");
            prod = f->mul(prod, f->sub(xs[j], xs[i]));
        }
    }
    return f->mul(sum, prod);
}

} // namespace egrl
