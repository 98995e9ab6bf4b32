/*
 * Copyright 2026 The unitri Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact linear algebra over F_q.
 *
 * All indices are 0-based. Matrices acting on matrix spaces use the
 * row-major flattening X(i,j) -> i*cols + j throughout the library.
 */

#include "unitri/field.hpp"
#include "unitri/partition.hpp"

#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri {

using Vector = std::vector<elem>;

namespace detail {

/**
 * In-place reduced row echelon form of a rows x cols block stored row-major.
 * Returns the pivot column of each nonzero row; those rows come first.
 */
inline std::vector<std::size_t> rref_inplace(const Field& f, std::span<elem> data, std::size_t rows,
                                             std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
        std::size_t pr = lead_row;
        while (pr < rows && data[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != lead_row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(data[pr * cols + j], data[lead_row * cols + j]);
        elem* lead = &data[lead_row * cols];
        const elem scale = f.inv(lead[c]);
        if (scale != 1)
            for (std::size_t j = c; j < cols; ++j) lead[j] = f.mul(lead[j], scale);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead_row) continue;
            elem* row = &data[r * cols];
            const elem factor = row[c];
            if (factor == 0) continue;
            const elem nf = f.neg(factor);
            for (std::size_t j = c; j < cols; ++j)
                if (lead[j] != 0) row[j] = f.add(row[j], f.mul(nf, lead[j]));
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

/// Rank by forward elimination only; destroys the buffer.
inline std::size_t rank_inplace(const Field& f, std::span<elem> data, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && data[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(data[pr * cols + j], data[rank * cols + j]);
        const elem* lead = &data[rank * cols];
        const elem inv_lead = f.inv(lead[c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            elem* row = &data[r * cols];
            if (row[c] == 0) continue;
            const elem factor = f.neg(f.mul(row[c], inv_lead));
            for (std::size_t j = c; j < cols; ++j)
                if (lead[j] != 0) row[j] = f.add(row[j], f.mul(factor, lead[j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

class Subspace;

class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
        if (!field_) throw std::invalid_argument("Matrix: null field");
    }

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, Vector data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (!field_) throw std::invalid_argument("Matrix: null field");
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count mismatch");
        for (elem e : data_)
            if (!field_->contains(e)) throw std::invalid_argument("Matrix: entry outside the field");
    }

    /// Row lists given as integers, reduced into the prime subfield when negative.
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows) {
        const std::size_t r = rows.size(), c = r ? rows.front().size() : 0;
        Matrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j) {
                const std::int64_t v = rows[i][j];
                if (v >= 0 && v < static_cast<std::int64_t>(field->q()))
                    m(i, j) = static_cast<elem>(v);
                else
                    m(i, j) = field->from_int(v);
            }
        }
        return m;
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix zero(FieldPtr field, std::size_t rows, std::size_t cols) {
        return Matrix(std::move(field), rows, cols);
    }

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    elem at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::at");
        return data_[i * cols_ + j];
    }

    const Vector& flat() const { return data_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && same_field(o) && data_ == o.data_;
    }

    bool same_field(const Matrix& o) const { return field_ == o.field_ || *field_ == *o.field_; }

    bool is_zero() const {
        for (elem e : data_)
            if (e != 0) return false;
        return true;
    }

    bool is_strictly_upper() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if ((*this)(i, j) != 0) return false;
        return true;
    }

    bool is_unitriangular() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            if ((*this)(i, i) != 1) return false;
            for (std::size_t j = 0; j < i; ++j)
                if ((*this)(i, j) != 0) return false;
        }
        return true;
    }

    bool is_permutation() const {
        if (!is_square()) return false;
        std::vector<int> col_hits(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            int row_hits = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                const elem e = (*this)(i, j);
                if (e == 0) continue;
                if (e != 1) return false;
                ++row_hits;
                ++col_hits[j];
            }
            if (row_hits != 1) return false;
        }
        for (int h : col_hits)
            if (h != 1) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Top-left k x k submatrix, 1 <= k <= n.
    Matrix restrict(std::size_t k) const {
        if (!is_square() || k < 1 || k > rows_) throw std::out_of_range("Matrix::restrict: k out of range");
        Matrix m(field_, k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    /// this (+) [1]: embeds an (n-1)x(n-1) matrix into n x n with a trailing 1.
    Matrix plus_one() const {
        Matrix m(field_, rows_ + 1, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        m(rows_, cols_) = 1;
        return m;
    }

    std::size_t rank() const {
        Vector scratch = data_;
        return detail::rank_inplace(*field_, scratch, rows_, cols_);
    }

    /// Kernel {x : A x = 0} as a subspace of F_q^cols.
    Subspace nullspace() const;

    /// Throws std::domain_error for singular input.
    Matrix inverse() const {
        if (!is_square()) throw std::invalid_argument("Matrix::inverse: not square");
        const std::size_t n = rows_, w = 2 * n;
        Vector aug(n * w, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = (*this)(i, j);
            aug[i * w + n + i] = 1;
        }
        const auto pivots = detail::rref_inplace(*field_, aug, n, w);
        if (pivots.size() < n || pivots[n - 1] != n - 1)
            throw std::domain_error("Matrix::inverse: singular matrix");
        Matrix inv(field_, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i * w + n + j];
        return inv;
    }

    Matrix power(unsigned e) const {
        if (!is_square()) throw std::invalid_argument("Matrix::power: not square");
        Matrix result = identity(field_, rows_);
        for (unsigned i = 0; i < e; ++i) result = result * (*this);
        return result;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
        if (!a.same_field(b)) throw std::invalid_argument("Matrix product: field mismatch");
        const Field& f = *a.field_;
        Matrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const elem x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const elem y = b(k, j);
                    if (y != 0) c(i, j) = f.add(c(i, j), f.mul(x, y));
                }
            }
        }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, false); }
    friend Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, true); }

    Matrix scaled(elem s) const {
        Matrix m = *this;
        for (auto& e : m.data_) e = field_->mul(e, s);
        return m;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
            out << "\n";
        }
        return out.str();
    }

private:
    static Matrix combine(const Matrix& a, const Matrix& b, bool subtract) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix sum: dimension mismatch");
        if (!a.same_field(b)) throw std::invalid_argument("Matrix sum: field mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i)
            c.data_[i] = subtract ? a.field_->sub(a.data_[i], b.data_[i]) : a.field_->add(a.data_[i], b.data_[i]);
        return c;
    }

    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    Vector data_;
};

/**
 * A subspace of F_q^d stored by its reduced row-echelon basis, so equal
 * subspaces have identical stored bases.
 */
class Subspace {
public:
    Subspace(FieldPtr field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

    static Subspace span(FieldPtr field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
        Subspace s(std::move(field), ambient_dim);
        Vector buf;
        buf.reserve(vectors.size() * ambient_dim);
        for (const auto& v : vectors) {
            if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: vector length mismatch");
            buf.insert(buf.end(), v.begin(), v.end());
        }
        s.canonicalize(std::move(buf), vectors.size());
        return s;
    }

    static Subspace full(FieldPtr field, std::size_t ambient_dim) {
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            Vector v(ambient_dim, 0);
            v[i] = 1;
            basis.push_back(std::move(v));
        }
        return span(std::move(field), ambient_dim, basis);
    }

    const FieldPtr& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Basis vectors in reduced echelon order.
    std::vector<Vector> basis() const {
        std::vector<Vector> out;
        for (std::size_t r = 0; r < dim(); ++r)
            out.emplace_back(rows_.begin() + static_cast<std::ptrdiff_t>(r * ambient_),
                             rows_.begin() + static_cast<std::ptrdiff_t>((r + 1) * ambient_));
        return out;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
    }

    bool contains(const Vector& x) const {
        if (x.size() != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
        const Field& f = *field_;
        Vector v = x;
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            const elem c = v[pivots_[r]];
            if (c == 0) continue;
            const elem nc = f.neg(c);
            const elem* row = &rows_[r * ambient_];
            for (std::size_t j = 0; j < ambient_; ++j)
                if (row[j] != 0) v[j] = f.add(v[j], f.mul(nc, row[j]));
        }
        for (elem e : v)
            if (e != 0) return false;
        return true;
    }

    bool contains(const Matrix& x) const { return contains(x.flat()); }

    bool contains(const Subspace& other) const {
        check_same(other);
        for (const auto& v : other.basis())
            if (!contains(v)) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        check_same(other);
        Vector buf = rows_;
        buf.insert(buf.end(), other.rows_.begin(), other.rows_.end());
        Subspace s(field_, ambient_);
        s.canonicalize(std::move(buf), dim() + other.dim());
        return s;
    }

    /// Zassenhaus: reduce [[a, a], [b, 0]]; rows with zero left half span a ∩ b.
    Subspace intersect(const Subspace& other) const {
        check_same(other);
        const std::size_t d = ambient_, w = 2 * d, rows = dim() + other.dim();
        Vector buf(rows * w, 0);
        for (std::size_t r = 0; r < dim(); ++r)
            for (std::size_t j = 0; j < d; ++j) buf[r * w + j] = buf[r * w + d + j] = rows_[r * d + j];
        for (std::size_t r = 0; r < other.dim(); ++r)
            for (std::size_t j = 0; j < d; ++j) buf[(dim() + r) * w + j] = other.rows_[r * d + j];
        const auto piv = detail::rref_inplace(*field_, buf, rows, w);
        std::vector<Vector> vectors;
        for (std::size_t r = 0; r < piv.size(); ++r) {
            if (piv[r] < d) continue;
            vectors.emplace_back(buf.begin() + static_cast<std::ptrdiff_t>(r * w + d),
                                 buf.begin() + static_cast<std::ptrdiff_t>((r + 1) * w));
        }
        return span(field_, d, vectors);
    }

private:
    void check_same(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
        if (field_ != o.field_ && !(*field_ == *o.field_)) throw std::invalid_argument("Subspace: field mismatch");
    }

    void canonicalize(Vector buf, std::size_t nrows) {
        pivots_ = detail::rref_inplace(*field_, buf, nrows, ambient_);
        buf.resize(pivots_.size() * ambient_);
        rows_ = std::move(buf);
    }

    FieldPtr field_;
    std::size_t ambient_;
    std::vector<std::size_t> pivots_;
    Vector rows_;
};

inline Subspace Matrix::nullspace() const {
    Vector scratch = data_;
    const auto pivots = detail::rref_inplace(*field_, scratch, rows_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field_->neg(scratch[r * cols_ + free]);
        basis.push_back(std::move(v));
    }
    return Subspace::span(field_, cols_, basis);
}

inline Matrix unflatten(const FieldPtr& field, std::size_t rows, std::size_t cols, const Vector& v) {
    return Matrix(field, rows, cols, v);
}

/// Block-diagonal nilpotent Jordan matrix with blocks lambda_1, lambda_2, ...
inline Matrix jordan_matrix(const Partition& lambda, const FieldPtr& field) {
    const auto n = static_cast<std::size_t>(lambda.size());
    Matrix j(field, n, n);
    std::size_t offset = 0;
    for (int part : lambda.parts()) {
        for (int t = 0; t + 1 < part; ++t) j(offset + t, offset + t + 1) = 1;
        offset += static_cast<std::size_t>(part);
    }
    return j;
}

/// Identity plus alpha at (i, j); i != j.
inline Matrix transvection(std::size_t i, std::size_t j, elem alpha, std::size_t n, const FieldPtr& field) {
    if (i == j) throw std::invalid_argument("transvection: i == j");
    if (i >= n || j >= n) throw std::out_of_range("transvection: index out of range");
    Matrix t = Matrix::identity(field, n);
    t(i, j) = alpha;
    return t;
}

/// P with P(w[i], i) = 1, so P X P^{-1} moves index i to w[i].
inline Matrix permutation_matrix(const std::vector<std::size_t>& w, const FieldPtr& field) {
    const std::size_t n = w.size();
    std::vector<bool> seen(n, false);
    for (auto x : w) {
        if (x >= n || seen[x]) throw std::invalid_argument("permutation_matrix: not a bijection");
        seen[x] = true;
    }
    Matrix p(field, n, n);
    for (std::size_t i = 0; i < n; ++i) p(w[i], i) = 1;
    return p;
}

/// g X g^{-1} on each basis matrix, re-echelonized. s lives in n x n matrices.
inline Subspace conjugate_subspace(const Subspace& s, const Matrix& g) {
    const std::size_t n = g.rows();
    if (!g.is_square() || s.ambient_dim() != n * n)
        throw std::invalid_argument("conjugate_subspace: ambient mismatch");
    const Matrix g_inv = g.inverse();
    std::vector<Vector> images;
    for (const auto& v : s.basis()) images.push_back((g * Matrix(s.field(), n, n, v) * g_inv).flat());
    return Subspace::span(s.field(), n * n, images);
}

/**
 * overline(V) for V inside (n-1)x(n-1) matrices: X with X|_{n-1} in V, a
 * free last column above the diagonal, and a zero last row.
 */
inline Subspace overline(const Subspace& v, std::size_t n) {
    if (n < 1 || v.ambient_dim() != (n - 1) * (n - 1)) throw std::invalid_argument("overline: ambient mismatch");
    std::vector<Vector> basis;
    for (const auto& b : v.basis()) {
        Vector x(n * n, 0);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j) x[i * n + j] = b[i * (n - 1) + j];
        basis.push_back(std::move(x));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Vector x(n * n, 0);
        x[i * n + n - 1] = 1;
        basis.push_back(std::move(x));
    }
    return Subspace::span(v.field(), n * n, basis);
}

/// T(X) = A X - X B on a x b matrices X, as an (ab) x (ab) matrix in flattened coordinates.
inline Matrix sylvester_operator(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square()) throw std::invalid_argument("sylvester_operator: square inputs required");
    if (!a.same_field(b)) throw std::invalid_argument("sylvester_operator: field mismatch");
    const auto& f = *a.field();
    const std::size_t ra = a.rows(), cb = b.rows(), d = ra * cb;
    Matrix t(a.field(), d, d);
    for (std::size_t p = 0; p < ra; ++p) {
        for (std::size_t q = 0; q < cb; ++q) {
            const std::size_t col = p * cb + q;
            for (std::size_t i = 0; i < ra; ++i)
                if (a(i, p) != 0) t(i * cb + q, col) = f.add(t(i * cb + q, col), a(i, p));
            for (std::size_t j = 0; j < cb; ++j)
                if (b(q, j) != 0) t(p * cb + j, col) = f.sub(t(p * cb + j, col), b(q, j));
        }
    }
    return t;
}

/// C_M(A): all n x n matrices commuting with A.
inline Subspace centralizer(const Matrix& a) { return sylvester_operator(a, a).nullspace(); }

/// Matrix text format: "n m q=<q>" followed by n rows of m encodings.
inline void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << " " << m.cols() << " " << m.field()->name() << "\n" << m.to_string();
}

inline Matrix read_matrix(std::istream& in) {
    std::size_t rows = 0, cols = 0;
    std::string qtok;
    if (!(in >> rows >> cols >> qtok) || qtok.rfind("q=", 0) != 0)
        throw std::runtime_error("read_matrix: expected header 'n m q=<q>'");
    std::int64_t q = 0;
    try {
        q = std::stoll(qtok.substr(2));
    } catch (const std::exception&) {
        throw std::runtime_error("read_matrix: bad field token '" + qtok + "'");
    }
    auto field = Field::make_order(q);
    Vector data(rows * cols);
    for (auto& e : data) {
        std::int64_t v = 0;
        if (!(in >> v)) throw std::runtime_error("read_matrix: truncated matrix body");
        if (v < 0 || v >= q) throw std::runtime_error("read_matrix: entry outside the field");
        e = static_cast<elem>(v);
    }
    return Matrix(field, rows, cols, std::move(data));
}

inline std::string matrix_to_text(const Matrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

inline Matrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

}  // namespace unitri
