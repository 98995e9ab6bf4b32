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
 * @file gap_array.hpp
 * @brief Gap arrays and the subspaces C(G) of C_M(J_lambda) they encode.
 *
 * Diagonal convention. In the (i,j)-block of size a x b (a = lambda_i,
 * b = lambda_j), a diagonal that touches both the top row and the rightmost
 * column is indexed by the row t (1 = top) at which it meets the rightmost
 * column; these are t = 1..min(a,b). C(G) keeps the diagonals with
 * t <= a - G_{i,j} free and constant, and everything else zero.
 */

#include "unitri/jordan.hpp"
#include "unitri/matrix.hpp"
#include "unitri/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri {

class GapArray {
public:
    GapArray() = default;

    /// Throws std::invalid_argument unless max(0, l_i - l_j) <= G_ij <= l_i.
    GapArray(Partition type, std::vector<int> cells) : type_(std::move(type)), cells_(std::move(cells)) {
        const auto l = static_cast<std::size_t>(type_.length());
        if (cells_.size() != l * l) throw std::invalid_argument("GapArray: expected an l x l array");
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) {
                const int g = (*this)(i, j);
                if (g < std::max(0, type_[i] - type_[j]) || g > type_[i])
                    throw std::invalid_argument("GapArray: cell (" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ") violates the gap bounds");
            }
    }

    static GapArray from_rows(Partition type, const std::vector<std::vector<int>>& rows) {
        std::vector<int> cells;
        for (const auto& r : rows) cells.insert(cells.end(), r.begin(), r.end());
        return GapArray(std::move(type), std::move(cells));
    }

    const Partition& type() const { return type_; }
    std::size_t length() const { return static_cast<std::size_t>(type_.length()); }
    int operator()(std::size_t i, std::size_t j) const { return cells_[i * length() + j]; }
    const std::vector<int>& cells() const { return cells_; }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(length());
        for (std::size_t i = 0; i < length(); ++i)
            out[i].assign(cells_.begin() + static_cast<std::ptrdiff_t>(i * length()),
                          cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * length()));
        return out;
    }

    /// |G|
    int total() const {
        int s = 0;
        for (int c : cells_) s += c;
        return s;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < length(); ++i) {
            out += "[";
            for (std::size_t j = 0; j < length(); ++j) out += (j ? " " : "") + std::to_string((*this)(i, j));
            out += "]";
        }
        return type_.to_string() + " " + out;
    }

    bool operator==(const GapArray&) const = default;

private:
    Partition type_;
    std::vector<int> cells_;
};

/// G_ij = max(0, l_i - l_j): encodes all of C_M(J_lambda).
inline GapArray min_array(const Partition& lambda) {
    const auto l = static_cast<std::size_t>(lambda.length());
    std::vector<int> cells(l * l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) cells[i * l + j] = std::max(0, lambda[i] - lambda[j]);
    return {lambda, std::move(cells)};
}

/// G_ij = l_i: encodes the zero subspace.
inline GapArray max_array(const Partition& lambda) {
    const auto l = static_cast<std::size_t>(lambda.length());
    std::vector<int> cells(l * l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) cells[i * l + j] = lambda[i];
    return {lambda, std::move(cells)};
}

/// The worst-case array G^lambda.
inline GapArray g_worst(const Partition& lambda) {
    const auto l = static_cast<std::size_t>(lambda.length());
    std::vector<int> cells(l * l, 0);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            if (lambda[i] > lambda[j])
                cells[i * l + j] = lambda[i] - lambda[j];
            else if (lambda[i] == lambda[j] && i <= j)
                cells[i * l + j] = 1;
        }
    return {lambda, std::move(cells)};
}

/// dim C(G) = n l - |G|
inline int subspace_dim(const GapArray& g) { return g.type().size() * g.type().length() - g.total(); }

namespace detail {

inline std::vector<std::size_t> block_offsets(const Partition& lambda) {
    std::vector<std::size_t> off(static_cast<std::size_t>(lambda.length()) + 1, 0);
    for (int i = 0; i < lambda.length(); ++i) off[i + 1] = off[i] + static_cast<std::size_t>(lambda[i]);
    return off;
}

}  // namespace detail

/// Canonical basis of C(G) inside n x n matrices (flattened).
inline Subspace basis(const GapArray& g, const FieldPtr& field) {
    const Partition& lambda = g.type();
    const auto n = static_cast<std::size_t>(lambda.size());
    const auto off = detail::block_offsets(lambda);
    std::vector<Vector> vectors;
    for (std::size_t i = 0; i < g.length(); ++i) {
        for (std::size_t j = 0; j < g.length(); ++j) {
            const int a = lambda[i], b = lambda[j];
            for (int t = 1; t <= a - g(i, j); ++t) {
                Vector v(n * n, 0);
                for (int s = 0; s < t; ++s) {
                    const std::size_t row = off[i] + static_cast<std::size_t>(t - s - 1);
                    const std::size_t col = off[j] + static_cast<std::size_t>(b - s - 1);
                    v[row * n + col] = 1;
                }
                vectors.push_back(std::move(v));
            }
        }
    }
    return Subspace::span(field, n * n, vectors);
}

/// Direct test of the block conditions defining C(G).
inline bool membership(const Matrix& x, const GapArray& g) {
    const Partition& lambda = g.type();
    const auto n = static_cast<std::size_t>(lambda.size());
    if (x.rows() != n || x.cols() != n) throw std::invalid_argument("membership: size mismatch");
    const auto off = detail::block_offsets(lambda);
    for (std::size_t i = 0; i < g.length(); ++i) {
        for (std::size_t j = 0; j < g.length(); ++j) {
            const int a = lambda[i], b = lambda[j];
            for (int u = 1; u <= a; ++u) {
                for (int v = 1; v <= b; ++v) {
                    const elem value = x(off[i] + u - 1, off[j] + v - 1);
                    const int d = v - u;
                    const int t = b - d;  // row where this diagonal meets the right column
                    const bool touches_both = d >= 0 && d <= b - 1 && t <= a;
                    const bool free = touches_both && t <= a - g(i, j);
                    if (!free) {
                        if (value != 0) return false;
                    } else if (u < a && v < b && x(off[i] + u, off[j] + v) != value) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Cellwise G <= H; equivalent to C(H) contained in C(G).
inline bool le(const GapArray& g, const GapArray& h) {
    if (!(g.type() == h.type())) throw std::invalid_argument("le: gap arrays of different types");
    for (std::size_t k = 0; k < g.cells().size(); ++k)
        if (g.cells()[k] > h.cells()[k]) return false;
    return true;
}

/// Row r dominates every lower row; column r is dominated by every later column (1-based r).
inline bool is_r_valid(const GapArray& g, int r) {
    const auto l = g.length();
    if (r < 1 || static_cast<std::size_t>(r) > l) throw std::out_of_range("is_r_valid: r out of range");
    const auto rr = static_cast<std::size_t>(r - 1);
    for (std::size_t j = rr + 1; j < l; ++j)
        for (std::size_t k = 0; k < l; ++k) {
            if (g(j, k) > g(rr, k)) return false;
            if (g(k, rr) > g(k, j)) return false;
        }
    return true;
}

/// Variants of psi_r used by the mutation tests; the defaults give psi_r itself.
struct PsiOptions {
    bool decrement_column = true;
    TieBreak tie = TieBreak::before_equal;
};

struct PsiResult {
    GapArray array;
    std::vector<std::size_t> perm;  ///< old row/column index -> new index (same as phi)
};

/**
 * psi_r for 1 <= r <= l+1: append a zero row and the column (l_1..l_l, 0)
 * when r = l+1, decrement the nonzero cells of column r, increment row r,
 * then move row/column r to the front of its new block size.
 */
inline PsiResult psi(const GapArray& g, int r, const PsiOptions& options = {}) {
    const Partition& lambda = g.type();
    const std::size_t l = g.length();
    if (r < 1 || static_cast<std::size_t>(r) > l + 1) throw std::out_of_range("psi: r out of range");
    std::size_t m = l;
    std::vector<int> work;
    if (static_cast<std::size_t>(r) == l + 1) {
        m = l + 1;
        work.assign(m * m, 0);
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t j = 0; j < l; ++j) work[i * m + j] = g(i, j);
            work[i * m + l] = lambda[i];
        }
    } else {
        work = g.cells();
    }
    const auto rr = static_cast<std::size_t>(r - 1);
    if (options.decrement_column)
        for (std::size_t i = 0; i < m; ++i)
            if (work[i * m + rr] > 0) --work[i * m + rr];
    for (std::size_t j = 0; j < m; ++j) ++work[rr * m + j];

    PhiResult grown = phi(lambda, r, options.tie);
    std::vector<int> cells(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) cells[grown.perm[i] * m + grown.perm[j]] = work[i * m + j];
    return {GapArray(std::move(grown.partition), std::move(cells)), std::move(grown.perm)};
}

/// Calls fn on every gap array of type lambda (cells enumerated row-major).
inline void for_each_gap_array(const Partition& lambda, const std::function<void(const GapArray&)>& fn) {
    const auto l = static_cast<std::size_t>(lambda.length());
    std::vector<int> lo(l * l), hi(l * l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            lo[i * l + j] = std::max(0, lambda[i] - lambda[j]);
            hi[i * l + j] = lambda[i];
        }
    std::vector<int> cells = lo;
    while (true) {
        fn(GapArray(lambda, cells));
        std::size_t k = 0;
        while (k < cells.size() && cells[k] == hi[k]) {
            cells[k] = lo[k];
            ++k;
        }
        if (k == cells.size()) return;
        ++cells[k];
    }
}

/// C_M(J_lambda) computed as the kernel of X -> J X - X J.
inline Subspace jordan_centralizer(const Partition& lambda, const FieldPtr& field) {
    return centralizer(jordan_matrix(lambda, field));
}

}  // namespace unitri
