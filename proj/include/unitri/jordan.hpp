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
 * @file jordan.hpp
 * @brief Jordan types of nilpotent matrices and the canonical conjugator X_A.
 *
 * X_A is built one row/column at a time. At each level the input A' has
 * A'|_{n-1} = J_mu and an arbitrary last column; five conjugations bring it
 * to J_lambda:
 *
 *   E      clear the last column using the superdiagonal 1s of J_mu
 *   Delta  scale the last row/column so the first nonzero entry is 1
 *   L      clear the remaining block-bottom entries below it
 *   sigma  cycle the last index into the extended block
 *   tau    move the grown (or new) block before all blocks of equal size
 *
 * Every level checks the postconditions of each step and throws
 * std::logic_error if one fails.
 */

#include "unitri/matrix.hpp"
#include "unitri/partition.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri {

/// Jordan type of a nilpotent matrix: lambda'_i = rank(a^{i-1}) - rank(a^i).
inline Partition shape(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("shape: matrix is not square");
    const std::size_t n = a.rows();
    std::vector<int> conj;
    std::size_t prev_rank = n;
    Matrix power = Matrix::identity(a.field(), n);
    for (std::size_t i = 1; i <= n; ++i) {
        power = power * a;
        const std::size_t r = power.rank();
        if (r == prev_rank) break;
        conj.push_back(static_cast<int>(prev_rank - r));
        prev_rank = r;
    }
    if (prev_rank != 0) throw std::invalid_argument("shape: matrix is not nilpotent");
    return Partition(std::move(conj)).conjugate();
}

/// 0-based row index of the bottom of each block of mu.
inline std::vector<std::size_t> block_bottoms(const Partition& mu) {
    std::vector<std::size_t> out;
    std::size_t acc = 0;
    for (int part : mu.parts()) {
        acc += static_cast<std::size_t>(part);
        out.push_back(acc - 1);
    }
    return out;
}

struct StepResult {
    Matrix conjugator;  ///< M with state = M * input * M^{-1}
    Matrix state;
};

struct SigmaResult {
    Matrix conjugator;
    Matrix state;
    std::vector<int> block_sizes;  ///< composition after the move
    std::size_t current = 0;       ///< 0-based index of the grown or new block
};

struct TauResult {
    Matrix conjugator;
    Matrix state;
    std::vector<std::size_t> block_perm;  ///< old block index -> new block index
};

namespace detail {

inline void require_leading_jordan(const Matrix& a, const Partition& mu) {
    const std::size_t n = a.rows();
    if (!a.is_square() || n != static_cast<std::size_t>(mu.size()) + 1)
        throw std::invalid_argument("conjugation step: matrix size does not match |mu| + 1");
    if (!(a.restrict(n - 1) == jordan_matrix(mu, a.field())))
        throw std::invalid_argument("conjugation step: leading block is not J_mu");
    for (std::size_t j = 0; j < n; ++j)
        if (a(n - 1, j) != 0) throw std::invalid_argument("conjugation step: last row is not zero");
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("conjugation postcondition violated: " + what);
}

// Topmost nonzero row of the last column, or n-1 if that column is zero.
inline std::size_t first_nonzero_in_last_column(const Matrix& a) {
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (a(i, n - 1) != 0) return i;
    return n - 1;
}

}  // namespace detail

/**
 * E_A = prod_{i=1}^{n-2} E_{i+1,n}(A_{i,n}) (1-based). The factor i = n-1
 * would sit on the diagonal and is omitted; row n-1 is always a block bottom.
 * The factors commute, so E_A = 1 + sum A_{i,n} e_{i+1,n}.
 */
inline StepResult step_E(const Matrix& a, const Partition& mu) {
    detail::require_leading_jordan(a, mu);
    const std::size_t n = a.rows();
    const auto& f = *a.field();
    Matrix e = Matrix::identity(a.field(), n), e_inv = Matrix::identity(a.field(), n);
    for (std::size_t i = 0; i + 2 < n; ++i) {
        e(i + 1, n - 1) = a(i, n - 1);
        e_inv(i + 1, n - 1) = f.neg(a(i, n - 1));
    }
    Matrix state = e * a * e_inv;

    const auto bottoms = block_bottoms(mu);
    std::vector<bool> is_bottom(n, false);
    for (auto b : bottoms) is_bottom[b] = true;
    detail::ensure(state.restrict(n - 1) == a.restrict(n - 1), "E changed the leading block");
    for (std::size_t i = 0; i + 1 < n; ++i)
        detail::ensure(is_bottom[i] || state(i, n - 1) == 0, "E left a non-bottom entry in the last column");
    return {std::move(e), std::move(state)};
}

/// Delta_A = diag(1, ..., 1, x), x the first nonzero entry of the last column (1 if none).
inline StepResult step_Delta(const Matrix& a1) {
    const std::size_t n = a1.rows();
    const auto& f = *a1.field();
    const std::size_t row = detail::first_nonzero_in_last_column(a1);
    const elem x = row + 1 < n ? a1(row, n - 1) : 1;
    Matrix d = Matrix::identity(a1.field(), n), d_inv = Matrix::identity(a1.field(), n);
    d(n - 1, n - 1) = x;
    d_inv(n - 1, n - 1) = f.inv(x);
    Matrix state = d * a1 * d_inv;
    if (row + 1 < n) detail::ensure(state(row, n - 1) == 1, "Delta did not normalize the leading entry");
    return {std::move(d), std::move(state)};
}

/// 1-based index r of the block whose bottom holds the first nonzero entry of
/// the last column; mu.length()+1 when that column is zero.
inline int extended_block(const Matrix& a, const Partition& mu) {
    const std::size_t row = detail::first_nonzero_in_last_column(a);
    const auto bottoms = block_bottoms(mu);
    for (std::size_t s = 0; s < bottoms.size(); ++s)
        if (bottoms[s] == row) return static_cast<int>(s) + 1;
    if (row + 1 == a.rows()) return mu.length() + 1;
    throw std::logic_error("extended_block: leading entry is not at a block bottom");
}

/// F_{j,r}(alpha) = 1 + alpha sum_k e_{tilde mu_{j-1}+k, tilde mu_r - mu_j + k} (1-based j > r).
inline Matrix lower_clearing(const Partition& mu, int j, int r, elem alpha, const FieldPtr& field) {
    if (!(1 <= r && r < j && j <= mu.length())) throw std::out_of_range("lower_clearing: need 1 <= r < j <= l");
    const std::size_t n = static_cast<std::size_t>(mu.size()) + 1;
    const auto bottoms = block_bottoms(mu);
    const std::size_t block_j_start = bottoms[j - 1] + 1 - static_cast<std::size_t>(mu[j - 1]);
    const std::size_t r_end = bottoms[r - 1] + 1;  // tilde mu_r
    Matrix m = Matrix::identity(field, n);
    for (int k = 0; k < mu[j - 1]; ++k)
        m(block_j_start + k, r_end - static_cast<std::size_t>(mu[j - 1]) + k) = alpha;
    return m;
}

/// L_A = prod_{j>r} F_{j,r}(-A_{tilde mu_j, n}); leaves a single 1 in the last column.
inline StepResult step_L(const Matrix& a2, const Partition& mu) {
    const std::size_t n = a2.rows();
    const auto& f = *a2.field();
    const int r = extended_block(a2, mu);
    Matrix l = Matrix::identity(a2.field(), n), l_inv = Matrix::identity(a2.field(), n);
    if (r <= mu.length()) {
        const auto bottoms = block_bottoms(mu);
        // The nilpotent parts of the factors multiply to zero pairwise.
        for (int j = r + 1; j <= mu.length(); ++j) {
            const elem alpha = f.neg(a2(bottoms[j - 1], n - 1));
            if (alpha == 0) continue;
            const Matrix fj = lower_clearing(mu, j, r, alpha, a2.field());
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    if (x == y || fj(x, y) == 0) continue;
                    l(x, y) = f.add(l(x, y), fj(x, y));
                    l_inv(x, y) = f.sub(l_inv(x, y), fj(x, y));
                }
        }
    }
    Matrix state = l * a2 * l_inv;
    detail::ensure(state.restrict(n - 1) == a2.restrict(n - 1), "L changed the leading block");
    if (r <= mu.length()) {
        const auto bottoms = block_bottoms(mu);
        for (std::size_t i = 0; i + 1 < n; ++i)
            detail::ensure(state(i, n - 1) == (i == bottoms[r - 1] ? 1U : 0U), "L did not isolate a single 1");
    }
    return {std::move(l), std::move(state)};
}

/// sigma_A = (tilde mu_r + 1, ..., n), identity when the last column is zero.
inline SigmaResult step_sigma(const Matrix& a3, const Partition& mu) {
    const std::size_t n = a3.rows();
    const int r = extended_block(a3, mu);
    std::vector<std::size_t> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = i;
    std::vector<int> sizes = mu.parts();
    std::size_t current = 0;
    if (r <= mu.length()) {
        const std::size_t start = block_bottoms(mu)[r - 1] + 1;  // 0-based tilde mu_r
        for (std::size_t t = start; t + 1 < n; ++t) w[t] = t + 1;
        w[n - 1] = start;
        ++sizes[r - 1];
        current = static_cast<std::size_t>(r - 1);
    } else {
        sizes.push_back(1);
        current = sizes.size() - 1;
    }
    Matrix s = permutation_matrix(w, a3.field());
    Matrix state = s * a3 * s.transpose();

    // Direct sum of Jordan blocks in the order given by sizes.
    Matrix expected(a3.field(), n, n);
    std::size_t offset = 0;
    for (int b : sizes) {
        for (int t = 0; t + 1 < b; ++t) expected(offset + t, offset + t + 1) = 1;
        offset += static_cast<std::size_t>(b);
    }
    detail::ensure(state == expected, "sigma did not produce a direct sum of Jordan blocks");
    return {std::move(s), std::move(state), std::move(sizes), current};
}

/**
 * tau_A: stable insertion of the current block before the first other block
 * whose size does not exceed it. All other blocks must already be in
 * weakly decreasing order.
 */
inline TauResult step_tau(const Matrix& a4, const std::vector<int>& block_sizes, std::size_t current) {
    if (current >= block_sizes.size()) throw std::out_of_range("step_tau: current block out of range");
    std::vector<std::size_t> others;
    for (std::size_t b = 0; b < block_sizes.size(); ++b)
        if (b != current) others.push_back(b);
    for (std::size_t t = 1; t < others.size(); ++t)
        if (block_sizes[others[t]] > block_sizes[others[t - 1]])
            throw std::invalid_argument("step_tau: more than one block out of order");
    std::size_t slot = 0;
    while (slot < others.size() && block_sizes[others[slot]] > block_sizes[current]) ++slot;

    std::vector<std::size_t> order(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(slot));
    order.push_back(current);
    order.insert(order.end(), others.begin() + static_cast<std::ptrdiff_t>(slot), others.end());

    std::vector<std::size_t> old_offset(block_sizes.size(), 0);
    for (std::size_t b = 1; b < block_sizes.size(); ++b)
        old_offset[b] = old_offset[b - 1] + static_cast<std::size_t>(block_sizes[b - 1]);

    std::vector<std::size_t> w(a4.rows()), block_perm(block_sizes.size());
    std::size_t new_offset = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const std::size_t b = order[pos];
        block_perm[b] = pos;
        for (int t = 0; t < block_sizes[b]; ++t) w[old_offset[b] + t] = new_offset + t;
        new_offset += static_cast<std::size_t>(block_sizes[b]);
    }
    Matrix t = permutation_matrix(w, a4.field());
    Matrix state = t * a4 * t.transpose();
    return {std::move(t), std::move(state), std::move(block_perm)};
}

/// One level of the procedure, applied to A' with A'|_{n-1} = J_mu.
struct ConjugationTrace {
    Partition mu;                  ///< type of the leading (n-1) block
    Partition lambda;              ///< type after this level
    int r = 0;                     ///< 1-based extended block; mu.length()+1 for a new block
    Matrix input;                  ///< A'
    std::array<Matrix, 5> steps;   ///< E, Delta, L, sigma, tau
    std::array<Matrix, 5> states;  ///< A^[1] .. A^[5]
    std::vector<std::size_t> block_perm;

    static constexpr std::array<const char*, 5> labels{"E", "Delta", "L", "sigma", "tau"};

    /// Y = tau sigma L Delta E
    Matrix Y() const { return steps[4] * steps[3] * steps[2] * steps[1] * steps[0]; }
};

inline ConjugationTrace conjugation_level(const Matrix& a, const Partition& mu) {
    auto e = step_E(a, mu);
    auto d = step_Delta(e.state);
    auto l = step_L(d.state, mu);
    const int r = extended_block(l.state, mu);
    auto s = step_sigma(l.state, mu);
    auto t = step_tau(s.state, s.block_sizes, s.current);

    const PhiResult grown = phi(mu, r);
    detail::ensure(t.block_perm == grown.perm, "tau block order differs from phi_r");
    detail::ensure(t.state == jordan_matrix(grown.partition, a.field()), "final state is not J_lambda");

    return ConjugationTrace{mu,
                            grown.partition,
                            r,
                            a,
                            {e.conjugator, d.conjugator, l.conjugator, s.conjugator, t.conjugator},
                            {e.state, d.state, l.state, s.state, t.state},
                            t.block_perm};
}

struct Conjugator {
    Matrix X;
    Partition lambda;
    std::vector<ConjugationTrace> levels;  ///< levels for sizes 2..n
};

/**
 * Canonical X_A with X_A A X_A^{-1} = J_{shape(A)}, for strictly
 * upper-triangular A. Recursion: B = A|_{n-1}, A' = (X_B + 1) A (X_B + 1)^{-1},
 * X_A = Y_{A'} (X_B + 1), with X = (1) for n = 1.
 */
inline Conjugator canonical_conjugator(const Matrix& a) {
    if (!a.is_strictly_upper()) throw std::invalid_argument("canonical_conjugator: matrix is not strictly upper-triangular");
    const std::size_t n = a.rows();
    if (n == 0) throw std::invalid_argument("canonical_conjugator: empty matrix");
    const auto& field = a.field();
    const auto& f = *field;
    Conjugator result{Matrix::identity(field, 1), Partition{1}, {}};
    for (std::size_t k = 2; k <= n; ++k) {
        // (X (+) 1) A|_k (X (+) 1)^{-1} = J_mu with last column X * A[0..k-2, k-1].
        Matrix input = jordan_matrix(result.lambda, field).plus_one();
        input(k - 1, k - 1) = 0;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            elem acc = 0;
            for (std::size_t j = 0; j + 1 < k; ++j) acc = f.add(acc, f.mul(result.X(i, j), a(j, k - 1)));
            input(i, k - 1) = acc;
        }
        ConjugationTrace level = conjugation_level(input, result.lambda);
        result.X = level.Y() * result.X.plus_one();
        result.lambda = level.lambda;
        result.levels.push_back(std::move(level));
    }
    return result;
}

}  // namespace unitri
