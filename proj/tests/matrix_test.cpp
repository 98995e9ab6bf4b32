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

#include "unitri/matrix.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

using unitri::Matrix;
using unitri::Partition;
using unitri::Subspace;
using unitri::jordan_matrix;
using unitri::make_field;

Matrix m(const unitri::FieldPtr& f, std::vector<std::vector<std::int64_t>> rows) { return Matrix::from_rows(f, rows); }

}  // namespace

TEST(Matrix, ProductsAndIdentities) {
    const auto f2 = make_field(2);
    const Matrix j2 = jordan_matrix(Partition{2}, f2);
    EXPECT_TRUE((j2 * j2).is_zero());
    const Matrix a = m(f2, {{1, 1}, {0, 1}});
    EXPECT_EQ(Matrix::identity(f2, 2) * a, a);
    EXPECT_EQ(a * a, Matrix::identity(f2, 2));
}

TEST(Matrix, RankAndNullspace) {
    const auto f = make_field(3);
    EXPECT_EQ(jordan_matrix(Partition{3}, f).rank(), 2u);
    EXPECT_EQ(jordan_matrix(Partition{3, 2}, f).rank(), 3u);
    EXPECT_EQ(Matrix::zero(f, 4, 4).nullspace().dim(), 4u);
    const Matrix a = m(f, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(a.rank() + a.nullspace().dim(), 3u);
}

TEST(Matrix, InverseRoundTrips) {
    const auto f = make_field(2, 2);
    const Matrix a = m(f, {{1, 2, 3}, {0, 1, 2}, {0, 0, 1}});
    EXPECT_EQ(a * a.inverse(), Matrix::identity(f, 3));
    EXPECT_THROW(Matrix::zero(f, 2, 2).inverse(), std::domain_error);
}

TEST(Matrix, JordanMatrixDisplay) {
    const auto f = make_field(5);
    const Matrix expected = m(f, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}});
    EXPECT_EQ(jordan_matrix(Partition{3, 2}, f), expected);
    EXPECT_TRUE(jordan_matrix(Partition{1, 1, 1}, f).is_zero());
    EXPECT_EQ(jordan_matrix(Partition{3, 2}, f).restrict(3), jordan_matrix(Partition{3}, f));
    EXPECT_EQ(jordan_matrix(Partition{3, 2}, f).restrict(4), jordan_matrix(Partition{3, 1}, f));
    EXPECT_EQ(jordan_matrix(Partition{3, 2}, f).restrict(5), jordan_matrix(Partition{3, 2}, f));
}

TEST(Matrix, Transvections) {
    const auto f2 = make_field(2);
    EXPECT_EQ(unitri::transvection(0, 1, 1, 2, f2), m(f2, {{1, 1}, {0, 1}}));
    const auto f7 = make_field(7);
    EXPECT_EQ(unitri::transvection(1, 3, 0, 4, f7), Matrix::identity(f7, 4));
    EXPECT_EQ(unitri::transvection(1, 3, 5, 4, f7) * unitri::transvection(1, 3, f7->neg(5), 4, f7),
              Matrix::identity(f7, 4));
}

TEST(Matrix, PermutationMatrices) {
    const auto f = make_field(3);
    EXPECT_EQ(unitri::permutation_matrix({0, 1, 2}, f), Matrix::identity(f, 3));
    EXPECT_EQ(unitri::permutation_matrix({1, 0}, f), m(f, {{0, 1}, {1, 0}}));
    const std::vector<std::size_t> w{2, 0, 1, 3}, v{1, 3, 0, 2};
    std::vector<std::size_t> wv(4);
    for (std::size_t i = 0; i < 4; ++i) wv[i] = w[v[i]];
    EXPECT_EQ(unitri::permutation_matrix(w, f) * unitri::permutation_matrix(v, f), unitri::permutation_matrix(wv, f));
    EXPECT_THROW(unitri::permutation_matrix({0, 0}, f), std::invalid_argument);
}

TEST(Subspace, OverlineAddsTheLastColumn) {
    const auto f = make_field(2);
    const Subspace zero = Subspace::span(f, 4, {});
    EXPECT_EQ(unitri::overline(zero, 3).dim(), 2u);
    const Subspace u2 = Subspace::span(f, 4, {{0, 1, 0, 0}});
    const Subspace over = unitri::overline(u2, 3);
    EXPECT_EQ(over.dim(), 3u);
    const Subspace u3 = Subspace::span(f, 9, {{0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 0},
                                              {0, 0, 0, 0, 0, 1, 0, 0, 0}});
    EXPECT_EQ(over, u3);
}

TEST(Subspace, LatticeOperations) {
    const auto f = make_field(3);
    const Subspace v = Subspace::span(f, 3, {{1, 2, 0}, {0, 1, 1}});
    const Subspace zero = Subspace::span(f, 3, {});
    EXPECT_EQ(v.sum(v), v);
    EXPECT_EQ(v.intersect(zero), zero);
    EXPECT_TRUE(v.contains(unitri::Vector{1, 0, 1}));
    EXPECT_FALSE(v.contains(unitri::Vector{0, 0, 1}));
    const Subspace w = Subspace::span(f, 3, {{0, 0, 1}});
    EXPECT_EQ(v.sum(w).dim(), 3u);
    EXPECT_EQ(v.intersect(w).dim(), 0u);
}

TEST(Subspace, ConjugationByPermutation) {
    const auto f = make_field(2);
    const Matrix p = unitri::permutation_matrix({1, 0}, f);
    const Subspace upper = Subspace::span(f, 4, {{0, 1, 0, 0}});
    const Subspace lower = Subspace::span(f, 4, {{0, 0, 1, 0}});
    EXPECT_EQ(unitri::conjugate_subspace(upper, p), lower);
}

TEST(Sylvester, KernelOfJordanPairs) {
    const auto f = make_field(2);
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            const Matrix t = unitri::sylvester_operator(jordan_matrix(Partition{a}, f), jordan_matrix(Partition{b}, f));
            EXPECT_EQ(t.nullspace().dim(), static_cast<std::size_t>(std::min(a, b))) << a << "," << b;
        }
    const Matrix zero = Matrix::zero(f, 3, 3);
    EXPECT_EQ(unitri::sylvester_operator(zero, zero).nullspace().dim(), 9u);
}

TEST(MatrixText, RoundTrip) {
    const auto f = make_field(7);
    const Matrix a = m(f, {{0, 3, 6}, {0, 0, 1}, {0, 0, 0}});
    EXPECT_EQ(unitri::matrix_from_text(unitri::matrix_to_text(a)), a);
    std::istringstream bad("2 2 q=6\n0 1\n0 0\n");
    EXPECT_THROW(unitri::read_matrix(bad), std::invalid_argument);
    std::istringstream truncated("2 2 q=7\n0 1\n0\n");
    EXPECT_THROW(unitri::read_matrix(truncated), std::runtime_error);
}
