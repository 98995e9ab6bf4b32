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

#include "unitri/census.hpp"
#include "unitri/fixtures.hpp"
#include "unitri/jordan.hpp"

#include <gtest/gtest.h>

#include <random>

using unitri::Matrix;
using unitri::Partition;
using unitri::jordan_matrix;
using unitri::make_field;

namespace {

/// J_mu padded with a zero last row and column, plus the given last column.
Matrix with_last_column(const Partition& mu, const std::vector<unitri::elem>& column, const unitri::FieldPtr& f) {
    Matrix a = jordan_matrix(mu, f).plus_one();
    const std::size_t n = a.rows();
    a(n - 1, n - 1) = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) a(i, n - 1) = column[i];
    return a;
}

}  // namespace

TEST(Shape, Examples) {
    const auto f = make_field(7);
    EXPECT_EQ(unitri::shape(Matrix::zero(f, 4, 4)), (Partition{1, 1, 1, 1}));
    EXPECT_EQ(unitri::shape(jordan_matrix(Partition{3, 2}, f)), (Partition{3, 2}));
    const Matrix a = with_last_column(Partition{3, 2, 2, 1}, {3, 1, 0, 2, 2, 4, 0, 1}, f);
    EXPECT_EQ(unitri::shape(a), (Partition{3, 3, 2, 1}));
}

TEST(Steps, IdentityOnAZeroLastColumn) {
    const auto f = make_field(5);
    const Partition mu{3, 2, 1};
    const Matrix a = with_last_column(mu, {0, 0, 0, 0, 0, 0}, f);
    const Matrix id = Matrix::identity(f, 7);
    const auto e = unitri::step_E(a, mu);
    EXPECT_EQ(e.conjugator, id);
    EXPECT_EQ(e.state, a);
    EXPECT_EQ(unitri::step_Delta(a).conjugator, id);
    EXPECT_EQ(unitri::step_L(a, mu).conjugator, id);
    const auto s = unitri::step_sigma(a, mu);
    EXPECT_EQ(s.conjugator, id);
    EXPECT_EQ(s.block_sizes, (std::vector<int>{3, 2, 1, 1}));
    EXPECT_EQ(s.current, 3u);
}

TEST(Steps, DeltaLeavesALeadingOneAlone) {
    const auto f = make_field(7);
    const Matrix a = with_last_column(Partition{2, 2}, {0, 1, 0, 0}, f);
    EXPECT_EQ(unitri::step_Delta(a).conjugator, Matrix::identity(f, 5));
}

TEST(Steps, TauSwapsBlocksOutOfOrder) {
    const auto f = make_field(2);
    Matrix composed(f, 5, 5);
    composed(0, 1) = 1;
    composed(2, 3) = 1;
    composed(3, 4) = 1;
    const auto t = unitri::step_tau(composed, {2, 3}, 1);
    EXPECT_EQ(t.block_perm, (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(t.state, jordan_matrix(Partition{3, 2}, f));
}

TEST(Conjugator, ZeroMatrixReversesIndices) {
    const auto f = make_field(3);
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::size_t> w(n);
        for (std::size_t k = 0; k < n; ++k) w[k] = n - 1 - k;
        const auto conj = unitri::canonical_conjugator(Matrix::zero(f, n, n));
        EXPECT_EQ(conj.X, unitri::permutation_matrix(w, f)) << n;
    }
}

TEST(Conjugator, JordanInputsGivePermutations) {
    const auto f = make_field(2);
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : unitri::partitions_of(n)) {
            const auto conj = unitri::canonical_conjugator(jordan_matrix(lambda, f));
            EXPECT_TRUE(conj.X.is_permutation()) << lambda.to_string();
            EXPECT_EQ(conj.lambda, lambda);
        }
}

TEST(Conjugator, RejectsNonNilpotentInput) {
    const auto f = make_field(2);
    EXPECT_THROW(unitri::canonical_conjugator(Matrix::identity(f, 3)), std::invalid_argument);
}

class ConjugatorFields : public ::testing::TestWithParam<int> {};

TEST_P(ConjugatorFields, RandomMatricesReachTheirJordanForm) {
    const auto f = unitri::Field::make_order(GetParam());
    std::mt19937_64 gen(GetParam());
    for (std::size_t n = 1; n <= 8; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            Matrix a(f, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) a(i, j) = static_cast<unitri::elem>(gen() % f->q());
            const auto conj = unitri::canonical_conjugator(a);
            EXPECT_EQ(conj.lambda, unitri::shape(a));
            EXPECT_EQ(conj.X * a * conj.X.inverse(), jordan_matrix(conj.lambda, f));
            EXPECT_EQ(unitri::canonical_conjugator(a).X, conj.X);
            EXPECT_EQ(conj.levels.size(), n - 1);
        }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, ConjugatorFields, ::testing::Values(2, 3, 4, 5, 7));

TEST(WorkedExample, StatesOverTwoFields) {
    const auto fx = unitri::FixtureSet::load(unitri::fixtures_dir());
    const auto& ex = fx.reference("conjugation_example");
    for (int p : {7, 11}) {
        const auto f = make_field(p);
        const auto trace = unitri::conjugation_level(unitri::matrix_from_json(ex.at("input"), f),
                                                     Partition(ex.at("mu").get<std::vector<int>>()));
        for (std::size_t s = 0; s < 5; ++s)
            EXPECT_EQ(trace.states[s], unitri::matrix_from_json(ex.at("states")[s], f)) << "state " << s + 1;
        EXPECT_EQ(trace.states[3], trace.states[4]);
        EXPECT_EQ(trace.lambda, (Partition{3, 3, 2, 1}));
    }
}
