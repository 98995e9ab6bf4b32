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

#include <gtest/gtest.h>

using unitri::CensusRecord;
using unitri::EnumerationLimits;
using unitri::Field;
using unitri::Matrix;
using unitri::Partition;
using unitri::bigint;
using unitri::make_field;

TEST(Enumeration, IndexOrderIsRowMajorFirstCoordinateMostSignificant) {
    const auto f = make_field(3);
    const auto coords = unitri::upper_coordinates(4);
    Matrix m(f, 4, 4);
    for (std::uint64_t index = 0; index < 729; ++index) {
        ASSERT_EQ(unitri::upper_matrix_at(f, 4, index), m) << index;
        unitri::detail::advance_upper(m, coords);
    }
    const Matrix one = unitri::upper_matrix_at(f, 3, 1);
    EXPECT_EQ(one(1, 2), 1u);
    EXPECT_EQ(unitri::upper_matrix_at(f, 3, 9)(0, 1), 1u);
}

TEST(Centralizer, Dimensions) {
    const auto f2 = make_field(2);
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(unitri::centralizer_dim_u(Matrix::zero(f2, n, n)), static_cast<std::size_t>(n * (n - 1) / 2));
        EXPECT_EQ(unitri::centralizer_dim_u(unitri::jordan_matrix(Partition{n}, f2)), static_cast<std::size_t>(n - 1));
    }
    EXPECT_EQ(unitri::centralizer_dim_u(unitri::jordan_matrix(Partition{2, 1}, f2)), 2u);
    EXPECT_THROW(unitri::centralizer_dim_u(Matrix::identity(f2, 2)), std::invalid_argument);
}

TEST(Census, ClassCountsOfSmallGroups) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) EXPECT_EQ(unitri::class_count(2, Field::make_order(q)).class_count, q);
    EXPECT_EQ(unitri::class_count(3, make_field(2)).class_count, 5);
    EXPECT_EQ(unitri::class_count(3, make_field(3)).class_count, 11);
    EXPECT_EQ(unitri::class_count(1, make_field(5)).class_count, 1);
}

TEST(Census, ShapeStrata) {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const CensusRecord rec = unitri::class_count(2, Field::make_order(q));
        EXPECT_EQ(rec.per_shape.at(Partition{2}).matrices, q - 1);
        EXPECT_EQ(rec.per_shape.at(Partition{1, 1}).matrices, 1);
        EXPECT_EQ(rec.per_shape.at(Partition{2}).comm, bigint(q - 1) * q);
        EXPECT_EQ(rec.per_shape.at(Partition{1, 1}).comm, q);
    }
    const CensusRecord rec = unitri::class_count(3, make_field(2));
    EXPECT_EQ(rec.per_shape.at(Partition{3}).matrices, 2);
    EXPECT_EQ(rec.per_shape.at(Partition{2, 1}).matrices, 5);
    EXPECT_EQ(rec.per_shape.at(Partition{1, 1, 1}).matrices, 1);
    EXPECT_EQ(rec.total_comm_pairs, 40);
}

TEST(Census, ShapeStratumDegree) {
    std::vector<std::pair<unitri::rational, unitri::rational>> points;
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        points.emplace_back(q, unitri::shape_census(3, Field::make_order(q)).at(Partition{2, 1}));
    EXPECT_EQ(unitri::degree(unitri::interpolate(points)), 3 - unitri::n_stat(Partition{2, 1}));
}

TEST(Census, PairTableIsSymmetric) {
    for (int n = 1; n <= 4; ++n) {
        const CensusRecord rec = unitri::comm_strata(n, make_field(2), true);
        ASSERT_TRUE(rec.per_shape_pair.has_value());
        EXPECT_NO_THROW(unitri::check_census_invariants(rec));
    }
}

TEST(Census, IndependentOfWorkerCount) {
    EnumerationLimits one, many;
    many.workers = 5;
    for (int q : {2, 3}) {
        const auto f = make_field(q);
        const CensusRecord a = unitri::comm_strata(5, f, q == 2, one), b = unitri::comm_strata(5, f, q == 2, many);
        EXPECT_EQ(a.total_comm_pairs, b.total_comm_pairs);
        EXPECT_EQ(a.class_count, b.class_count);
        ASSERT_EQ(a.per_shape.size(), b.per_shape.size());
        for (const auto& [lambda, s] : a.per_shape) {
            EXPECT_EQ(s.matrices, b.per_shape.at(lambda).matrices);
            EXPECT_EQ(s.comm, b.per_shape.at(lambda).comm);
        }
        EXPECT_EQ(a.per_shape_pair, b.per_shape_pair);
    }
}

TEST(Census, BudgetIsEnforced) {
    EnumerationLimits limits;
    limits.budget = 100;
    EXPECT_NO_THROW(unitri::class_count(4, make_field(2), limits));
    EXPECT_THROW(unitri::class_count(5, make_field(2), limits), unitri::BudgetExceeded);
    limits.override_budget = true;
    EXPECT_EQ(unitri::class_count(5, make_field(2), limits).class_count, 61);
}

TEST(Census, InvariantCheckerRejectsTamperedRecords) {
    CensusRecord rec = unitri::class_count(3, make_field(2));
    rec.class_count += 1;
    EXPECT_THROW(unitri::check_census_invariants(rec), std::logic_error);
}

TEST(Bounds, ShapeAndCommutingBoundsAtSmallSizes) {
    for (int n = 1; n <= 4; ++n)
        for (int q : {2, 3}) {
            const CensusRecord rec = unitri::class_count(n, make_field(q));
            EXPECT_TRUE(unitri::check_yip_bound(rec).empty());
            EXPECT_TRUE(unitri::check_h_bound(rec).empty());
            EXPECT_LE(rec.class_count, unitri::class_count_ceiling(n, static_cast<std::uint32_t>(q)));
        }
}

TEST(Bounds, CeilSqrt) {
    EXPECT_EQ(unitri::ceil_sqrt(0), 0);
    EXPECT_EQ(unitri::ceil_sqrt(1), 1);
    EXPECT_EQ(unitri::ceil_sqrt(24), 5);
    EXPECT_EQ(unitri::ceil_sqrt(25), 5);
    EXPECT_EQ(unitri::ceil_sqrt(26), 6);
}

TEST(WorstGap, ContainmentAtSmallSizes) {
    for (int n = 1; n <= 4; ++n)
        for (int q : {2, 3}) {
            const auto report = unitri::verify_worst_gap(n, make_field(q));
            EXPECT_TRUE(report.passed()) << n << "," << q;
            if (n > 1) {
                EXPECT_GT(report.basis_elements, 0u);
            }
        }
}

TEST(Clearing, EqualityAtSmallSizes) {
    for (int n = 2; n <= 4; ++n) {
        const auto report = unitri::verify_clearing_lemma(n, make_field(3));
        EXPECT_TRUE(report.passed()) << n;
        EXPECT_GT(report.checked, 0u);
    }
}

TEST(Interpolation, ClassPolynomials) {
    const auto counts = [](int n, const std::vector<std::uint32_t>& qs) {
        std::vector<bigint> out;
        for (auto q : qs) out.push_back(unitri::class_count(n, Field::make_order(q)).class_count);
        return out;
    };
    const auto two = unitri::interpolate_class_polynomial(2, {2, 3, 4}, counts(2, {2, 3, 4}));
    EXPECT_EQ(unitri::polynomial_to_string(two.coefficients), "q");
    EXPECT_TRUE(two.degree_matches);
    const auto three = unitri::interpolate_class_polynomial(3, {2, 3, 4, 5}, counts(3, {2, 3, 4, 5}));
    EXPECT_EQ(unitri::polynomial_to_string(three.coefficients), "q^2 + q - 1");
    EXPECT_TRUE(three.integer_coefficients && three.overdetermined && three.degree_matches);
    EXPECT_THROW(unitri::interpolate_class_polynomial(3, {2, 3, 4}, counts(3, {2, 3, 4})), std::invalid_argument);
}

TEST(Interpolation, ExpectedDegreeIsNearestInteger) {
    EXPECT_EQ(unitri::expected_class_degree(2), 1);
    EXPECT_EQ(unitri::expected_class_degree(3), 2);
    EXPECT_EQ(unitri::expected_class_degree(4), 3);
    EXPECT_EQ(unitri::expected_class_degree(6), 6);
}
