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

#include "unitri/partition.hpp"

#include <gtest/gtest.h>

#include <random>

using unitri::Partition;
using unitri::RationalVector;
using unitri::rational;

TEST(Partition, Conjugate) {
    EXPECT_EQ((Partition{3, 2}).conjugate(), (Partition{2, 2, 1}));
    EXPECT_EQ((Partition{4}).conjugate(), (Partition{1, 1, 1, 1}));
    for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : unitri::partitions_of(n)) EXPECT_EQ(lambda.conjugate().conjugate(), lambda);
}

TEST(Partition, RejectsInvalidParts) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_EQ(Partition::from_unsorted({1, 0, 3, 2}), (Partition{3, 2, 1}));
    EXPECT_EQ(Partition::parse("(6,2,1,1)"), (Partition{6, 2, 1, 1}));
    EXPECT_TRUE(Partition::parse("()").empty());
}

TEST(Partition, Statistics) {
    EXPECT_EQ(unitri::n_stat(Partition{1, 1, 1}), 3);
    EXPECT_EQ(unitri::n_stat(Partition{5}), 0);
    EXPECT_EQ(unitri::inner(Partition{2, 1}, Partition{1, 1, 1}), 3);
    EXPECT_EQ(unitri::inner(Partition{2, 1}, Partition{}), 0);
    EXPECT_EQ(unitri::multiplicities(Partition{3, 2, 2, 1}), (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(unitri::multiplicities(Partition{1, 1, 1, 1}), (std::vector<int>{4}));
}

TEST(Partition, StatisticIdentitiesExhaustive) {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : unitri::partitions_of(n)) {
            const Partition conj = lambda.conjugate();
            EXPECT_EQ(2 * unitri::n_stat(lambda), unitri::norm_sq(conj) - n);
            EXPECT_EQ(unitri::n_stat(lambda), unitri::n_stat_by_columns(lambda));
            const auto m = unitri::multiplicities(lambda);
            for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(m[i], conj[i] - conj[i + 1]);
        }
}

TEST(Partition, HookCounts) {
    EXPECT_EQ(unitri::hook_count(Partition{5}), 1);
    EXPECT_EQ(unitri::hook_count(Partition{2, 1}), 2);
    EXPECT_EQ(unitri::hook_count(Partition{3, 2}), 5);
    for (int n = 1; n <= 8; ++n) {
        unitri::bigint sum = 0;
        for (const auto& lambda : unitri::partitions_of(n)) sum += unitri::hook_count(lambda) * unitri::hook_count(lambda);
        EXPECT_EQ(sum, unitri::factorial(static_cast<unsigned>(n)));
    }
}

TEST(Partition, CountsMatchPentagonalRecurrence) {
    std::vector<long long> p(31, 0);
    p[0] = 1;
    for (int n = 1; n <= 30; ++n)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long long sign = k % 2 ? 1 : -1;
            p[n] += sign * p[n - g1];
            if (g2 <= n) p[n] += sign * p[n - g2];
        }
    EXPECT_EQ(unitri::partition_count(0), 1);
    EXPECT_EQ(unitri::partition_count(4), 5);
    EXPECT_EQ(unitri::partition_count(10), 42);
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(unitri::partition_count(n), p[n]) << n;
    for (int n = 0; n <= 14; ++n) EXPECT_EQ(unitri::partitions_of(n).size(), static_cast<std::size_t>(p[n]));
}

TEST(Phi, Examples) {
    EXPECT_EQ(unitri::phi(Partition{3, 2, 2, 1, 1, 1, 1}, 6).partition, (Partition{3, 2, 2, 2, 1, 1, 1}));
    EXPECT_EQ(unitri::phi(Partition{3, 2}, 3).partition, (Partition{3, 2, 1}));
    EXPECT_EQ(unitri::phi(Partition{4}, 1).partition, (Partition{5}));
    EXPECT_EQ(unitri::phi(Partition{}, 1).partition, (Partition{1}));
    EXPECT_THROW(unitri::phi(Partition{2}, 3), std::out_of_range);
}

TEST(Phi, GrownRowLeadsItsSize) {
    const auto res = unitri::phi(Partition{3, 2, 2, 1, 1, 1, 1}, 6);
    EXPECT_EQ(res.perm[5], 1u);
    const auto late = unitri::phi(Partition{3, 2, 2, 1, 1, 1, 1}, 6, unitri::TieBreak::after_equal);
    EXPECT_EQ(late.partition, res.partition);
    EXPECT_EQ(late.perm[5], 3u);
}

TEST(HValue, Examples) {
    EXPECT_EQ(unitri::h_value(RationalVector::from_partition(Partition{1})), 0);
    EXPECT_EQ(unitri::h_value(RationalVector::from_partition(Partition{2, 1})), 3);
    EXPECT_EQ(unitri::h_value(RationalVector::from_partition(Partition{2, 1, 1})), 4);
}

TEST(HValue, IsHomogeneousOfDegreeTwo) {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> part(1, 9), scale(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> parts(1 + trial % 6);
        for (auto& x : parts) x = part(gen);
        const auto v = RationalVector::from_partition(Partition::from_unsorted(parts));
        const rational c(scale(gen), scale(gen));
        EXPECT_EQ(unitri::h_value(v.scaled(c)), c * c * unitri::h_value(v));
    }
}
