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

#include "unitri/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>

using unitri::Partition;
using unitri::QuadraticNumber;
using unitri::RationalVector;
using unitri::rational;

TEST(QuadraticNumber, FieldOperations) {
    const QuadraticNumber x(1, 1), y(1, -1);
    EXPECT_EQ(x * y, QuadraticNumber(-1));
    EXPECT_EQ(x * x.inverse(), QuadraticNumber(1));
    EXPECT_EQ((x + y) / QuadraticNumber(2), QuadraticNumber(1));
    EXPECT_THROW(QuadraticNumber(0).inverse(), std::domain_error);
}

TEST(QuadraticNumber, SignWithoutFloatingPoint) {
    EXPECT_EQ(QuadraticNumber(3, -2).sign(), 1);
    EXPECT_EQ(QuadraticNumber(-7, 5).sign(), 1);
    EXPECT_EQ(QuadraticNumber(7, -5).sign(), -1);
    EXPECT_EQ(QuadraticNumber(0).sign(), 0);
    const QuadraticNumber close(rational(99, 70), -1);
    EXPECT_NEAR(close.approx(), 99.0 / 70 - std::sqrt(2.0), 1e-15);
    EXPECT_EQ(close.sign(), 1);
}

TEST(HPartial, Examples) {
    EXPECT_EQ(unitri::h_partial(RationalVector::from_partition(Partition{1}), 1), 0);
    EXPECT_EQ(unitri::h_partial(RationalVector::from_partition(Partition{3, 2, 1}), 2), 4);
    EXPECT_THROW(unitri::h_partial(RationalVector::from_partition(Partition{1}), 0), std::out_of_range);
}

TEST(HLemma, HoldsOnSamples) {
    const auto partitions = unitri::check_h_lemma(unitri::conjugate_partition_samples(12));
    EXPECT_TRUE(partitions.passed) << (partitions.witnesses.empty() ? "" : partitions.witnesses.front());
    EXPECT_GT(partitions.checked, 0u);
    const auto random = unitri::check_h_lemma(unitri::random_samples(2000));
    EXPECT_TRUE(random.passed) << (random.witnesses.empty() ? "" : random.witnesses.front());
}

TEST(HLemma, SamplesAreSeeded) {
    const auto a = unitri::random_samples(20, 1), b = unitri::random_samples(20, 1), c = unitri::random_samples(20, 2);
    ASSERT_EQ(a.size(), b.size());
    bool same = true, differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        same = same && a[i].entries() == b[i].entries();
        differs = differs || a[i].entries() != c[i].entries();
    }
    EXPECT_TRUE(same);
    EXPECT_TRUE(differs);
}

TEST(MaxThird, SmallShapes) {
    EXPECT_EQ(unitri::h_int({3}), 0);
    EXPECT_EQ(unitri::h_int({2, 1}), 3);
    EXPECT_TRUE(unitri::check_max_third(24).passed);
}

TEST(WorstArraySize, ClosedForm) {
    const Partition lambda{6, 3, 1, 1, 1};
    EXPECT_EQ(rational(unitri::g_worst(lambda).total()), unitri::g_worst_size_formula(lambda));
    EXPECT_TRUE(unitri::check_g_worst_size(12).passed);
    EXPECT_TRUE(unitri::check_g_exponent_identity(12).passed);
}

TEST(Constants, ExactValues) {
    const auto k = unitri::exponent_constants();
    EXPECT_EQ(k.eps, QuadraticNumber(rational(20, 21), rational(-12, 21)));
    EXPECT_EQ(k.eps, QuadraticNumber(2) * k.delta);
    EXPECT_NEAR(k.alpha.approx(), 4.0 / 49 + 20 * std::sqrt(2.0) / 49, 1e-15);
    const auto report = unitri::check_constants();
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.checked, 8u);
}
