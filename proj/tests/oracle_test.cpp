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

// Main-path results against the independent oracles, and the committed
// fixtures against fresh oracle runs.

#include "unitri/census.hpp"
#include "unitri/fixtures.hpp"
#include "unitri/lcs.hpp"
#include "unitri/oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

namespace oracle = unitri::oracle;
using unitri::Field;
using unitri::Partition;
using unitri::make_field;

TEST(Oracle, CommutingPairsByDoubleEnumeration) {
    EXPECT_EQ(oracle::comm_count(3, 2), 40);
    EXPECT_EQ(oracle::comm_count(2, 3), 9);
    for (int n = 1; n <= 4; ++n)
        for (int q : {2, 3}) {
            EXPECT_EQ(oracle::comm_count(n, q), unitri::class_count(n, make_field(q)).total_comm_pairs) << n << "," << q;
            EXPECT_EQ(oracle::comm_count(n, q), oracle::comm_count_by_kernels(n, q));
        }
}

TEST(Oracle, ShapeCountsByRankSequences) {
    for (const auto& [n, q] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {3, 5}, {4, 2}, {4, 3}, {5, 2}}) {
        const auto naive = oracle::shape_counts(n, q);
        const auto main = unitri::shape_census(n, Field::make_order(q));
        ASSERT_EQ(naive.size(), main.size());
        for (const auto& [shape, count] : naive) EXPECT_EQ(main.at(Partition(shape)), count);
    }
}

TEST(Oracle, UpperCentralizers) {
    for (int q : {2, 3, 4}) {
        const oracle::NaiveField nf(q);
        const auto f = Field::make_order(q);
        for (const auto& a : oracle::upper_matrices(nf, 4)) {
            unitri::Matrix m(f, 4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m(i, j) = static_cast<unitri::elem>(a.at(i, j));
            ASSERT_EQ(static_cast<int>(unitri::centralizer_dim_u(m)), oracle::upper_centralizer_dim(nf, a));
            ASSERT_EQ(unitri::shape(m), Partition(oracle::jordan_type(nf, a)));
        }
    }
}

TEST(Oracle, StandardTableaux) {
    EXPECT_EQ(oracle::syt_count({2, 1}), 2);
    EXPECT_EQ(oracle::syt_count({5}), 1);
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : unitri::partitions_of(n)) EXPECT_EQ(oracle::syt_count(lambda.parts()), unitri::hook_count(lambda));
}

TEST(Oracle, CommutingProbabilities) {
    for (const auto& [n, k, q] : std::vector<std::tuple<int, int, int>>{{3, 0, 2}, {4, 0, 2}, {4, 1, 2}, {5, 1, 2}, {3, 0, 3}, {4, 0, 3}})
        EXPECT_EQ(oracle::commuting_probability(n, k, q), unitri::cp_direct(unitri::LcsParams(n, k, make_field(q))));
}

TEST(Oracle, RankTables) {
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
        const auto naive = oracle::rank_table(a, b, 2);
        const auto main = unitri::n_rank_census(a, b, make_field(2));
        for (const auto& [r, count] : main) EXPECT_EQ(naive.at(static_cast<std::size_t>(r)), count);
    }
}

TEST(Fixtures, EveryEntryCarriesProvenance) {
    const auto doc = unitri::load_json(unitri::fixtures_dir() / "derived.json");
    EXPECT_EQ(doc.at("schema"), 1);
    std::set<std::string> keys;
    for (const auto& entry : doc.at("fixtures")) {
        EXPECT_TRUE(keys.insert(entry.at("key").get<std::string>()).second);
        const auto& prov = entry.at("provenance");
        EXPECT_TRUE(prov.contains("oracle") && prov.contains("parameters") && prov.contains("date"));
    }
    EXPECT_EQ(unitri::load_json(unitri::fixtures_dir() / "reference.json").at("schema"), 1);
}

TEST(Fixtures, CommittedValuesMatchFreshOracleRuns) {
    const auto fx = unitri::FixtureSet::load();
    for (int n = 1; n <= 4; ++n)
        for (int q : {2, 3})
            EXPECT_EQ(unitri::json_bigint(fx.derived("comm_count/n=" + std::to_string(n) + "/q=" + std::to_string(q))),
                      oracle::comm_count(n, q));
    const auto& syt = fx.derived("syt_counts");
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : unitri::partitions_of(n))
            EXPECT_EQ(unitri::json_bigint(syt.at(lambda.to_string())), oracle::syt_count(lambda.parts()));
}

TEST(Fixtures, LoaderRejectsDuplicateKeys) {
    const auto dir = std::filesystem::temp_directory_path() / "unitri_dup_fixture";
    std::filesystem::create_directories(dir);
    std::filesystem::copy_file(unitri::fixtures_dir() / "reference.json", dir / "reference.json",
                               std::filesystem::copy_options::overwrite_existing);
    std::ofstream(dir / "derived.json") << R"({"schema":1,"fixtures":[{"key":"a","value":1},{"key":"a","value":2}]})";
    EXPECT_THROW(unitri::FixtureSet::load(dir), std::runtime_error);
    EXPECT_THROW(unitri::FixtureSet::load(dir / "missing"), std::runtime_error);
    std::filesystem::remove_all(dir);
}

TEST(Fixtures, MatrixRowsWithFractions) {
    const auto f = make_field(7);
    const auto m = unitri::matrix_from_json(unitri::json::array({"0 1/2", "3 -1"}), f);
    EXPECT_EQ(m(0, 1), 4u);
    EXPECT_EQ(m(1, 1), 6u);
}
