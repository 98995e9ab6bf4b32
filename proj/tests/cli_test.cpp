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

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
    int status = -1;
    std::string output;
};

/// Runs the CLI with the given arguments; stderr is folded into the output.
CliRun cli(const std::string& args) {
    const std::string command = std::string(UNITRI_CLI) + " " + args + " 2>&1";
    CliRun run;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return run;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) run.output += buf.data();
    const int raw = pclose(pipe);
    run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return run;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string example = std::string(UNITRI_DATA_DIR) + "/conjugation_example_q7.txt";

}  // namespace

TEST(Cli, CensusJson) {
    const CliRun run = cli("census --n 3 --q 2");
    ASSERT_EQ(run.status, 0) << run.output;
    const auto doc = nlohmann::json::parse(run.output);
    EXPECT_EQ(doc.at("schema"), 1);
    EXPECT_EQ(doc.at("class_count"), "5");
    EXPECT_EQ(doc.at("total_comm_pairs"), "40");
}

TEST(Cli, CensusOutputIgnoresWorkerCount) {
    const CliRun one = cli("--workers 1 census --n 4 --q 2 --pairs");
    const CliRun many = cli("--workers 4 census --n 4 --q 2 --pairs");
    ASSERT_EQ(one.status, 0);
    EXPECT_EQ(one.output, many.output);
}

TEST(Cli, AtomicFileOutputAndCsv) {
    const auto dir = std::filesystem::temp_directory_path() / "unitri_cli_test";
    std::filesystem::create_directories(dir);
    const CliRun run = cli("census --n 3 --q 3 --out " + (dir / "c.json").string() + " --csv " + (dir / "c.csv").string());
    ASSERT_EQ(run.status, 0) << run.output;
    EXPECT_EQ(nlohmann::json::parse(slurp(dir / "c.json")).at("class_count"), "11");
    EXPECT_EQ(slurp(dir / "c.csv").substr(0, 20), "lambda,matrices,comm");
    EXPECT_FALSE(std::filesystem::exists(dir / "c.json.tmp"));
    std::filesystem::remove_all(dir);
}

TEST(Cli, JordanizeExampleFile) {
    const CliRun full = cli("jordanize " + example);
    ASSERT_EQ(full.status, 0) << full.output;
    const auto doc = nlohmann::json::parse(full.output);
    EXPECT_EQ(doc.at("lambda"), nlohmann::json({3, 3, 2, 1}));
    EXPECT_TRUE(doc.at("verified").get<bool>());
    EXPECT_EQ(doc.at("levels").size(), 8u);

    const CliRun level = cli("jordanize " + example + " --mu 3,2,2,1");
    ASSERT_EQ(level.status, 0) << level.output;
    const auto trace = nlohmann::json::parse(level.output);
    const auto& delta = trace.at("states").at(1);
    EXPECT_EQ(delta.at("step"), "Delta");
    std::vector<int> column;
    for (const auto& row : delta.at("state")) column.push_back(row.at(8));
    EXPECT_EQ(column, (std::vector<int>{0, 0, 0, 0, 1, 0, 0, 4, 0}));
}

TEST(Cli, LcsCommands) {
    const CliRun verify = cli("lcs-verify --a 2 --b 3 --k 1 --q 2");
    ASSERT_EQ(verify.status, 0) << verify.output;
    EXPECT_TRUE(nlohmann::json::parse(verify.output).at("equal").get<bool>());
    const CliRun cp = cli("lcs-cp --n 4 --k 0 --q 2");
    ASSERT_EQ(cp.status, 0) << cp.output;
    EXPECT_EQ(nlohmann::json::parse(cp.output).at("cp"), "1/4");
}

TEST(Cli, BoundsVerifyPasses) {
    const CliRun run = cli("bounds-verify --nmax 10 --samples 500");
    ASSERT_EQ(run.status, 0) << run.output;
    EXPECT_TRUE(nlohmann::json::parse(run.output).at("passed").get<bool>());
}

TEST(Cli, Interpolate) {
    const CliRun run = cli("interpolate --n 3 --q 2,3,4,5");
    ASSERT_EQ(run.status, 0) << run.output;
    const auto doc = nlohmann::json::parse(run.output);
    EXPECT_EQ(doc.at("polynomial"), "q^2 + q - 1");
    EXPECT_TRUE(doc.at("degree_matches").get<bool>());
    const CliRun short_run = cli("interpolate --n 3 --q 2,3");
    EXPECT_EQ(short_run.status, 2);
    EXPECT_NE(short_run.output.find("--q"), std::string::npos);
}

TEST(Cli, UsageErrorsNameTheFlag) {
    const CliRun bad_q = cli("census --n 3 --q 6");
    EXPECT_EQ(bad_q.status, 2);
    EXPECT_NE(bad_q.output.find("--q"), std::string::npos);
    EXPECT_EQ(cli("census --q 2").status, 2);
    EXPECT_EQ(cli("").status, 2);
    EXPECT_EQ(cli("census --n 3 --q 2 --bogus").status, 2);
    EXPECT_EQ(cli("--workers 0 census --n 3 --q 2").status, 2);
    EXPECT_EQ(cli("jordanize /nonexistent/matrix.txt").status, 2);
}

TEST(Cli, BudgetRefusal) {
    const CliRun refused = cli("--budget 100 census --n 5 --q 2");
    EXPECT_EQ(refused.status, 3);
    EXPECT_NE(refused.output.find("--override-budget"), std::string::npos);
    EXPECT_EQ(cli("--budget 100 --override-budget census --n 5 --q 2").status, 0);
}

TEST(Cli, VerifyAllSubset) {
    const CliRun run = cli("verify-all --only 2,16");
    EXPECT_EQ(run.status, 0) << run.output;
    EXPECT_NE(run.output.find("[PASS]  2"), std::string::npos);
    EXPECT_NE(run.output.find("[SKIP]  1"), std::string::npos);
}
