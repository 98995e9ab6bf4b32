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

// Regenerates fixtures/derived.json from the naive oracles.
//
//   make_fixtures [output.json]

#include "unitri/oracles.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace {

using nlohmann::json;
using unitri::oracle::big;
using unitri::oracle::fraction;

std::string today() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[16];
    std::strftime(buf, sizeof buf, "%Y-%m-%d", std::gmtime(&now));
    return buf;
}

std::string text(const big& v) { return v.str(); }

std::string text(const fraction& v) {
    const big num = numerator(v), den = denominator(v);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string shape_key(const std::vector<int>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
    return out + ")";
}

std::vector<std::vector<int>> partitions(int n, int max_part) {
    if (n == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int first = std::min(n, max_part); first >= 1; --first)
        for (auto rest : partitions(n - first, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

big power(int q, int e) {
    big r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

class Writer {
public:
    explicit Writer(std::string date) : date_(std::move(date)) {}

    void add(const std::string& key, json value, const std::string& oracle, json parameters) {
        entries_.push_back({{"key", key},
                            {"value", std::move(value)},
                            {"provenance", {{"oracle", oracle}, {"parameters", std::move(parameters)}, {"date", date_}}}});
        std::cerr << key << "\n";
    }

    json document() const { return {{"schema", 1}, {"fixtures", entries_}}; }

private:
    std::string date_;
    json entries_ = json::array();
};

}  // namespace

int main(int argc, char** argv) {
    namespace oracle = unitri::oracle;
    const std::filesystem::path out = argc > 1 ? argv[1] : "fixtures/derived.json";
    Writer w(today());

    for (int n = 1; n <= 4; ++n)
        for (int q : {2, 3}) {
            const big comm = oracle::comm_count(n, q);
            w.add("comm_count/n=" + std::to_string(n) + "/q=" + std::to_string(q), text(comm), "comm_count",
                  {{"n", n}, {"q", q}});
        }

    std::vector<std::pair<int, int>> class_points;
    for (int q : {2, 3, 4, 5}) class_points.emplace_back(2, q);
    for (int q : {2, 3, 4, 5}) class_points.emplace_back(3, q);
    for (int q : {2, 3, 4, 5, 7}) class_points.emplace_back(4, q);
    std::map<int, std::vector<std::pair<fraction, fraction>>> samples;
    for (const auto& [n, q] : class_points) {
        const big comm = oracle::comm_count_by_kernels(n, q);
        const big k = comm / power(q, n * (n - 1) / 2);
        if (k * power(q, n * (n - 1) / 2) != comm) throw std::logic_error("oracle Burnside sum not divisible");
        w.add("class_count/n=" + std::to_string(n) + "/q=" + std::to_string(q), text(k), "comm_count_by_kernels",
              {{"n", n}, {"q", q}});
        samples[n].emplace_back(fraction(q), fraction(k));
    }
    for (const auto& [n, points] : samples) {
        json coeffs = json::array();
        for (const auto& c : oracle::fit_polynomial(points)) coeffs.push_back(text(c));
        json qs = json::array();
        for (const auto& p : points) qs.push_back(text(p.first));
        w.add("class_polynomial/n=" + std::to_string(n), coeffs, "fit_polynomial", {{"n", n}, {"q", qs}});
    }

    for (const auto& [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}, {4, 3}}) {
        json table = json::object();
        for (const auto& [shape, count] : oracle::shape_counts(n, q)) table[shape_key(shape)] = text(count);
        w.add("shape_census/n=" + std::to_string(n) + "/q=" + std::to_string(q), table, "shape_counts",
              {{"n", n}, {"q", q}});
    }

    {
        json table = json::object();
        for (int n = 1; n <= 8; ++n)
            for (const auto& shape : partitions(n, n)) table[shape_key(shape)] = text(oracle::syt_count(shape));
        w.add("syt_counts", table, "syt_count", {{"n_max", 8}});
    }

    {
        const oracle::NaiveField f(2);
        json chain = json::object();
        for (int n = 1; n <= 5; ++n)
            chain[std::to_string(n)] = oracle::upper_centralizer_dim(f, oracle::jordan_block_matrix({n}));
        w.add("centralizer_dim_u/single_block/q=2", chain, "upper_centralizer_dim", {{"n_max", 5}, {"q", 2}});
        w.add("centralizer_dim_u/(2,1)/q=2", oracle::upper_centralizer_dim(f, oracle::jordan_block_matrix({2, 1})),
              "upper_centralizer_dim", {{"shape", "(2,1)"}, {"q", 2}});
    }

    {
        json table = json::object();
        for (int a = 1; a <= 6; ++a)
            for (int b = 1; b <= 6; ++b)
                for (const auto& lambda : partitions(a, a))
                    for (const auto& mu : partitions(b, b))
                        table[shape_key(lambda) + "|" + shape_key(mu)] = oracle::jordan_kernel_dim(lambda, mu, 2);
        w.add("jordan_kernel_dims/q=2", table, "jordan_kernel_dim", {{"a_max", 6}, {"b_max", 6}, {"q", 2}});
    }

    for (const auto& [n, k, q] : std::vector<std::tuple<int, int, int>>{
             {4, 0, 2}, {4, 1, 2}, {5, 1, 2}, {6, 1, 2}, {4, 0, 3}, {2, 0, 2}, {2, 1, 2}}) {
        w.add("cp/n=" + std::to_string(n) + "/k=" + std::to_string(k) + "/q=" + std::to_string(q),
              text(oracle::commuting_probability(n, k, q)), "commuting_probability", {{"n", n}, {"k", k}, {"q", q}});
    }

    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        json table = json::array();
        for (const auto& c : oracle::rank_table(a, b, 2)) table.push_back(text(c));
        w.add("rank_table/a=" + std::to_string(a) + "/b=" + std::to_string(b) + "/q=2", table, "rank_table",
              {{"a", a}, {"b", b}, {"q", 2}});
    }

    std::filesystem::create_directories(out.parent_path().empty() ? "." : out.parent_path());
    const auto tmp = out.string() + ".tmp";
    {
        std::ofstream file(tmp);
        file << w.document().dump(2) << "\n";
        if (!file) {
            std::cerr << "cannot write " << tmp << "\n";
            return 1;
        }
    }
    std::filesystem::rename(tmp, out);
    return 0;
}
