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

// unitri command-line driver.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
// 3 enumeration budget refused.

#include "unitri/bounds.hpp"
#include "unitri/census.hpp"
#include "unitri/fixtures.hpp"
#include "unitri/jordan.hpp"
#include "unitri/lcs.hpp"
#include "unitri/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using unitri::json;

enum Exit : int { pass = 0, failure = 1, usage = 2, budget = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 3;
    int k = 1;
    int a = 2;
    int b = 2;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> q_list;
    std::string budget = "17179869184";
    unsigned workers = unitri::default_workers();
    bool override_budget = false;
    bool pairs = false;
    std::string output_path;
    std::string csv_path;
    std::string matrix_path;
    std::string mu;
    std::string profile = "quick";
    std::vector<int> only;
    int n_max = 16;
    std::uint64_t seed = unitri::default_sample_seed;
    std::size_t samples = 10000;
};

unitri::EnumerationLimits limits_of(const RunConfig& cfg) {
    unitri::EnumerationLimits limits;
    try {
        limits.budget = unitri::bigint(cfg.budget);
    } catch (const std::exception&) {
        throw UsageError("--budget: not a decimal integer: " + cfg.budget);
    }
    limits.override_budget = cfg.override_budget;
    limits.workers = cfg.workers;
    return limits;
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << text;
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void emit(const json& doc, const std::string& path) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty())
        std::cout << text;
    else
        write_atomic(path, text);
}

json rows_of(const unitri::Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json level_json(const unitri::ConjugationTrace& level) {
    json states = json::array();
    for (std::size_t s = 0; s < level.states.size(); ++s)
        states.push_back({{"step", unitri::ConjugationTrace::labels[s]}, {"state", rows_of(level.states[s])}});
    return {{"size", level.input.rows()},
            {"mu", level.mu.parts()},
            {"lambda", level.lambda.parts()},
            {"r", level.r},
            {"input", rows_of(level.input)},
            {"states", states}};
}

std::string text(const unitri::rational& r) { return unitri::to_string(r); }

int run_census(const RunConfig& cfg) {
    const auto field = unitri::Field::make_order(cfg.q);
    const unitri::CensusRecord rec = unitri::comm_strata(cfg.n, field, cfg.pairs, limits_of(cfg));
    unitri::check_census_invariants(rec);
    json shapes = json::array();
    for (const auto& [lambda, s] : rec.per_shape)
        shapes.push_back({{"lambda", lambda.parts()}, {"matrices", s.matrices.str()}, {"comm", s.comm.str()}});
    json doc = {{"schema", 1},
                {"n", rec.n},
                {"q", rec.q},
                {"total_comm_pairs", rec.total_comm_pairs.str()},
                {"class_count", rec.class_count.str()},
                {"per_shape", shapes}};
    if (rec.per_shape_pair) {
        json pairs = json::array();
        for (const auto& [key, count] : *rec.per_shape_pair)
            pairs.push_back({{"lambda", key.first.parts()}, {"mu", key.second.parts()}, {"count", count.str()}});
        doc["per_shape_pair"] = pairs;
    }
    emit(doc, cfg.output_path);
    if (!cfg.csv_path.empty()) {
        std::ostringstream csv;
        csv << "lambda,matrices,comm\n";
        for (const auto& [lambda, s] : rec.per_shape)
            csv << '"' << lambda.to_string() << "\"," << s.matrices << ',' << s.comm << '\n';
        write_atomic(cfg.csv_path, csv.str());
    }
    return pass;
}

int run_jordanize(const RunConfig& cfg) {
    std::ifstream in(cfg.matrix_path);
    if (!in) throw UsageError("MATRIX: cannot open " + cfg.matrix_path);
    const unitri::Matrix a = unitri::read_matrix(in);
    if (a.rows() != a.cols()) throw UsageError("MATRIX: matrix is not square");
    if (!a.is_strictly_upper()) throw UsageError("MATRIX: matrix is not strictly upper-triangular");
    if (!cfg.mu.empty()) {
        unitri::Partition mu;
        try {
            mu = unitri::Partition::parse(cfg.mu);
        } catch (const std::exception& e) {
            throw UsageError("--mu: " + std::string(e.what()));
        }
        const unitri::ConjugationTrace level = unitri::conjugation_level(a, mu);
        const bool ok = level.Y() * a * level.Y().inverse() == unitri::jordan_matrix(level.lambda, a.field());
        json doc = level_json(level);
        doc["schema"] = 1;
        doc["q"] = a.field()->q();
        doc["Y"] = rows_of(level.Y());
        doc["verified"] = ok;
        emit(doc, cfg.output_path);
        return ok ? pass : failure;
    }
    const unitri::Conjugator conj = unitri::canonical_conjugator(a);
    const bool ok = conj.X * a * conj.X.inverse() == unitri::jordan_matrix(conj.lambda, a.field());
    json levels = json::array();
    for (const auto& level : conj.levels) levels.push_back(level_json(level));
    emit({{"schema", 1},
          {"q", a.field()->q()},
          {"n", a.rows()},
          {"lambda", conj.lambda.parts()},
          {"X", rows_of(conj.X)},
          {"verified", ok},
          {"levels", levels}},
         cfg.output_path);
    return ok ? pass : failure;
}

int run_lcs_verify(const RunConfig& cfg) {
    const auto field = unitri::Field::make_order(cfg.q);
    const auto limits = limits_of(cfg);
    const unitri::rational direct = unitri::cp_direct(unitri::LcsParams(cfg.a + cfg.b, cfg.k, field), limits);
    const unitri::rational split = unitri::cp_decomposed(cfg.a, cfg.b, cfg.k, field, limits);
    emit({{"schema", 1},
          {"a", cfg.a},
          {"b", cfg.b},
          {"k", cfg.k},
          {"q", cfg.q},
          {"cp_direct", text(direct)},
          {"cp_decomposed", text(split)},
          {"equal", direct == split}},
         cfg.output_path);
    return direct == split ? pass : failure;
}

int run_lcs_cp(const RunConfig& cfg) {
    const auto field = unitri::Field::make_order(cfg.q);
    const unitri::rational cp = unitri::cp_direct(unitri::LcsParams(cfg.n, cfg.k, field), limits_of(cfg));
    emit({{"schema", 1}, {"n", cfg.n}, {"k", cfg.k}, {"q", cfg.q}, {"cp", text(cp)}}, cfg.output_path);
    return pass;
}

int run_bounds_verify(const RunConfig& cfg) {
    std::vector<unitri::CheckReport> reports{
        unitri::check_constants(),
        unitri::check_h_lemma(unitri::conjugate_partition_samples(cfg.n_max)),
        unitri::check_h_lemma(unitri::random_samples(cfg.samples, cfg.seed)),
        unitri::check_max_third(cfg.n_max),
        unitri::check_g_worst_size(cfg.n_max),
        unitri::check_g_exponent_identity(cfg.n_max),
    };
    reports[1].name += " (conjugate partitions)";
    reports[2].name += " (random vectors)";
    json checks = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.passed;
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"witnesses", r.witnesses}});
    }
    emit({{"schema", 1}, {"nmax", cfg.n_max}, {"seed", cfg.seed}, {"passed", ok}, {"checks", checks}}, cfg.output_path);
    return ok ? pass : failure;
}

int run_interpolate(const RunConfig& cfg) {
    const auto limits = limits_of(cfg);
    std::vector<unitri::bigint> counts;
    json points = json::array();
    for (auto q : cfg.q_list) {
        counts.push_back(unitri::class_count(cfg.n, unitri::Field::make_order(q), limits).class_count);
        points.push_back({{"q", q}, {"class_count", counts.back().str()}});
    }
    unitri::ClassPolynomial poly;
    try {
        poly = unitri::interpolate_class_polynomial(cfg.n, cfg.q_list, counts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--q: ") + e.what());
    }
    json coeffs = json::array();
    for (const auto& c : poly.coefficients) coeffs.push_back(text(c));
    const bool ok = poly.integer_coefficients && poly.overdetermined && poly.degree_matches;
    emit({{"schema", 1},
          {"n", cfg.n},
          {"points", points},
          {"coefficients", coeffs},
          {"polynomial", unitri::polynomial_to_string(poly.coefficients)},
          {"degree", poly.degree},
          {"expected_degree", poly.expected_degree},
          {"integer_coefficients", poly.integer_coefficients},
          {"overdetermined", poly.overdetermined},
          {"degree_matches", poly.degree_matches}},
         cfg.output_path);
    return ok ? pass : failure;
}

int run_verify_all(const RunConfig& cfg) {
    const auto profile = cfg.profile == "full" ? unitri::Profile::full : unitri::Profile::quick;
    const auto fixtures = unitri::FixtureSet::load(unitri::fixtures_dir());
    const std::set<int> only(cfg.only.begin(), cfg.only.end());
    const auto results = unitri::run_acceptance(profile, fixtures, cfg.workers, only);
    json report = json::array();
    bool ok = true;
    for (const auto& r : results) {
        std::cout << unitri::format_result(r) << std::endl;
        if (r.ran) ok = ok && r.passed;
        report.push_back({{"id", r.id}, {"title", r.title}, {"ran", r.ran}, {"passed", r.passed}, {"detail", r.detail}});
    }
    if (!cfg.output_path.empty())
        emit({{"schema", 1}, {"profile", cfg.profile}, {"passed", ok}, {"criteria", report}}, cfg.output_path);
    return ok ? pass : failure;
}

std::string check_prime_power(const std::string& token) {
    try {
        std::size_t used = 0;
        const long long q = std::stoll(token, &used);
        if (used == token.size() && unitri::Field::prime_power(q) && q <= 65536) return {};
    } catch (const std::exception&) {
    }
    return "not a prime power q <= 65536: " + token;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact enumeration and verification for unitriangular groups over finite fields"};
    app.require_subcommand(1);
    app.add_option("--workers", cfg.workers, "worker threads (default: UNITRI_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", cfg.budget, "largest enumeration size run without --override-budget");
    app.add_flag("--override-budget", cfg.override_budget, "run enumerations larger than the budget");

    const CLI::Validator prime_power(check_prime_power, "PRIME_POWER");
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.output_path, "write JSON here instead of stdout"); };

    auto* census = app.add_subcommand("census", "commuting-pair census and class count of U_n(q)");
    census->add_option("--n", cfg.n, "matrix size")->required()->check(CLI::Range(1, 12));
    census->add_option("--q", cfg.q, "field order")->required()->check(prime_power);
    census->add_flag("--pairs", cfg.pairs, "also tabulate comm(lambda, mu)");
    census->add_option("--csv", cfg.csv_path, "write the per-shape table as CSV");
    add_out(census);

    auto* jordanize = app.add_subcommand("jordanize", "canonical Jordan conjugator with its full trace");
    jordanize->add_option("MATRIX", cfg.matrix_path, "matrix file ('n n q=<q>' then rows)")->required();
    jordanize->add_option("--mu", cfg.mu, "run one level, given the type of the leading block, e.g. 3,2,2,1");
    add_out(jordanize);

    auto* lcs_verify = app.add_subcommand("lcs-verify", "compare both sides of the block decomposition identity");
    lcs_verify->add_option("--a", cfg.a, "upper-left block size")->required()->check(CLI::Range(1, 8));
    lcs_verify->add_option("--b", cfg.b, "lower-right block size")->required()->check(CLI::Range(1, 8));
    lcs_verify->add_option("--k", cfg.k, "lower central series index")->required()->check(CLI::Range(0, 16));
    lcs_verify->add_option("--q", cfg.q, "field order")->required()->check(prime_power);
    add_out(lcs_verify);

    auto* lcs_cp = app.add_subcommand("lcs-cp", "commuting probability of U_{n,k}(q)");
    lcs_cp->add_option("--n", cfg.n, "matrix size")->required()->check(CLI::Range(1, 12));
    lcs_cp->add_option("--k", cfg.k, "lower central series index")->required()->check(CLI::Range(0, 16));
    lcs_cp->add_option("--q", cfg.q, "field order")->required()->check(prime_power);
    add_out(lcs_cp);

    auto* bounds = app.add_subcommand("bounds-verify", "check the exponent constants and the h inequalities");
    bounds->add_option("--nmax", cfg.n_max, "largest partition size sampled")->check(CLI::Range(1, 40));
    bounds->add_option("--seed", cfg.seed, "seed for the random vector samples");
    bounds->add_option("--samples", cfg.samples, "number of random vector samples");
    add_out(bounds);

    auto* interpolate = app.add_subcommand("interpolate", "fit k(U_n(q)) as a polynomial in q");
    interpolate->add_option("--n", cfg.n, "matrix size")->required()->check(CLI::Range(1, 8));
    interpolate->add_option("--q", cfg.q_list, "comma-separated field orders")
        ->required()
        ->delimiter(',')
        ->check(prime_power);
    add_out(interpolate);

    auto* verify_all = app.add_subcommand("verify-all", "run the acceptance criteria");
    verify_all->add_option("--profile", cfg.profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify_all->add_option("--only", cfg.only, "run only these criterion ids")->delimiter(',')->check(CLI::Range(1, 17));
    add_out(verify_all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? pass : usage;
    }

    try {
        if (census->parsed()) return run_census(cfg);
        if (jordanize->parsed()) return run_jordanize(cfg);
        if (lcs_verify->parsed()) return run_lcs_verify(cfg);
        if (lcs_cp->parsed()) return run_lcs_cp(cfg);
        if (bounds->parsed()) return run_bounds_verify(cfg);
        if (interpolate->parsed()) return run_interpolate(cfg);
        if (verify_all->parsed()) return run_verify_all(cfg);
    } catch (const unitri::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\nhint: raise --budget or pass --override-budget\n";
        return budget;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\nhint: run with --help for usage\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\nhint: run with --help for usage\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return usage;
}
