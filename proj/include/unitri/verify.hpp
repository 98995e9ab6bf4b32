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
 * @file verify.hpp
 * @brief The numbered acceptance criteria, each an exact check against the
 * committed fixtures. The quick profile runs the cheap criteria; the full
 * profile runs all of them.
 */

#include "unitri/bounds.hpp"
#include "unitri/census.hpp"
#include "unitri/fixtures.hpp"
#include "unitri/gap_array.hpp"
#include "unitri/jordan.hpp"
#include "unitri/lcs.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace unitri {

enum class Profile { quick, full };

struct Outcome {
    bool passed = true;
    std::string detail;

    /// Records a failed expectation; keeps the first message.
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (passed) detail = what;
        passed = false;
    }
};

struct Criterion {
    int id = 0;
    std::string title;
    bool quick = false;
    std::function<Outcome(const FixtureSet&, Profile, unsigned)> run;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool ran = false;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

inline Partition partition_from_json(const json& v) { return Partition(v.get<std::vector<int>>()); }

inline GapArray gap_from_json(const json& type, const json& rows) {
    return GapArray::from_rows(partition_from_json(type), rows.get<std::vector<std::vector<int>>>());
}

inline Outcome gap_example(const FixtureSet& fx) {
    Outcome out;
    const json& ex = fx.reference("gap_example");
    const GapArray g = gap_from_json(ex.at("type"), ex.at("array"));
    const int dim = ex.at("dim");
    out.expect(subspace_dim(g) == dim, "subspace_dim = " + std::to_string(subspace_dim(g)));

    const auto field = make_field(17);
    const std::size_t n = 10;
    std::map<std::string, Vector> symbols;
    Matrix instance(field, n, n);
    std::size_t row = 0;
    for (const auto& line : ex.at("template")) {
        std::istringstream in(line.get<std::string>());
        std::string token;
        for (std::size_t col = 0; in >> token; ++col) {
            if (token == ".") continue;
            auto& v = symbols[token];
            if (v.empty()) v.assign(n * n, 0);
            v[row * n + col] = 1;
        }
        ++row;
    }
    elem value = 1;
    std::vector<Vector> indicators;
    for (const auto& [name, v] : symbols) {
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k]) instance(k / n, k % n) = value;
        ++value;
        indicators.push_back(v);
        out.expect(membership(Matrix(field, n, n, v), g), "template symbol " + name + " fails membership");
    }
    out.expect(membership(instance, g), "template instance fails membership");
    const Subspace span = Subspace::span(field, n * n, indicators);
    const Subspace expected = basis(g, field);
    out.expect(static_cast<int>(expected.dim()) == dim, "basis dimension " + std::to_string(expected.dim()));
    out.expect(span == expected, "template span differs from C(G)");
    out.expect(jordan_centralizer(g.type(), field).contains(expected), "C(G) not inside the Jordan centralizer");
    return out;
}

inline Outcome psi_chain(const FixtureSet& fx, const PsiOptions& options = {}) {
    Outcome out;
    const json& ex = fx.reference("psi_chain");
    GapArray g = gap_from_json(ex.at("type"), ex.at("array"));
    for (const auto& step : ex.at("steps")) {
        const int r = step.at("r");
        g = psi(g, r, options).array;
        const GapArray expected = gap_from_json(step.at("type"), step.at("array"));
        out.expect(g == expected, "psi_" + std::to_string(r) + " gave " + g.to_string());
    }
    return out;
}

inline Outcome worst_array(const FixtureSet& fx) {
    Outcome out;
    const json& ex = fx.reference("g_worst_example");
    const GapArray expected = gap_from_json(ex.at("type"), ex.at("array"));
    out.expect(g_worst(expected.type()) == expected, "G^lambda display mismatch");
    const CheckReport sizes = check_g_worst_size(14);
    out.expect(sizes.passed, sizes.witnesses.empty() ? "" : "size formula fails at " + sizes.witnesses.front());
    return out;
}

inline Outcome conjugation_example(const FixtureSet& fx) {
    Outcome out;
    const json& ex = fx.reference("conjugation_example");
    const Partition mu = partition_from_json(ex.at("mu"));
    const Partition lambda = partition_from_json(ex.at("lambda"));
    for (int p : ex.at("fields").get<std::vector<int>>()) {
        const auto field = make_field(p);
        const Matrix a = matrix_from_json(ex.at("input"), field);
        const ConjugationTrace trace = conjugation_level(a, mu);
        const std::string tag = " over F_" + std::to_string(p);
        for (std::size_t s = 0; s < 5; ++s)
            out.expect(trace.states[s] == matrix_from_json(ex.at("states")[s], field),
                       "state " + std::to_string(s + 1) + tag);
        out.expect(trace.r == ex.at("r").get<int>(), "extended block" + tag);
        out.expect(trace.lambda == lambda, "final type" + tag);
        out.expect(trace.Y() * a * trace.Y().inverse() == jordan_matrix(lambda, field), "Y A Y^-1" + tag);
        const Conjugator conj = canonical_conjugator(a);
        out.expect(conj.X * a * conj.X.inverse() == jordan_matrix(lambda, field), "X_A A X_A^-1" + tag);
    }
    return out;
}

inline Outcome jordan_kernels(const FixtureSet& fx) {
    Outcome out;
    const json& oracle = fx.derived("jordan_kernel_dims/q=2");
    const auto field = make_field(2);
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (const auto& lambda : partitions_of(a))
                for (const auto& mu : partitions_of(b)) {
                    const Matrix t = sylvester_op(jordan_matrix(lambda, field), jordan_matrix(mu, field));
                    const auto kernel = static_cast<std::int64_t>(t.nullspace().dim());
                    const std::string key = lambda.to_string() + "|" + mu.to_string();
                    out.expect(kernel == inner(lambda.conjugate(), mu.conjugate()), "inner product at " + key);
                    out.expect(kernel == oracle.at(key).get<std::int64_t>(), "oracle disagreement at " + key);
                }
    return out;
}

inline std::string census_key(const std::string& what, int n, std::uint32_t q) {
    return what + "/n=" + std::to_string(n) + "/q=" + std::to_string(q);
}

inline Outcome burnside(const FixtureSet& fx, unsigned workers) {
    Outcome out;
    EnumerationLimits limits;
    limits.workers = workers;
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const auto field = Field::make_order(q);
        out.expect(class_count(2, field, limits).class_count == q, "k(U_2) at q=" + std::to_string(q));
        out.expect(class_count(3, field, limits).class_count == json_bigint(fx.derived(census_key("class_count", 3, q))),
                   "k(U_3) at q=" + std::to_string(q));
    }
    for (int n = 1; n <= 4; ++n)
        for (std::uint32_t q : {2u, 3u}) {
            const CensusRecord rec = class_count(n, make_field(static_cast<int>(q)), limits);
            check_census_invariants(rec);
            out.expect(rec.total_comm_pairs == json_bigint(fx.derived(census_key("comm_count", n, q))),
                       census_key("comm_count", n, q));
            const std::string shape_key = census_key("shape_census", n, q);
            if (fx.has_derived(shape_key)) {
                const json& table = fx.derived(shape_key);
                out.expect(table.size() == rec.per_shape.size(), shape_key + " stratum count");
                for (const auto& [lambda, s] : rec.per_shape)
                    out.expect(table.contains(lambda.to_string()) && json_bigint(table.at(lambda.to_string())) == s.matrices,
                               shape_key + " " + lambda.to_string());
            }
        }
    for (int n = 5; n <= 6; ++n)
        for (std::uint32_t q : {2u, 3u}) {
            if (n == 6 && q == 3) continue;
            check_census_invariants(class_count(n, make_field(static_cast<int>(q)), limits));
        }
    const auto f2 = make_field(2);
    const json& chain = fx.derived("centralizer_dim_u/single_block/q=2");
    for (int n = 1; n <= 5; ++n)
        out.expect(centralizer_dim_u(jordan_matrix(Partition{n}, f2)) == chain.at(std::to_string(n)).get<std::size_t>(),
                   "dim C_U(J_(n)) at n=" + std::to_string(n));
    out.expect(centralizer_dim_u(jordan_matrix(Partition{2, 1}, f2)) ==
                   fx.derived("centralizer_dim_u/(2,1)/q=2").get<std::size_t>(),
               "dim C_U(J_(2,1))");
    return out;
}

inline Outcome worst_gap(Profile, unsigned workers) {
    Outcome out;
    EnumerationLimits limits;
    limits.workers = workers;
    for (int n = 1; n <= 5; ++n)
        for (int q : {2, 3}) {
            const WorstGapReport report = verify_worst_gap(n, make_field(q), limits);
            out.expect(report.passed(), std::to_string(report.violation_count) + " violations at n=" +
                                            std::to_string(n) + ", q=" + std::to_string(q));
        }
    return out;
}

inline Outcome clearing(const PsiOptions& options = {}) {
    Outcome out;
    for (int n = 2; n <= 5; ++n) {
        const ClearingReport report = verify_clearing_lemma(n, make_field(2), options);
        out.expect(report.passed(), std::to_string(report.failure_count) + " of " + std::to_string(report.checked) +
                                        " cases fail at n=" + std::to_string(n));
    }
    return out;
}

inline Outcome worst_dominance() {
    Outcome out;
    for (int n = 1; n <= 12; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const GapArray g = g_worst(lambda);
            for (int r = 1; r <= lambda.length() + 1; ++r) {
                const std::string tag = lambda.to_string() + " r=" + std::to_string(r);
                if (r <= lambda.length()) out.expect(is_r_valid(g, r), "not r-valid: " + tag);
                out.expect(le(g_worst(phi(lambda, r).partition), psi(g, r).array), "not dominated: " + tag);
            }
        }
    return out;
}

inline Outcome shape_bounds(const FixtureSet& fx, unsigned workers) {
    Outcome out;
    EnumerationLimits limits;
    limits.workers = workers;
    for (int n = 1; n <= 5; ++n)
        for (int q : {2, 3}) {
            const CensusRecord rec = class_count(n, make_field(q), limits);
            check_census_invariants(rec);
            const auto bad = check_yip_bound(rec);
            out.expect(bad.empty(), bad.empty() ? "" : "F_lambda bound fails at " + bad.front().lambda.to_string());
        }
    const json& syt = fx.derived("syt_counts");
    for (int n = 1; n <= 8; ++n) {
        bigint squares = 0;
        for (const auto& lambda : partitions_of(n)) {
            const bigint f = hook_count(lambda);
            squares += f * f;
            out.expect(f == json_bigint(syt.at(lambda.to_string())), "hook count at " + lambda.to_string());
        }
        out.expect(squares == factorial(static_cast<unsigned>(n)), "sum of squares at n=" + std::to_string(n));
    }
    return out;
}

inline Outcome comm_bounds(Profile profile, unsigned workers) {
    Outcome out;
    EnumerationLimits limits;
    limits.workers = workers;
    const int n_max = profile == Profile::quick ? 4 : 5;
    for (int n = 1; n <= n_max; ++n)
        for (int q : {2, 3}) {
            const CensusRecord rec = class_count(n, make_field(q), limits);
            const auto bad = check_h_bound(rec);
            out.expect(bad.empty(), bad.empty() ? "" : "comm bound fails at " + bad.front().lambda.to_string());
            out.expect(rec.class_count <= class_count_ceiling(n, static_cast<std::uint32_t>(q)),
                       "class count ceiling fails at n=" + std::to_string(n));
        }
    return out;
}

inline RationalPolynomial polynomial_from_json(const json& coeffs) {
    RationalPolynomial p;
    for (const auto& c : coeffs) {
        const std::string s = c.get<std::string>();
        const auto slash = s.find('/');
        p.push_back(slash == std::string::npos ? rational(bigint(s))
                                               : rational(bigint(s.substr(0, slash)), bigint(s.substr(slash + 1))));
    }
    return p;
}

inline Outcome interpolation(const FixtureSet& fx, unsigned workers) {
    Outcome out;
    EnumerationLimits limits;
    limits.workers = workers;
    const std::map<int, std::vector<std::uint32_t>> samples{{3, {2, 3, 4, 5}}, {4, {2, 3, 4, 5, 7}}};
    for (const auto& [n, qs] : samples) {
        std::vector<bigint> counts;
        for (auto q : qs) {
            counts.push_back(class_count(n, Field::make_order(q), limits).class_count);
            out.expect(counts.back() == json_bigint(fx.derived(census_key("class_count", n, q))),
                       census_key("class_count", n, q));
        }
        const ClassPolynomial poly = interpolate_class_polynomial(n, qs, counts);
        const std::string tag = " at n=" + std::to_string(n);
        out.expect(poly.integer_coefficients, "non-integer coefficients" + tag);
        out.expect(poly.overdetermined, "fit not over-determined" + tag);
        out.expect(poly.degree_matches, "degree " + std::to_string(poly.degree) + tag);
        out.expect(poly.degree == fx.reference("class_degree").at(std::to_string(n)).get<int>(), "reference degree" + tag);
        out.expect(poly.coefficients == polynomial_from_json(fx.derived("class_polynomial/n=" + std::to_string(n))),
                   "polynomial " + polynomial_to_string(poly.coefficients) + tag);
    }
    return out;
}

inline rational rational_from_json(const json& v) {
    const RationalPolynomial p = polynomial_from_json(json::array({v}));
    return p.front();
}

inline Outcome lcs_identity(const FixtureSet& fx, unsigned workers) {
    Outcome out;
    EnumerationLimits limits;
    limits.workers = workers;
    struct Case {
        int a, b, k, q;
    };
    for (const Case c : {Case{2, 2, 0, 2}, Case{2, 2, 1, 2}, Case{2, 3, 1, 2}, Case{3, 3, 1, 2}, Case{2, 2, 0, 3}}) {
        const auto field = make_field(c.q);
        const rational direct = cp_direct(LcsParams(c.a + c.b, c.k, field), limits);
        const rational split = cp_decomposed(c.a, c.b, c.k, field, limits);
        const std::string key =
            "cp/n=" + std::to_string(c.a + c.b) + "/k=" + std::to_string(c.k) + "/q=" + std::to_string(c.q);
        out.expect(direct == split, "decomposition differs for " + key);
        out.expect(direct == rational_from_json(fx.derived(key)), "oracle differs for " + key);
    }
    return out;
}

inline Outcome rank_bounds(const FixtureSet& fx) {
    Outcome out;
    for (int q : {2, 3}) {
        const auto field = make_field(q);
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) {
                const auto table = n_rank_census(a, b, field);
                const auto bad = check_rank_bound(a, b, static_cast<std::uint32_t>(q), table);
                out.expect(bad.empty(), "pair-count bound fails at a=" + std::to_string(a) + ", b=" + std::to_string(b));
                out.expect(table.at(a * b) == ipow(static_cast<std::uint32_t>(q), static_cast<std::uint64_t>(binom2(a) + binom2(b))),
                           "table does not reach all pairs");
            }
    }
    const auto f2 = make_field(2);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            out.expect(rank_shape_mismatches(a, b, f2) == 0,
                       "rank depends on more than shapes at a=" + std::to_string(a) + ", b=" + std::to_string(b));
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        const auto table = n_rank_census(a, b, f2);
        out.expect(table == n_rank_census_direct(a, b, f2), "shape-stratified table differs from direct ranks");
        const json& oracle = fx.derived("rank_table/a=" + std::to_string(a) + "/b=" + std::to_string(b) + "/q=2");
        for (const auto& [r, count] : table)
            out.expect(count == json_bigint(oracle.at(static_cast<std::size_t>(r))), "oracle rank table at r=" + std::to_string(r));
    }
    return out;
}

inline Outcome beta_gamma() {
    Outcome out;
    out.expect(beta(0) == 0, "beta_0");
    out.expect(beta(1) == rational(-1, 16), "beta_1");
    // The gap rises over m = 0, 1, 2 and shrinks strictly afterwards.
    const auto gap = [](int m) -> rational { return abs(gamma(m) - rational(1, 6)); };
    out.expect(gap(0) == rational(1, 24) && gap(1) == rational(5, 96) && gap(2) == rational(23, 384),
               "initial gaps of gamma_m");
    rational previous = gap(2);
    for (int m = 3; m <= 30; ++m) {
        out.expect(gap(m) < previous, "gamma_m - 1/6 not shrinking at m=" + std::to_string(m));
        previous = gap(m);
    }
    out.expect(previous < rpow(2, -25), "|gamma_30 - 1/6| >= 2^-25");
    return out;
}

inline Outcome constants() {
    Outcome out;
    const CheckReport report = check_constants();
    out.expect(report.passed, report.witnesses.empty() ? "" : report.witnesses.front());
    return out;
}

inline Outcome h_lemma() {
    Outcome out;
    for (const CheckReport& report : {check_h_lemma(conjugate_partition_samples(16)), check_h_lemma(random_samples(10000)),
                                      check_max_third(40), check_g_exponent_identity(14)})
        out.expect(report.passed, report.name + ": " + (report.witnesses.empty() ? "" : report.witnesses.front()));
    return out;
}

}  // namespace detail

inline std::vector<Criterion> acceptance_criteria() {
    using P = Profile;
    return {
        {1, "gap-array worked example", true, [](const FixtureSet& f, P, unsigned) { return detail::gap_example(f); }},
        {2, "psi worked chain", true, [](const FixtureSet& f, P, unsigned) { return detail::psi_chain(f); }},
        {3, "worst-case gap array and size formula", true,
         [](const FixtureSet& f, P, unsigned) { return detail::worst_array(f); }},
        {4, "conjugation worked example over F_7 and F_11", true,
         [](const FixtureSet& f, P, unsigned) { return detail::conjugation_example(f); }},
        {5, "Jordan-pair kernel dimensions", true,
         [](const FixtureSet& f, P, unsigned) { return detail::jordan_kernels(f); }},
        {6, "Burnside censuses", true, [](const FixtureSet& f, P, unsigned w) { return detail::burnside(f, w); }},
        {7, "worst-gap containment", false, [](const FixtureSet&, P p, unsigned w) { return detail::worst_gap(p, w); }},
        {8, "clearing conjugation equality", false, [](const FixtureSet&, P, unsigned) { return detail::clearing(); }},
        {9, "worst array dominance and validity", true,
         [](const FixtureSet&, P, unsigned) { return detail::worst_dominance(); }},
        {10, "shape strata bound and totals", true,
         [](const FixtureSet& f, P, unsigned w) { return detail::shape_bounds(f, w); }},
        {11, "commuting-pair and class-count bounds", true,
         [](const FixtureSet&, P p, unsigned w) { return detail::comm_bounds(p, w); }},
        {12, "class-count polynomial interpolation", false,
         [](const FixtureSet& f, P, unsigned w) { return detail::interpolation(f, w); }},
        {13, "lower central series decomposition identity", false,
         [](const FixtureSet& f, P, unsigned w) { return detail::lcs_identity(f, w); }},
        {14, "rank-stratified pair bound and shape invariance", true,
         [](const FixtureSet& f, P, unsigned) { return detail::rank_bounds(f); }},
        {15, "beta and gamma sequences", true, [](const FixtureSet&, P, unsigned) { return detail::beta_gamma(); }},
        {16, "exponent constants in Q(sqrt 2)", true,
         [](const FixtureSet&, P, unsigned) { return detail::constants(); }},
        {17, "h inequalities", true, [](const FixtureSet&, P, unsigned) { return detail::h_lemma(); }},
    };
}

/// Runs the criteria of the profile (or the listed ids); exceptions count as failures.
inline std::vector<CriterionResult> run_acceptance(Profile profile, const FixtureSet& fixtures, unsigned workers,
                                                   const std::set<int>& only = {}) {
    std::vector<CriterionResult> results;
    for (const auto& c : acceptance_criteria()) {
        CriterionResult r{c.id, c.title, false, false, "", 0};
        const bool selected = only.empty() ? (profile == Profile::full || c.quick) : only.contains(c.id);
        if (selected) {
            r.ran = true;
            const auto start = std::chrono::steady_clock::now();
            try {
                const Outcome o = c.run(fixtures, profile, workers);
                r.passed = o.passed;
                r.detail = o.detail;
            } catch (const std::exception& e) {
                r.passed = false;
                r.detail = std::string("exception: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        results.push_back(std::move(r));
    }
    return results;
}

inline std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.ran ? (r.passed ? "[PASS] " : "[FAIL] ") : "[SKIP] ");
    out << (r.id < 10 ? " " : "") << r.id << "  " << r.title;
    if (r.ran) out << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    if (!r.detail.empty()) out << "  " << r.detail;
    return out.str();
}

}  // namespace unitri
