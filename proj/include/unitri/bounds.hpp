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
 * @file bounds.hpp
 * @brief Exact checks of the inequalities on h(v) = |v|^2 - |v - Lv|^2 and
 * of the constants in Q(sqrt 2) that give the class-number exponent.
 */

#include "unitri/gap_array.hpp"
#include "unitri/numeric.hpp"
#include "unitri/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri {

/// a + b sqrt(2) with rational a, b.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(rational a, rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadraticNumber sqrt2() { return {0, 1}; }

    const rational& a() const { return a_; }
    const rational& b() const { return b_; }

    QuadraticNumber operator+(const QuadraticNumber& o) const { return {a_ + o.a_, b_ + o.b_}; }
    QuadraticNumber operator-(const QuadraticNumber& o) const { return {a_ - o.a_, b_ - o.b_}; }
    QuadraticNumber operator-() const { return {-a_, -b_}; }
    QuadraticNumber operator*(const QuadraticNumber& o) const {
        return {a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    }

    /// (a + b sqrt2)^{-1} = (a - b sqrt2) / (a^2 - 2 b^2)
    QuadraticNumber inverse() const {
        const rational norm = a_ * a_ - 2 * b_ * b_;
        if (norm == 0) throw std::domain_error("QuadraticNumber: inverse of zero");
        return {a_ / norm, -b_ / norm};
    }

    QuadraticNumber operator/(const QuadraticNumber& o) const { return *this * o.inverse(); }

    bool operator==(const QuadraticNumber& o) const { return a_ == o.a_ && b_ == o.b_; }

    /// -1, 0 or 1, decided by comparing a^2 with 2 b^2.
    int sign() const {
        const int sa = a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
        const int sb = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        return a_ * a_ > 2 * b_ * b_ ? sa : sb;
    }

    bool operator<(const QuadraticNumber& o) const { return (*this - o).sign() < 0; }

    std::string to_string() const { return unitri::to_string(a_) + " + " + unitri::to_string(b_) + "*sqrt(2)"; }

    double approx() const { return static_cast<double>(a_) + static_cast<double>(b_) * 1.4142135623730951; }

private:
    rational a_ = 0;
    rational b_ = 0;
};

/// dh/dv_i with 1-based i: 2 v_2 for i = 1, else 2 v_{i-1} - 2 v_i + 2 v_{i+1}.
inline rational h_partial(const RationalVector& v, std::size_t i) {
    if (i < 1) throw std::out_of_range("h_partial: index is 1-based");
    if (i == 1) return 2 * v[1];
    return 2 * v[i - 2] - 2 * v[i - 1] + 2 * v[i];
}

struct CheckReport {
    explicit CheckReport(std::string check_name = {}) : name(std::move(check_name)) {}

    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::vector<std::string> witnesses;  ///< the first few failures

    void fail(std::string witness) {
        passed = false;
        if (witnesses.size() < 8) witnesses.push_back(std::move(witness));
    }
};

inline std::string vector_to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.support(); ++i) out += (i ? "," : "") + to_string(v[i]);
    return out + ")";
}

/**
 * Pointwise check of the h lemma on samples from D: homogeneity, the two
 * partial-derivative orderings, the two upper bounds, and agreement of the
 * partials with centered differences.
 */
inline CheckReport check_h_lemma(const std::vector<RationalVector>& samples) {
    CheckReport report{"h_lemma"};
    const std::vector<rational> scales{-2, -1, 0, rational(1, 2), 3};
    for (const auto& v : samples) {
        if (!v.is_decreasing_nonneg()) throw std::invalid_argument("check_h_lemma: sample outside D");
        ++report.checked;
        const std::string tag = vector_to_string(v);
        const rational h = h_value(v);
        const rational l1 = v.l1();
        for (const auto& c : scales)
            if (h_value(v.scaled(c)) != c * c * h) report.fail("part 1 at c=" + to_string(c) + ": " + tag);

        const std::size_t top = v.support() + 2;
        const rational eps(1, 7);
        for (std::size_t i = 1; i <= top; ++i) {
            std::vector<rational> up(std::max(v.support(), i)), down(up.size());
            for (std::size_t t = 0; t < up.size(); ++t) up[t] = down[t] = v[t];
            up[i - 1] += eps;
            down[i - 1] -= eps;
            const rational diff = (h_value(RationalVector(up)) - h_value(RationalVector(down))) / (2 * eps);
            if (diff != h_partial(v, i)) report.fail("partial " + std::to_string(i) + " vs difference: " + tag);
        }

        for (std::size_t k = 3; k <= top; ++k)
            if (h_partial(v, 1) < h_partial(v, k)) report.fail("part 2 at k=" + std::to_string(k) + ": " + tag);
        if (h > 2 * l1 * v[1] - 3 * v[1] * v[1]) report.fail("part 3: " + tag);

        if (2 * v[0] >= l1) {
            for (std::size_t k = 4; k <= top; ++k)
                if (h_partial(v, 2) < h_partial(v, k)) report.fail("part 4 at k=" + std::to_string(k) + ": " + tag);
            if (h > l1 * v[0] - rational(3, 4) * v[0] * v[0]) report.fail("part 5: " + tag);
        }
    }
    return report;
}

/// lambda' for every lambda of every n <= n_max, unnormalized.
inline std::vector<RationalVector> conjugate_partition_samples(int n_max) {
    std::vector<RationalVector> out;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lambda : partitions_of(n)) out.push_back(RationalVector::from_partition(lambda.conjugate()));
    return out;
}

/// Seed for the pseudo-random samples in D.
inline constexpr std::uint64_t default_sample_seed = 20260601;

/**
 * count weakly decreasing nonnegative rational vectors of length 1..8 with
 * numerators below 32 and denominators 1..12, drawn from mt19937_64 using
 * only raw engine output so the sequence is the same on every platform.
 */
inline std::vector<RationalVector> random_samples(std::size_t count, std::uint64_t seed = default_sample_seed) {
    std::mt19937_64 engine(seed);
    std::vector<RationalVector> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        const std::size_t len = 1 + engine() % 8;
        const std::int64_t den = 1 + static_cast<std::int64_t>(engine() % 12);
        std::vector<std::int64_t> nums(len);
        for (auto& x : nums) x = static_cast<std::int64_t>(engine() % 32);
        std::sort(nums.begin(), nums.end(), std::greater<>());
        std::vector<rational> e;
        for (auto x : nums) e.emplace_back(x, den);
        out.emplace_back(std::move(e));
    }
    return out;
}

/// h of an integer vector, in integers.
inline std::int64_t h_int(const std::vector<int>& v) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::int64_t next = i + 1 < v.size() ? v[i + 1] : 0;
        const std::int64_t d = v[i] - next;
        total += static_cast<std::int64_t>(v[i]) * v[i] - d * d;
    }
    return total;
}

/// 3 h(lambda') <= n^2 for every lambda of every n <= n_max.
inline CheckReport check_max_third(int n_max) {
    CheckReport report{"max_third"};
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            ++report.checked;
            const std::int64_t h = h_int(lambda.conjugate().parts());
            if (3 * h > static_cast<std::int64_t>(n) * n)
                report.fail(lambda.to_string() + ": 3h = " + std::to_string(3 * h));
        }
    }
    return report;
}

/// |G^lambda| = n l - n - 2 n(lambda) + sum m_i^2 / 2 + l / 2
inline rational g_worst_size_formula(const Partition& lambda) {
    const std::int64_t n = lambda.size(), l = lambda.length();
    rational total = rational(n * l - n - 2 * n_stat(lambda)) + rational(l, 2);
    for (int m : multiplicities(lambda)) total += rational(static_cast<std::int64_t>(m) * m, 2);
    return total;
}

/// Direct cell sum of G^lambda against the closed form, for all lambda of n <= n_max.
inline CheckReport check_g_worst_size(int n_max) {
    CheckReport report{"g_worst_size"};
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lambda : partitions_of(n)) {
            ++report.checked;
            if (rational(g_worst(lambda).total()) != g_worst_size_formula(lambda))
                report.fail(lambda.to_string());
        }
    return report;
}

/**
 * n l - n/2 - n(lambda) - |G^lambda| = -l/2 + h(lambda')/2 exactly, with
 * |G^lambda| summed from the array, for all lambda of n <= n_max.
 */
inline CheckReport check_g_exponent_identity(int n_max) {
    CheckReport report{"g_exponent_identity"};
    for (int n = 1; n <= n_max; ++n)
        for (const auto& lambda : partitions_of(n)) {
            ++report.checked;
            const std::int64_t l = lambda.length();
            const rational lhs = rational(n * l - n_stat(lambda) - g_worst(lambda).total()) - rational(n, 2);
            const rational h = h_value(RationalVector::from_partition(lambda.conjugate()));
            const rational rhs = rational(-l, 2) + h / 2;
            if (lhs != rhs) report.fail(lambda.to_string() + ": " + to_string(lhs) + " != " + to_string(rhs));
            if (lhs > h / 2) report.fail(lambda.to_string() + ": exceeds h/2");
        }
    return report;
}

struct Constants {
    QuadraticNumber delta;
    QuadraticNumber eps;
    QuadraticNumber alpha;
    QuadraticNumber c;
};

/// eps = 2 delta = (4/21)(5 - 3 sqrt2), alpha = 4/49 + (20/49) sqrt2, c = (20/49) sqrt2 - 41/98.
inline Constants exponent_constants() {
    const QuadraticNumber eps = QuadraticNumber(rational(4, 21)) * QuadraticNumber(5, -3);
    return {eps * QuadraticNumber(rational(1, 2)), eps, QuadraticNumber(rational(4, 49), rational(20, 49)),
            QuadraticNumber(rational(-41, 98), rational(20, 49))};
}

/// The three exponent expressions, their common value, c, and the ordering of the constants.
inline CheckReport check_constants() {
    CheckReport report{"constants"};
    const Constants k = exponent_constants();
    const QuadraticNumber two_thirds(rational(2, 3)), third(rational(1, 3));
    const QuadraticNumber e1 = two_thirds - QuadraticNumber(rational(3, 2)) * k.delta * k.delta;
    const QuadraticNumber e2 = two_thirds - QuadraticNumber(rational(3, 8)) * k.eps * k.eps;
    const QuadraticNumber x = two_thirds - k.eps, y = third - k.delta;
    const QuadraticNumber e3 = QuadraticNumber(1) - x * x - y * y;
    auto expect = [&](bool ok, const std::string& what) {
        ++report.checked;
        if (!ok) report.fail(what);
    };
    expect(e1 == k.alpha, "2/3 - (3/2) delta^2 = " + e1.to_string());
    expect(e2 == k.alpha, "2/3 - (3/8) eps^2 = " + e2.to_string());
    expect(e3 == k.alpha, "1 - (2/3 - eps)^2 - (1/3 - delta)^2 = " + e3.to_string());
    expect(k.c == k.alpha - QuadraticNumber(rational(1, 2)), "c != alpha - 1/2");
    expect(k.c < QuadraticNumber(rational(7, 44)), "c >= 7/44");
    expect(QuadraticNumber(0) < k.delta, "delta <= 0");
    expect(k.delta < k.eps, "delta >= eps");
    expect(k.eps < QuadraticNumber(rational(1, 6)), "eps >= 1/6");
    return report;
}

}  // namespace unitri
