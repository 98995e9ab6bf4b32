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
 * @file partition.hpp
 * @brief Integer partitions, viewed both as Jordan types and as finitely
 * supported sequences (implicitly extended by zeros).
 */

#include "unitri/numeric.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri {

class Partition {
public:
    Partition() = default;

    /// Parts must be weakly decreasing and positive.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts descending and drops zeros.
    static Partition from_unsorted(std::vector<int> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// Parses "(6,2,1,1)"; "()" is the empty partition.
    static Partition parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (c != '(' && c != ')' && c != ' ') s += c;
        std::vector<int> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) parts.push_back(std::stoi(item));
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    /// 0-based part, zero beyond the length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Column lengths of the Young diagram.
    Partition conjugate() const {
        std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
        for (int part : parts_)
            for (int c = 0; c < part; ++c) ++conj[c];
        return Partition(std::move(conj));
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// sum (i-1) lambda_i
inline std::int64_t n_stat(const Partition& lambda) {
    std::int64_t total = 0;
    for (int i = 0; i < lambda.length(); ++i) total += static_cast<std::int64_t>(i) * lambda[i];
    return total;
}

/// sum C(lambda'_i, 2); equal to n_stat.
inline std::int64_t n_stat_by_columns(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::int64_t total = 0;
    for (int c : conj.parts()) total += binom2(c);
    return total;
}

inline std::int64_t inner(const Partition& a, const Partition& b) {
    std::int64_t total = 0;
    const int len = std::min(a.length(), b.length());
    for (int i = 0; i < len; ++i) total += static_cast<std::int64_t>(a[i]) * b[i];
    return total;
}

inline std::int64_t norm_sq(const Partition& a) { return inner(a, a); }

/// m[i-1] = number of parts equal to i, for i = 1..lambda_1.
inline std::vector<int> multiplicities(const Partition& lambda) {
    std::vector<int> m(lambda.empty() ? 0 : lambda[0], 0);
    for (int part : lambda.parts()) ++m[part - 1];
    return m;
}

/// Number of standard Young tableaux, n! / prod(hooks).
inline bigint hook_count(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    bigint hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
        }
    }
    return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

/// All partitions of n in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// p(n) by the standard parts-at-most-k recurrence.
inline bigint partition_count(int n) {
    if (n < 0) throw std::invalid_argument("partition_count: n must be nonnegative");
    std::vector<bigint> ways(n + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
    return ways[n];
}

/// Result of adding one cell to row r: the new partition and, for each old
/// row index i (0-based; index length() stands for the appended row when
/// r = length()+1), the row's index in the new partition.
struct PhiResult {
    Partition partition;
    std::vector<std::size_t> perm;
};

/// Where the grown row lands among rows of its new size.
enum class TieBreak { before_equal, after_equal };

/// phi_r for 1 <= r <= length()+1. The grown row becomes the first row of its size.
inline PhiResult phi(const Partition& lambda, int r, TieBreak tie = TieBreak::before_equal) {
    const int len = lambda.length();
    if (r < 1 || r > len + 1) throw std::out_of_range("phi: row index out of range");
    const std::size_t grown = static_cast<std::size_t>(r - 1);
    const int new_size = lambda[grown] + 1;
    std::vector<std::size_t> others;
    for (int i = 0; i < len; ++i)
        if (static_cast<std::size_t>(i) != grown) others.push_back(static_cast<std::size_t>(i));
    std::size_t slot = 0;
    while (slot < others.size() && (lambda[others[slot]] > new_size ||
                                    (tie == TieBreak::after_equal && lambda[others[slot]] == new_size)))
        ++slot;

    const std::size_t total = static_cast<std::size_t>(len) + (r == len + 1 ? 1 : 0);
    std::vector<std::size_t> perm(total);
    std::vector<int> parts(total);
    for (std::size_t pos = 0; pos < others.size(); ++pos) {
        const std::size_t target = pos < slot ? pos : pos + 1;
        perm[others[pos]] = target;
        parts[target] = lambda[others[pos]];
    }
    perm[grown] = slot;
    parts[slot] = new_size;
    return {Partition(std::move(parts)), std::move(perm)};
}

/// Finitely supported rational sequence, zero beyond its stored entries.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::vector<rational> entries) : entries_(std::move(entries)) {}

    static RationalVector from_partition(const Partition& lambda) {
        std::vector<rational> e;
        for (int part : lambda.parts()) e.emplace_back(part);
        return RationalVector(std::move(e));
    }

    /// 0-based entry, zero beyond the stored support.
    rational operator[](std::size_t i) const { return i < entries_.size() ? entries_[i] : rational(0); }
    std::size_t support() const { return entries_.size(); }
    const std::vector<rational>& entries() const { return entries_; }

    RationalVector scaled(const rational& c) const {
        auto e = entries_;
        for (auto& x : e) x *= c;
        return RationalVector(std::move(e));
    }

    /// v - Lv, where L is the left shift.
    RationalVector minus_shift() const {
        std::vector<rational> e(entries_.size());
        for (std::size_t i = 0; i < entries_.size(); ++i) e[i] = (*this)[i] - (*this)[i + 1];
        return RationalVector(std::move(e));
    }

    rational norm_sq() const {
        rational s = 0;
        for (const auto& x : entries_) s += x * x;
        return s;
    }

    rational l1() const {
        rational s = 0;
        for (const auto& x : entries_) s += abs(x);
        return s;
    }

    /// Weakly decreasing and nonnegative.
    bool is_decreasing_nonneg() const {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 0) return false;
            if (i > 0 && entries_[i] > entries_[i - 1]) return false;
        }
        return true;
    }

private:
    std::vector<rational> entries_;
};

/// h(v) = |v|^2 - |v - Lv|^2
inline rational h_value(const RationalVector& v) { return v.norm_sq() - v.minus_shift().norm_sq(); }

}  // namespace unitri
