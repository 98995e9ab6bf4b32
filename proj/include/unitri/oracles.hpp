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
 * @file oracles.hpp
 * @brief Deliberately naive reference computations used to generate the
 * committed fixtures. Nothing here depends on the rest of the library: the
 * field, the matrices, the elimination and the enumeration are all coded
 * separately, and only plain integers and Boost rationals cross the boundary.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri::oracle {

using big = boost::multiprecision::cpp_int;
using fraction = boost::multiprecision::cpp_rational;

/// GF(q) with elements 0..q-1 read as base-p coefficient lists, low degree first.
class NaiveField {
public:
    explicit NaiveField(int q) : q_(q) {
        for (int d = 2; d <= q; ++d)
            if (q % d == 0) {
                p_ = d;
                break;
            }
        int rest = q;
        while (rest % p_ == 0) {
            rest /= p_;
            ++k_;
        }
        if (rest != 1 || q < 2) throw std::invalid_argument("NaiveField: q is not a prime power");
        modulus_ = find_irreducible();
        add_.assign(static_cast<std::size_t>(q * q), 0);
        mul_.assign(static_cast<std::size_t>(q * q), 0);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add_[a * q + b] = encode(poly_add(decode(a), decode(b)));
                mul_[a * q + b] = encode(poly_rem(poly_mul(decode(a), decode(b)), modulus_));
            }
    }

    int q() const { return q_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const {
        for (int b = 0; b < q_; ++b)
            if (add(a, b) == 0) return b;
        throw std::logic_error("NaiveField: no negative");
    }
    int inv(int a) const {
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) return b;
        throw std::domain_error("NaiveField: no inverse");
    }

private:
    using poly = std::vector<int>;

    poly decode(int a) const {
        poly f(static_cast<std::size_t>(k_), 0);
        for (int i = 0; i < k_; ++i, a /= p_) f[i] = a % p_;
        return f;
    }
    int encode(const poly& f) const {
        int a = 0;
        for (int i = k_; i-- > 0;) a = a * p_ + (i < static_cast<int>(f.size()) ? f[i] : 0);
        return a;
    }
    poly poly_add(const poly& f, const poly& g) const {
        poly h(std::max(f.size(), g.size()), 0);
        for (std::size_t i = 0; i < h.size(); ++i)
            h[i] = ((i < f.size() ? f[i] : 0) + (i < g.size() ? g[i] : 0)) % p_;
        return h;
    }
    poly poly_mul(const poly& f, const poly& g) const {
        poly h(f.size() + g.size(), 0);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p_;
        return h;
    }
    /// Remainder modulo a monic polynomial.
    poly poly_rem(poly f, const poly& m) const {
        const std::size_t dm = m.size() - 1;
        for (std::size_t top = f.size(); top-- > dm;) {
            const int c = f[top];
            if (c == 0) continue;
            for (std::size_t i = 0; i <= dm; ++i) f[top - dm + i] = ((f[top - dm + i] - c * m[i]) % p_ + p_) % p_;
        }
        f.resize(std::min(f.size(), dm));
        return f;
    }
    bool divides(const poly& d, const poly& f) const {
        for (int c : poly_rem(f, d))
            if (c != 0) return false;
        return true;
    }
    /// Any monic irreducible of degree k, by trial division against every monic of lower degree.
    poly find_irreducible() const {
        if (k_ == 1) return {0, 1};
        int count = 1;
        for (int i = 0; i < k_; ++i) count *= p_;
        for (int code = 0; code < count; ++code) {
            poly f(static_cast<std::size_t>(k_ + 1), 0);
            int c = code;
            for (int i = 0; i < k_; ++i, c /= p_) f[i] = c % p_;
            f[k_] = 1;
            bool irreducible = true;
            for (int deg = 1; deg <= k_ / 2 && irreducible; ++deg) {
                int dcount = 1;
                for (int i = 0; i < deg; ++i) dcount *= p_;
                for (int dcode = 0; dcode < dcount && irreducible; ++dcode) {
                    poly d(static_cast<std::size_t>(deg + 1), 0);
                    int e = dcode;
                    for (int i = 0; i < deg; ++i, e /= p_) d[i] = e % p_;
                    d[deg] = 1;
                    if (divides(d, f)) irreducible = false;
                }
            }
            if (irreducible) return f;
        }
        throw std::logic_error("NaiveField: no irreducible polynomial");
    }

    int q_ = 0, p_ = 0, k_ = 0;
    poly modulus_;
    std::vector<int> add_, mul_;
};

/// Dense square-or-rectangular matrix of field codes.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<int> v;
    Mat(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r * c), 0) {}
    int& at(int i, int j) { return v[static_cast<std::size_t>(i * cols + j)]; }
    int at(int i, int j) const { return v[static_cast<std::size_t>(i * cols + j)]; }
    bool operator==(const Mat&) const = default;
};

inline Mat multiply(const NaiveField& f, const Mat& a, const Mat& b) {
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            int s = 0;
            for (int t = 0; t < a.cols; ++t) s = f.add(s, f.mul(a.at(i, t), b.at(t, j)));
            c.at(i, j) = s;
        }
    return c;
}

/// Rank by plain Gaussian elimination on a copy.
inline int rank(const NaiveField& f, Mat m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const int inv = f.inv(m.at(r, c));
        for (int i = r + 1; i < m.rows; ++i) {
            const int factor = f.neg(f.mul(m.at(i, c), inv));
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = f.add(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

/// Every strictly upper-triangular n x n matrix with zero entries wherever j - i <= k.
inline std::vector<Mat> upper_matrices(const NaiveField& f, int n, int k = 0, std::uint64_t limit = 1u << 22) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + k + 1; j < n; ++j) slots.emplace_back(i, j);
    big total = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) total *= f.q();
    if (total > limit) throw std::invalid_argument("oracle: enumeration too large");
    std::vector<Mat> out;
    Mat m(n, n);
    std::function<void(std::size_t)> fill = [&](std::size_t s) {
        if (s == slots.size()) {
            out.push_back(m);
            return;
        }
        for (int x = 0; x < f.q(); ++x) {
            m.at(slots[s].first, slots[s].second) = x;
            fill(s + 1);
        }
        m.at(slots[s].first, slots[s].second) = 0;
    };
    fill(0);
    return out;
}

/// Commuting pairs among the given matrices, by multiplying every pair.
inline big commuting_pairs(const NaiveField& f, const std::vector<Mat>& ms) {
    big count = 0;
    for (const auto& a : ms)
        for (const auto& b : ms)
            if (multiply(f, a, b) == multiply(f, b, a)) ++count;
    return count;
}

/// |comm(U_n(q))| by literal double enumeration.
inline big comm_count(int n, int q) {
    if (n > 4 || q > 3) throw std::invalid_argument("oracle comm_count: n <= 4 and q <= 3 only");
    const NaiveField f(q);
    return commuting_pairs(f, upper_matrices(f, n));
}

/// Matrix of X -> AX - XB built by applying it to unit matrices.
inline Mat commutator_map(const NaiveField& f, const Mat& a, const Mat& b) {
    const int rows = a.rows, cols = b.rows;
    Mat op(rows * cols, rows * cols);
    for (int p = 0; p < rows; ++p)
        for (int s = 0; s < cols; ++s) {
            Mat x(rows, cols);
            x.at(p, s) = 1;
            const Mat ax = multiply(f, a, x), xb = multiply(f, x, b);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) op.at(i * cols + j, p * cols + s) = f.add(ax.at(i, j), f.neg(xb.at(i, j)));
        }
    return op;
}

/// dim of the strictly-upper centralizer of A: restricts the commutator map to strictly-upper inputs.
inline int upper_centralizer_dim(const NaiveField& f, const Mat& a) {
    const int n = a.rows;
    const Mat full = commutator_map(f, a, a);
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) keep.push_back(i * n + j);
    Mat op(n * n, static_cast<int>(keep.size()));
    for (int r = 0; r < n * n; ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) op.at(r, static_cast<int>(c)) = full.at(r, keep[c]);
    return static_cast<int>(keep.size()) - rank(f, op);
}

/// |comm(U_n(q))| as sum over A of q^{dim C_U(A)}, with the oracle elimination.
inline big comm_count_by_kernels(int n, int q) {
    const NaiveField f(q);
    big total = 0;
    for (const auto& a : upper_matrices(f, n)) {
        big size = 1;
        for (int d = upper_centralizer_dim(f, a); d > 0; --d) size *= q;
        total += size;
    }
    return total;
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
inline std::vector<int> jordan_type(const NaiveField& f, const Mat& a) {
    const int n = a.rows;
    std::vector<int> ranks{n};
    Mat power(n, n);
    for (int i = 0; i < n; ++i) power.at(i, i) = 1;
    while (ranks.back() > 0) {
        power = multiply(f, power, a);
        const int r = rank(f, power);
        if (r == ranks.back()) throw std::invalid_argument("oracle jordan_type: matrix is not nilpotent");
        ranks.push_back(r);
    }
    std::vector<int> columns;
    for (std::size_t i = 1; i < ranks.size(); ++i) columns.push_back(ranks[i - 1] - ranks[i]);
    std::vector<int> parts;
    for (int row = 0; row < (columns.empty() ? 0 : columns[0]); ++row) {
        int len = 0;
        for (int c : columns)
            if (c > row) ++len;
        parts.push_back(len);
    }
    return parts;
}

/// Number of strictly upper-triangular matrices of each Jordan type.
inline std::map<std::vector<int>, big> shape_counts(int n, int q) {
    const NaiveField f(q);
    std::map<std::vector<int>, big> out;
    for (const auto& a : upper_matrices(f, n)) ++out[jordan_type(f, a)];
    return out;
}

/// Standard Young tableaux of the shape, by placing 1..n one cell at a time.
inline big syt_count(const std::vector<int>& shape) {
    int n = 0;
    for (int s : shape) n += s;
    if (n > 10) throw std::invalid_argument("oracle syt_count: n <= 10 only");
    std::vector<int> filled(shape.size(), 0);
    std::function<big(int)> place = [&](int remaining) -> big {
        if (remaining == 0) return 1;
        big total = 0;
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] == shape[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            ++filled[r];
            total += place(remaining - 1);
            --filled[r];
        }
        return total;
    };
    return place(n);
}

inline Mat jordan_block_matrix(const std::vector<int>& parts) {
    int n = 0;
    for (int s : parts) n += s;
    Mat m(n, n);
    int offset = 0;
    for (int s : parts) {
        for (int t = 0; t + 1 < s; ++t) m.at(offset + t, offset + t + 1) = 1;
        offset += s;
    }
    return m;
}

/// dim ker (X -> J_lambda X - X J_mu).
inline int jordan_kernel_dim(const std::vector<int>& lambda, const std::vector<int>& mu, int q) {
    const NaiveField f(q);
    const Mat op = commutator_map(f, jordan_block_matrix(lambda), jordan_block_matrix(mu));
    return op.cols - rank(f, op);
}

/// cp(U_{n,k}(q)) by multiplying every pair.
inline fraction commuting_probability(int n, int k, int q) {
    const NaiveField f(q);
    const auto ms = upper_matrices(f, n, k, 1u << 11);
    const big size = ms.size();
    return fraction(commuting_pairs(f, ms), size * size);
}

/// Number of pairs (A, B) with rank T_{A,B} <= r, for r = 0..ab.
inline std::vector<big> rank_table(int a, int b, int q) {
    const NaiveField f(q);
    const auto as = upper_matrices(f, a), bs = upper_matrices(f, b);
    std::vector<big> exact(static_cast<std::size_t>(a * b + 1), 0);
    for (const auto& x : as)
        for (const auto& y : bs) ++exact[static_cast<std::size_t>(rank(f, commutator_map(f, x, y)))];
    for (std::size_t r = 1; r < exact.size(); ++r) exact[r] += exact[r - 1];
    return exact;
}

/// Coefficients (low degree first) of the polynomial through the points, by solving the Vandermonde system.
inline std::vector<fraction> fit_polynomial(const std::vector<std::pair<fraction, fraction>>& points) {
    const std::size_t m = points.size();
    std::vector<std::vector<fraction>> aug(m, std::vector<fraction>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        fraction power = 1;
        for (std::size_t j = 0; j < m; ++j, power *= points[i].first) aug[i][j] = power;
        aug[i][m] = points[i].second;
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t pivot = c;
        while (aug[pivot][c] == 0) ++pivot;
        std::swap(aug[pivot], aug[c]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            const fraction factor = aug[i][c] / aug[c][c];
            for (std::size_t j = c; j <= m; ++j) aug[i][j] -= factor * aug[c][j];
        }
    }
    std::vector<fraction> coeffs(m);
    for (std::size_t i = 0; i < m; ++i) coeffs[i] = aug[i][m] / aug[i][i];
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

}  // namespace unitri::oracle
