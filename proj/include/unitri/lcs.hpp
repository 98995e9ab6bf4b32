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
 * @file lcs.hpp
 * @brief Lower central series terms U_{n,k}, their commuting probabilities,
 * the block decomposition of U_{a+b,k}, and rank-stratified pair counts.
 *
 * U_{n,k} is the set of strictly upper-triangular A with A_{ij} = 0 whenever
 * 0 < j - i <= k; U_{n,0} is all of them and U_{n,1} is the commutator
 * subalgebra.
 */

#include "unitri/census.hpp"
#include "unitri/matrix.hpp"
#include "unitri/numeric.hpp"
#include "unitri/parallel.hpp"
#include "unitri/partition.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace unitri {

struct LcsParams {
    int n = 0;
    int k = 0;
    FieldPtr field;

    LcsParams(int n_, int k_, FieldPtr field_) : n(n_), k(k_), field(std::move(field_)) {
        if (n < 1) throw std::invalid_argument("LcsParams: n must be positive");
        if (k < 0 || k > n - 1) throw std::invalid_argument("LcsParams: k must lie in [0, n-1]");
        if (!field) throw std::invalid_argument("LcsParams: null field");
    }
};

/// Coordinates (i, j) with j - i > k, row-major.
inline std::vector<std::pair<std::size_t, std::size_t>> lcs_coordinates(std::size_t n, int k) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (static_cast<int>(j - i) > k) out.emplace_back(i, j);
    return out;
}

/// dim U_{n,k} = C(n-k, 2)
inline std::size_t lcs_dim(int n, int k) { return static_cast<std::size_t>(binom2(std::max(0, n - k))); }

inline bool in_lcs_term(const Matrix& a, int k) {
    if (!a.is_square() || !a.is_strictly_upper()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols() && static_cast<int>(j - i) <= k; ++j)
            if (a(i, j) != 0) return false;
    return true;
}

/// Element of U_{n,k} with the given enumeration index over lcs_coordinates.
inline Matrix lcs_matrix_at(const FieldPtr& field, std::size_t n, int k, std::uint64_t index) {
    const auto coords = lcs_coordinates(n, k);
    Matrix m(field, n, n);
    for (std::size_t c = coords.size(); c-- > 0;) {
        m(coords[c].first, coords[c].second) = static_cast<elem>(index % field->q());
        index /= field->q();
    }
    return m;
}

/**
 * The top-right a x b block of U_{a+b,k}: X_{ij} = 0 whenever i - j >= a - k.
 * Together with U_{a,k} and U_{b,k} on the diagonal it fills U_{a+b,k}.
 */
struct WedgeSpace {
    int a = 0;
    int b = 0;
    int k = 0;

    bool allowed(std::size_t i, std::size_t j) const {
        return static_cast<int>(i) - static_cast<int>(j) < a - k;
    }

    /// Flattened positions (row-major in a x b) that may be nonzero.
    std::vector<std::size_t> positions() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < static_cast<std::size_t>(a); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(b); ++j)
                if (allowed(i, j)) out.push_back(i * static_cast<std::size_t>(b) + j);
        return out;
    }

    std::size_t dim() const { return positions().size(); }
};

class StabilizationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Matrix of X -> AX - XB in flattened row-major coordinates, on all a x b
 * matrices or on a WedgeSpace. Throws StabilizationError if the operator
 * leaves the wedge.
 */
inline Matrix sylvester_op(const Matrix& a, const Matrix& b, const std::optional<WedgeSpace>& domain = std::nullopt) {
    if (!a.is_strictly_upper() || !b.is_strictly_upper())
        throw std::invalid_argument("sylvester_op: operands must be strictly upper-triangular");
    const Matrix full = sylvester_operator(a, b);
    if (!domain) return full;
    if (domain->a != static_cast<int>(a.rows()) || domain->b != static_cast<int>(b.rows()))
        throw std::invalid_argument("sylvester_op: wedge shape does not match the operands");
    const auto pos = domain->positions();
    std::vector<bool> inside(full.rows(), false);
    for (auto p : pos) inside[p] = true;
    for (auto col : pos)
        for (std::size_t row = 0; row < full.rows(); ++row)
            if (!inside[row] && full(row, col) != 0)
                throw StabilizationError("sylvester_op: T_{A,B} does not map the wedge into itself");
    Matrix out(a.field(), pos.size(), pos.size());
    for (std::size_t r = 0; r < pos.size(); ++r)
        for (std::size_t c = 0; c < pos.size(); ++c) out(r, c) = full(pos[r], pos[c]);
    return out;
}

namespace detail {

/// dim of C(A) cap U_{n,k}: kernel of X -> AX - XA on the U_{n,k} coordinates.
inline std::size_t lcs_centralizer_dim(const Matrix& a, const std::vector<std::pair<std::size_t, std::size_t>>& coords,
                                       Vector& scratch) {
    const Field& f = *a.field();
    const std::size_t n = a.rows(), d = coords.size(), rows = n * n;
    scratch.assign(rows * d, 0);
    for (std::size_t c = 0; c < d; ++c) {
        const auto [p, q] = coords[c];
        for (std::size_t i = 0; i < p; ++i)
            if (a(i, p) != 0) scratch[(i * n + q) * d + c] = f.add(scratch[(i * n + q) * d + c], a(i, p));
        for (std::size_t j = q + 1; j < n; ++j)
            if (a(q, j) != 0) scratch[(p * n + j) * d + c] = f.sub(scratch[(p * n + j) * d + c], a(q, j));
    }
    return d - rank_inplace(f, scratch, rows, d);
}

}  // namespace detail

/// cp(U_{n,k}(q)) = sum_A q^{dim C(A) cap U_{n,k}} / |U_{n,k}|^2, exact.
inline rational cp_direct(const LcsParams& params, const EnumerationLimits& limits = {}) {
    const auto n = static_cast<std::size_t>(params.n);
    const auto coords = lcs_coordinates(n, params.k);
    const std::size_t d = coords.size();
    const bigint order = ipow(params.field->q(), d);
    check_budget(order, limits, "cp_direct");
    const std::uint64_t total = detail::enumeration_size(*params.field, d);

    std::vector<std::vector<std::uint64_t>> by_dim(std::max(1u, limits.workers), std::vector<std::uint64_t>(d + 1, 0));
    for_each_shard(total, limits.workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        Vector scratch;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const Matrix a = lcs_matrix_at(params.field, n, params.k, idx);
            ++by_dim[w][detail::lcs_centralizer_dim(a, coords, scratch)];
        }
    });
    bigint comm = 0;
    for (const auto& tally : by_dim)
        for (std::size_t k = 0; k <= d; ++k) comm += ipow(params.field->q(), k) * tally[k];
    return rational(comm, order * order);
}

namespace detail {

inline std::vector<Matrix> lcs_elements(const FieldPtr& field, int n, int k) {
    const std::uint64_t total = enumeration_size(*field, lcs_dim(n, k));
    std::vector<Matrix> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) out.push_back(lcs_matrix_at(field, static_cast<std::size_t>(n), k, idx));
    return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs(const std::vector<Matrix>& elems) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (elems[i] * elems[j] == elems[j] * elems[i]) out.emplace_back(i, j);
    return out;
}

}  // namespace detail

/**
 * The block side of the decomposition of cp(U_{a+b,k}):
 *   sum over commuting (A1,A2) in U_{a,k} and (B1,B2) in U_{b,k} of
 *   q^{-dim(im T_{A1,B1} + im T_{A2,B2})}, over |U_{a,k}|^2 |U_{b,k}|^2,
 * with both operators restricted to the wedge.
 */
inline rational cp_decomposed(int a, int b, int k, const FieldPtr& field, const EnumerationLimits& limits = {}) {
    if (a < 1 || b < 1 || k < 0 || k > a + b - 1) throw std::invalid_argument("cp_decomposed: bad (a, b, k)");
    const std::size_t da = lcs_dim(a, k), db = lcs_dim(b, k);
    check_budget(ipow(field->q(), 2 * (da + db)), limits, "cp_decomposed");
    const auto as = detail::lcs_elements(field, a, k);
    const auto bs = detail::lcs_elements(field, b, k);
    const auto a_pairs = detail::commuting_pairs(as);
    const auto b_pairs = detail::commuting_pairs(bs);
    const WedgeSpace wedge{a, b, k};
    const std::size_t v = wedge.dim();

    std::vector<std::vector<Matrix>> ops(as.size());
    for (std::size_t i = 0; i < as.size(); ++i)
        for (const auto& bm : bs) ops[i].push_back(sylvester_op(as[i], bm, wedge));

    std::vector<std::vector<std::uint64_t>> by_rank(std::max(1u, limits.workers), std::vector<std::uint64_t>(v + 1, 0));
    for_each_shard(a_pairs.size(), limits.workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        Vector scratch;
        for (std::uint64_t ai = begin; ai < end; ++ai) {
            const auto [a1, a2] = a_pairs[ai];
            for (const auto& [b1, b2] : b_pairs) {
                const Matrix& t1 = ops[a1][b1];
                const Matrix& t2 = ops[a2][b2];
                scratch.assign(v * 2 * v, 0);
                for (std::size_t r = 0; r < v; ++r)
                    for (std::size_t c = 0; c < v; ++c) {
                        scratch[r * 2 * v + c] = t1(r, c);
                        scratch[r * 2 * v + v + c] = t2(r, c);
                    }
                ++by_rank[w][detail::rank_inplace(*field, scratch, v, 2 * v)];
            }
        }
    });
    const std::uint32_t q = field->q();
    bigint numerator_sum = 0;
    for (const auto& tally : by_rank)
        for (std::size_t r = 0; r <= v; ++r) numerator_sum += ipow(q, v - r) * tally[r];
    const bigint denom = ipow(q, v) * ipow(q, 2 * (da + db));
    return rational(numerator_sum, denom);
}

/**
 * |N_{a,b}(r)| for r = 0..ab, where N_{a,b}(r) is the set of pairs (A,B) of
 * strictly upper-triangular a x a and b x b matrices with rank T_{A,B} <= r.
 * Uses rank T_{A,B} = ab - <shape(A)', shape(B)'> and the shape censuses.
 */
inline std::map<int, bigint> n_rank_census(int a, int b, const FieldPtr& field, const EnumerationLimits& limits = {}) {
    const auto fa = shape_census(a, field, limits);
    const auto fb = shape_census(b, field, limits);
    std::map<int, bigint> exact;
    for (const auto& [lambda, x] : fa)
        for (const auto& [mu, y] : fb)
            exact[a * b - static_cast<int>(inner(lambda.conjugate(), mu.conjugate()))] += x * y;
    std::map<int, bigint> out;
    bigint running = 0;
    for (int r = 0; r <= a * b; ++r) {
        if (auto it = exact.find(r); it != exact.end()) running += it->second;
        out[r] = running;
    }
    return out;
}

/// The same table by computing rank T_{A,B} for every pair.
inline std::map<int, bigint> n_rank_census_direct(int a, int b, const FieldPtr& field,
                                                  const EnumerationLimits& limits = {}) {
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    const std::size_t da = upper_coordinates(ua).size(), db = upper_coordinates(ub).size();
    check_budget(ipow(field->q(), da + db), limits, "n_rank_census_direct");
    const std::uint64_t na = detail::enumeration_size(*field, da), nb = detail::enumeration_size(*field, db);
    std::vector<std::uint64_t> exact(ua * ub + 1, 0);
    for (std::uint64_t i = 0; i < na; ++i) {
        const Matrix am = upper_matrix_at(field, ua, i);
        for (std::uint64_t j = 0; j < nb; ++j) ++exact[sylvester_op(am, upper_matrix_at(field, ub, j)).rank()];
    }
    std::map<int, bigint> out;
    bigint running = 0;
    for (std::size_t r = 0; r < exact.size(); ++r) {
        running += exact[r];
        out[static_cast<int>(r)] = running;
    }
    return out;
}

/// |N(r)|^2 <= p(a)^2 p(b)^2 a! b! q^{(a-b)^2 + 2r}; returns the r that fail.
inline std::vector<int> check_rank_bound(int a, int b, std::uint32_t q, const std::map<int, bigint>& table) {
    std::vector<int> bad;
    const bigint pp = partition_count(a) * partition_count(b);
    const bigint base = pp * pp * factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b));
    for (const auto& [r, count] : table) {
        const bigint rhs = base * ipow(q, static_cast<std::uint64_t>((a - b) * (a - b) + 2 * r));
        if (count * count > rhs) bad.push_back(r);
    }
    return bad;
}

/// Pairs (A,B) with rank T_{A,B} != ab - <shape(A)', shape(B)'>.
inline std::uint64_t rank_shape_mismatches(int a, int b, const FieldPtr& field) {
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    const std::uint64_t na = detail::enumeration_size(*field, upper_coordinates(ua).size());
    const std::uint64_t nb = detail::enumeration_size(*field, upper_coordinates(ub).size());
    std::vector<Matrix> bms;
    std::vector<Partition> b_shapes;
    for (std::uint64_t j = 0; j < nb; ++j) {
        bms.push_back(upper_matrix_at(field, ub, j));
        b_shapes.push_back(shape(bms.back()).conjugate());
    }
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < na; ++i) {
        const Matrix am = upper_matrix_at(field, ua, i);
        const Partition la = shape(am).conjugate();
        for (std::uint64_t j = 0; j < nb; ++j) {
            const auto expected = static_cast<std::size_t>(a * b - inner(la, b_shapes[j]));
            if (sylvester_op(am, bms[j]).rank() != expected) ++bad;
        }
    }
    return bad;
}

/// beta_m by the recurrence beta_m = (beta_{m-1} - (1 - 2^{-m})^2) / 4.
inline rational beta_recurrence(int m) {
    if (m < 0) throw std::invalid_argument("beta: m must be nonnegative");
    rational b = 0;
    for (int i = 1; i <= m; ++i) {
        const rational t = 1 - rpow(2, -i);
        b = (b - t * t) / 4;
    }
    return b;
}

/// -1/3 - (2/3) 4^{-m} + 2^{-m} - 4^{-(m+1)} m
inline rational beta_closed(int m) {
    if (m < 0) throw std::invalid_argument("beta: m must be nonnegative");
    return rational(-1, 3) - rational(2, 3) * rpow(4, -m) + rpow(2, -m) - rpow(4, -(m + 1)) * m;
}

/// Throws std::logic_error if the two forms disagree.
inline rational beta(int m) {
    const rational r = beta_recurrence(m);
    if (r != beta_closed(m)) throw std::logic_error("beta: recurrence and closed form disagree at m = " + std::to_string(m));
    return r;
}

/// 1/6 - (13/24) 4^{-m} + 2^{-(m+1)} - 4^{-(m+1)} m, checked against (1 - 2^{-(1+m)})^2 / 2 + beta_m.
inline rational gamma(int m) {
    if (m < 0) throw std::invalid_argument("gamma: m must be nonnegative");
    const rational closed = rational(1, 6) - rational(13, 24) * rpow(4, -m) + rpow(2, -(m + 1)) - rpow(4, -(m + 1)) * m;
    const rational t = 1 - rpow(2, -(m + 1));
    if (closed != t * t / 2 + beta(m)) throw std::logic_error("gamma: closed form disagrees at m = " + std::to_string(m));
    return closed;
}

}  // namespace unitri
