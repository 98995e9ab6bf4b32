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
 * @file census.hpp
 * @brief Exhaustive counts over the strictly upper-triangular matrices of
 * size n: class numbers by Burnside, Jordan-type strata, commuting-pair
 * strata, and the containment and clearing checks that back the gap-array
 * bounds.
 *
 * Matrices are enumerated by their strictly-upper coordinates in row-major
 * order, the first coordinate most significant, so a contiguous index range
 * is a fixed-prefix shard.
 */

#include "unitri/gap_array.hpp"
#include "unitri/jordan.hpp"
#include "unitri/matrix.hpp"
#include "unitri/numeric.hpp"
#include "unitri/parallel.hpp"
#include "unitri/partition.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unitri {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
    bigint budget = bigint(1) << 34;
    bool override_budget = false;
    unsigned workers = 1;
};

inline void check_budget(const bigint& size, const EnumerationLimits& limits, const std::string& what) {
    if (!limits.override_budget && size > limits.budget)
        throw BudgetExceeded(what + ": enumeration size " + size.str() + " exceeds the budget " +
                             limits.budget.str());
}

/// (row, col) of each strictly-upper coordinate, row-major.
inline std::vector<std::pair<std::size_t, std::size_t>> upper_coordinates(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

/// Index of each matrix position within the strictly-upper coordinates, or npos.
inline std::vector<std::size_t> upper_index(std::size_t n) {
    std::vector<std::size_t> idx(n * n, static_cast<std::size_t>(-1));
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) idx[i * n + j] = c++;
    return idx;
}

/// The strictly upper-triangular matrix with the given enumeration index.
inline Matrix upper_matrix_at(const FieldPtr& field, std::size_t n, std::uint64_t index) {
    const auto coords = upper_coordinates(n);
    Matrix m(field, n, n);
    for (std::size_t c = coords.size(); c-- > 0;) {
        m(coords[c].first, coords[c].second) = static_cast<elem>(index % field->q());
        index /= field->q();
    }
    return m;
}

namespace detail {

/// Operator X -> AX - XA from strictly-upper coordinates to strictly-upper outputs.
inline void upper_commutator_operator(const Matrix& a, const std::vector<std::pair<std::size_t, std::size_t>>& coords,
                                      const std::vector<std::size_t>& index, Vector& out) {
    const Field& f = *a.field();
    const std::size_t n = a.rows(), d = coords.size();
    out.assign(d * d, 0);
    for (std::size_t c = 0; c < d; ++c) {
        const auto [p, q] = coords[c];
        for (std::size_t i = 0; i < p; ++i) {
            const elem v = a(i, p);
            if (v != 0) {
                elem& cell = out[index[i * n + q] * d + c];
                cell = f.add(cell, v);
            }
        }
        for (std::size_t j = q + 1; j < n; ++j) {
            const elem v = a(q, j);
            if (v != 0) {
                elem& cell = out[index[p * n + j] * d + c];
                cell = f.sub(cell, v);
            }
        }
    }
}

inline void require_strictly_upper(const Matrix& a, const char* who) {
    if (!a.is_square() || !a.is_strictly_upper())
        throw std::invalid_argument(std::string(who) + ": matrix is not strictly upper-triangular");
}

inline std::uint64_t enumeration_size(const Field& f, std::size_t coordinates) {
    const bigint size = ipow(f.q(), coordinates);
    if (size > bigint(std::numeric_limits<std::uint64_t>::max() / 2))
        throw BudgetExceeded("enumeration size does not fit in 64 bits");
    return static_cast<std::uint64_t>(size);
}

/// Odometer over strictly-upper coordinates, last coordinate fastest.
inline void advance_upper(Matrix& m, const std::vector<std::pair<std::size_t, std::size_t>>& coords) {
    const elem q = m.field()->q();
    for (std::size_t c = coords.size(); c-- > 0;) {
        elem& e = m(coords[c].first, coords[c].second);
        if (++e < q) return;
        e = 0;
    }
}

}  // namespace detail

/// dim C_U(A); the centralizer subgroup has order q^dim.
inline std::size_t centralizer_dim_u(const Matrix& a) {
    detail::require_strictly_upper(a, "centralizer_dim_u");
    const auto coords = upper_coordinates(a.rows());
    Vector op;
    detail::upper_commutator_operator(a, coords, upper_index(a.rows()), op);
    return coords.size() - detail::rank_inplace(*a.field(), op, coords.size(), coords.size());
}

/// C_U(A) as a subspace of all n x n matrices (flattened row-major).
inline Subspace centralizer_subspace_u(const Matrix& a) {
    detail::require_strictly_upper(a, "centralizer_subspace_u");
    const std::size_t n = a.rows();
    const auto coords = upper_coordinates(n);
    Vector op;
    detail::upper_commutator_operator(a, coords, upper_index(n), op);
    const Subspace kernel = Matrix(a.field(), coords.size(), coords.size(), op).nullspace();
    std::vector<Vector> lifted;
    for (const auto& v : kernel.basis()) {
        Vector w(n * n, 0);
        for (std::size_t c = 0; c < coords.size(); ++c) w[coords[c].first * n + coords[c].second] = v[c];
        lifted.push_back(std::move(w));
    }
    return Subspace::span(a.field(), n * n, lifted);
}

struct ShapeStratum {
    bigint matrices;  ///< F_lambda(q)
    bigint comm;      ///< comm(lambda)
};

struct CensusRecord {
    int n = 0;
    std::uint32_t q = 0;
    bigint total_comm_pairs;
    bigint class_count;
    std::map<Partition, ShapeStratum> per_shape;
    std::optional<std::map<std::pair<Partition, Partition>, bigint>> per_shape_pair;
};

/// Throws std::logic_error if a Burnside or summation invariant fails.
inline void check_census_invariants(const CensusRecord& rec) {
    const bigint group_order = ipow(rec.q, static_cast<std::uint64_t>(binom2(rec.n)));
    if (rec.class_count * group_order != rec.total_comm_pairs)
        throw std::logic_error("census: class_count * |U| != total_comm_pairs");
    bigint f_sum = 0, comm_sum = 0;
    for (const auto& [lambda, s] : rec.per_shape) {
        f_sum += s.matrices;
        comm_sum += s.comm;
    }
    if (f_sum != group_order) throw std::logic_error("census: shape strata do not sum to |U|");
    if (comm_sum != rec.total_comm_pairs) throw std::logic_error("census: comm strata do not sum to the total");
    if (rec.per_shape_pair) {
        std::map<Partition, bigint> row_sums;
        for (const auto& [key, count] : *rec.per_shape_pair) {
            row_sums[key.first] += count;
            const auto mirror = rec.per_shape_pair->find({key.second, key.first});
            if (mirror == rec.per_shape_pair->end() || mirror->second != count)
                throw std::logic_error("census: comm(lambda,mu) != comm(mu,lambda) for " + key.first.to_string() +
                                       ", " + key.second.to_string());
        }
        for (const auto& [lambda, s] : rec.per_shape) {
            const auto it = row_sums.find(lambda);
            if ((it == row_sums.end() ? bigint(0) : it->second) != s.comm)
                throw std::logic_error("census: pair strata of " + lambda.to_string() + " do not sum to comm");
        }
    }
}

namespace detail {

struct WorkerTally {
    std::map<Partition, std::vector<std::uint64_t>> by_dim;  // shape -> count of matrices per centralizer dim
    std::map<std::pair<Partition, Partition>, std::uint64_t> pairs;
};

}  // namespace detail

/**
 * Full census: every strictly upper-triangular A contributes q^{dim C_U(A)}
 * to comm(shape(A)). With pairs set, every B in C_U(A) is also enumerated
 * and classified by shape.
 */
inline CensusRecord comm_strata(int n, const FieldPtr& field, bool pairs, const EnumerationLimits& limits = {}) {
    if (n < 1) throw std::invalid_argument("census: n must be positive");
    const auto un = static_cast<std::size_t>(n);
    const auto coords = upper_coordinates(un);
    const auto index = upper_index(un);
    const std::size_t d = coords.size();
    const bigint group_order = ipow(field->q(), d);
    check_budget(group_order, limits, "census");
    const std::uint64_t total = detail::enumeration_size(*field, d);
    if (pairs) check_budget(group_order, limits, "census pair enumeration per matrix");

    std::vector<detail::WorkerTally> tallies(std::max(1u, limits.workers));
    for_each_shard(total, limits.workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        auto& tally = tallies[w];
        Vector op;
        Matrix a = upper_matrix_at(field, un, begin);
        for (std::uint64_t idx = begin; idx < end; ++idx, detail::advance_upper(a, coords)) {
            detail::upper_commutator_operator(a, coords, index, op);
            const std::size_t dim = d - detail::rank_inplace(*field, op, d, d);
            const Partition lambda = shape(a);
            auto& counts = tally.by_dim[lambda];
            if (counts.empty()) counts.assign(d + 1, 0);
            ++counts[dim];
            if (!pairs) continue;
            const auto kernel = centralizer_subspace_u(a).basis();
            std::vector<elem> coeff(kernel.size(), 0);
            while (true) {
                Matrix b(field, un, un);
                for (std::size_t k = 0; k < kernel.size(); ++k) {
                    if (coeff[k] == 0) continue;
                    for (std::size_t c = 0; c < d; ++c) {
                        const std::size_t pos = coords[c].first * un + coords[c].second;
                        const elem v = kernel[k][pos];
                        if (v != 0) {
                            elem& cell = b(coords[c].first, coords[c].second);
                            cell = field->add(cell, field->mul(coeff[k], v));
                        }
                    }
                }
                ++tally.pairs[{lambda, shape(b)}];
                std::size_t k = 0;
                while (k < coeff.size() && ++coeff[k] == field->q()) coeff[k++] = 0;
                if (k == coeff.size()) break;
            }
        }
    });

    CensusRecord rec;
    rec.n = n;
    rec.q = field->q();
    std::vector<bigint> qpow(d + 1);
    for (std::size_t k = 0; k <= d; ++k) qpow[k] = ipow(field->q(), k);
    for (const auto& tally : tallies) {
        for (const auto& [lambda, counts] : tally.by_dim) {
            auto& s = rec.per_shape[lambda];
            for (std::size_t k = 0; k <= d; ++k) {
                s.matrices += counts[k];
                s.comm += qpow[k] * counts[k];
            }
        }
        if (pairs) {
            if (!rec.per_shape_pair) rec.per_shape_pair.emplace();
            for (const auto& [key, count] : tally.pairs) (*rec.per_shape_pair)[key] += count;
        }
    }
    for (const auto& [lambda, s] : rec.per_shape) rec.total_comm_pairs += s.comm;
    if (rec.total_comm_pairs % group_order != 0)
        throw std::logic_error("census: Burnside sum is not divisible by |U|");
    rec.class_count = rec.total_comm_pairs / group_order;
    check_census_invariants(rec);
    return rec;
}

/// k(U_n(q)) with the shape strata filled in.
inline CensusRecord class_count(int n, const FieldPtr& field, const EnumerationLimits& limits = {}) {
    return comm_strata(n, field, false, limits);
}

/// F_lambda(q) for every lambda of n.
inline std::map<Partition, bigint> shape_census(int n, const FieldPtr& field, const EnumerationLimits& limits = {}) {
    std::map<Partition, bigint> out;
    for (const auto& [lambda, s] : class_count(n, field, limits).per_shape) out[lambda] = s.matrices;
    return out;
}

/// A failed inequality, with the shape and both sides.
struct BoundWitness {
    Partition lambda;
    bigint lhs;
    bigint rhs;
};

/// F_lambda(q) <= f^lambda q^{C(n,2) - n(lambda)} for every stratum.
inline std::vector<BoundWitness> check_yip_bound(const CensusRecord& rec) {
    std::vector<BoundWitness> bad;
    for (const auto& [lambda, s] : rec.per_shape) {
        const bigint rhs = hook_count(lambda) * ipow(rec.q, static_cast<std::uint64_t>(binom2(rec.n) - n_stat(lambda)));
        if (s.matrices > rhs) bad.push_back({lambda, s.matrices, rhs});
    }
    return bad;
}

/// h(lambda') as an integer.
inline std::int64_t h_of_conjugate(const Partition& lambda) {
    const rational h = h_value(RationalVector::from_partition(lambda.conjugate()));
    return static_cast<std::int64_t>(numerator(h));
}

/// comm(lambda)^2 <= n! q^{n^2 + h(lambda')} for every stratum.
inline std::vector<BoundWitness> check_h_bound(const CensusRecord& rec) {
    std::vector<BoundWitness> bad;
    const bigint nf = factorial(static_cast<unsigned>(rec.n));
    for (const auto& [lambda, s] : rec.per_shape) {
        const std::int64_t e = static_cast<std::int64_t>(rec.n) * rec.n + h_of_conjugate(lambda);
        const bigint rhs = nf * ipow(rec.q, static_cast<std::uint64_t>(e));
        const bigint lhs = s.comm * s.comm;
        if (lhs > rhs) bad.push_back({lambda, lhs, rhs});
    }
    return bad;
}

inline bigint ceil_sqrt(const bigint& x) {
    bigint s = boost::multiprecision::sqrt(x);
    return s * s == x ? s : s + 1;
}

/// p(n) ceil(sqrt(n!)) q^{ceil(n^2/6) + ceil(n/2)}
inline bigint class_count_ceiling(int n, std::uint32_t q) {
    const std::uint64_t e = static_cast<std::uint64_t>((n * n + 5) / 6 + (n + 1) / 2);
    return partition_count(n) * ceil_sqrt(factorial(static_cast<unsigned>(n))) * ipow(q, e);
}

struct WorstGapViolation {
    std::uint64_t index = 0;  ///< enumeration index of A
    Matrix a;
    Matrix x;
    Partition lambda;
    Matrix centralizing;  ///< basis element B of C_U(A)
    Matrix conjugated;    ///< X B X^{-1}
};

struct WorstGapReport {
    int n = 0;
    std::uint32_t q = 0;
    std::uint64_t matrices = 0;
    std::uint64_t basis_elements = 0;
    std::uint64_t violation_count = 0;
    std::vector<WorstGapViolation> violations;  ///< the first few, by enumeration index
    bool passed() const { return violation_count == 0; }
};

/// X_A C_U(A) X_A^{-1} is contained in C(G^lambda) for every A.
inline WorstGapReport verify_worst_gap(int n, const FieldPtr& field, const EnumerationLimits& limits = {},
                                       std::size_t keep = 8) {
    if (n < 1) throw std::invalid_argument("verify_worst_gap: n must be positive");
    const auto un = static_cast<std::size_t>(n);
    const auto coords = upper_coordinates(un);
    check_budget(ipow(field->q(), coords.size()), limits, "verify_worst_gap");
    const std::uint64_t total = detail::enumeration_size(*field, coords.size());

    struct Local {
        std::uint64_t basis_elements = 0, violation_count = 0;
        std::vector<WorstGapViolation> violations;
    };
    std::vector<Local> locals(std::max(1u, limits.workers));
    for_each_shard(total, limits.workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        auto& local = locals[w];
        std::map<Partition, GapArray> worst;
        Matrix a = upper_matrix_at(field, un, begin);
        for (std::uint64_t idx = begin; idx < end; ++idx, detail::advance_upper(a, coords)) {
            const Conjugator conj = canonical_conjugator(a);
            auto it = worst.find(conj.lambda);
            if (it == worst.end()) it = worst.emplace(conj.lambda, g_worst(conj.lambda)).first;
            const Matrix x_inv = conj.X.inverse();
            for (const auto& v : centralizer_subspace_u(a).basis()) {
                ++local.basis_elements;
                const Matrix b(field, un, un, v);
                const Matrix c = conj.X * b * x_inv;
                if (!membership(c, it->second)) {
                    ++local.violation_count;
                    local.violations.push_back({idx, a, conj.X, conj.lambda, b, c});
                }
            }
        }
    });

    WorstGapReport report{n, field->q(), total, 0, 0, {}};
    for (auto& local : locals) {
        report.basis_elements += local.basis_elements;
        report.violation_count += local.violation_count;
        for (auto& v : local.violations) report.violations.push_back(std::move(v));
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const auto& l, const auto& r) { return l.index < r.index; });
    if (report.violations.size() > keep)
        report.violations.erase(report.violations.begin() + static_cast<std::ptrdiff_t>(keep), report.violations.end());
    return report;
}

struct ClearingFailure {
    Partition mu;
    GapArray g;
    Matrix a;
    int r = 0;
    std::size_t lhs_dim = 0;
    std::size_t rhs_dim = 0;
};

struct ClearingReport {
    int n = 0;
    std::uint32_t q = 0;
    std::uint64_t checked = 0;
    std::uint64_t skipped_not_r_valid = 0;
    std::uint64_t failure_count = 0;
    std::vector<ClearingFailure> failures;  ///< the first few
    bool passed() const { return failure_count == 0 && checked > 0; }
};

/**
 * For all mu of n-1, all A with A|_{n-1} = J_mu and arbitrary last column,
 * and all gap arrays G of type mu that are r-valid for the extended block r
 * of A (any G when a new block is created), checks
 *   Y_A (overline{C(G)} cap C_M(A)) Y_A^{-1} = C(psi_r(G)).
 */
inline ClearingReport verify_clearing_lemma(int n, const FieldPtr& field, const PsiOptions& psi_options = {},
                                            std::size_t keep = 8) {
    if (n < 2) throw std::invalid_argument("verify_clearing_lemma: n must be at least 2");
    const auto un = static_cast<std::size_t>(n);
    ClearingReport report{n, field->q(), 0, 0, 0, {}};
    const std::uint64_t completions = detail::enumeration_size(*field, un - 1);
    for (const auto& mu : partitions_of(n - 1)) {
        std::vector<Matrix> inputs;
        std::vector<Subspace> centralizers;
        std::vector<ConjugationTrace> traces;
        std::vector<Matrix> ys;
        for (std::uint64_t c = 0; c < completions; ++c) {
            Matrix a = jordan_matrix(mu, field).plus_one();
            a(un - 1, un - 1) = 0;
            std::uint64_t rest = c;
            for (std::size_t i = un - 1; i-- > 0;) {
                a(i, un - 1) = static_cast<elem>(rest % field->q());
                rest /= field->q();
            }
            centralizers.push_back(centralizer(a));
            traces.push_back(conjugation_level(a, mu));
            ys.push_back(traces.back().Y());
            inputs.push_back(std::move(a));
        }
        for_each_gap_array(mu, [&](const GapArray& g) {
            const Subspace lifted = overline(basis(g, field), un);
            for (std::size_t k = 0; k < inputs.size(); ++k) {
                const int r = traces[k].r;
                if (r <= mu.length() && !is_r_valid(g, r)) {
                    ++report.skipped_not_r_valid;
                    continue;
                }
                ++report.checked;
                const Subspace lhs = conjugate_subspace(lifted.intersect(centralizers[k]), ys[k]);
                const Subspace rhs = basis(psi(g, r, psi_options).array, field);
                if (!(lhs == rhs)) {
                    ++report.failure_count;
                    if (report.failures.size() < keep)
                        report.failures.push_back({mu, g, inputs[k], r, lhs.dim(), rhs.dim()});
                }
            }
        });
    }
    return report;
}

/// Coefficients c_0, c_1, ... of a polynomial over the rationals.
using RationalPolynomial = std::vector<rational>;

inline int degree(const RationalPolynomial& p) {
    for (std::size_t k = p.size(); k-- > 0;)
        if (p[k] != 0) return static_cast<int>(k);
    return -1;
}

inline rational evaluate(const RationalPolynomial& p, const rational& x) {
    rational acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

/// The unique polynomial of degree < points.size() through the points (Newton form).
inline RationalPolynomial interpolate(const std::vector<std::pair<rational, rational>>& points) {
    const std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first) throw std::invalid_argument("interpolate: repeated abscissa");
    std::vector<rational> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    RationalPolynomial poly(m, 0);
    RationalPolynomial basis_poly{1};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < basis_poly.size(); ++k) poly[k] += dd[i] * basis_poly[k];
        RationalPolynomial next(basis_poly.size() + 1, 0);
        for (std::size_t k = 0; k < basis_poly.size(); ++k) {
            next[k + 1] += basis_poly[k];
            next[k] -= basis_poly[k] * points[i].first;
        }
        basis_poly = std::move(next);
    }
    poly.resize(static_cast<std::size_t>(std::max(0, degree(poly) + 1)));
    return poly;
}

/// Nearest integer to (n^2 + 6n)/12.
inline int expected_class_degree(int n) { return (n * n + 6 * n + 6) / 12; }

struct ClassPolynomial {
    int n = 0;
    RationalPolynomial coefficients;
    int degree = -1;
    int expected_degree = 0;
    bool integer_coefficients = false;
    bool overdetermined = false;  ///< points >= degree + 2, so one point is predicted, not fitted
    bool degree_matches = false;
};

/**
 * Interpolates k(U_n(q)) through the given (q, count) samples. Throws
 * std::invalid_argument when fewer than expected_degree + 2 samples are
 * supplied, since the degree could not be certified.
 */
inline ClassPolynomial interpolate_class_polynomial(int n, const std::vector<std::uint32_t>& qs,
                                                    const std::vector<bigint>& counts) {
    if (qs.size() != counts.size()) throw std::invalid_argument("interpolate_class_polynomial: size mismatch");
    for (auto q : qs)
        if (!Field::prime_power(q)) throw std::invalid_argument("interpolate_class_polynomial: q is not a prime power");
    ClassPolynomial out;
    out.n = n;
    out.expected_degree = expected_class_degree(n);
    if (qs.size() < static_cast<std::size_t>(out.expected_degree) + 2)
        throw std::invalid_argument("interpolate_class_polynomial: need at least " +
                                    std::to_string(out.expected_degree + 2) + " points to certify degree " +
                                    std::to_string(out.expected_degree));
    std::vector<std::pair<rational, rational>> points;
    for (std::size_t i = 0; i < qs.size(); ++i) points.emplace_back(rational(qs[i]), rational(counts[i]));
    out.coefficients = interpolate(points);
    out.degree = unitri::degree(out.coefficients);
    out.integer_coefficients = true;
    for (const auto& c : out.coefficients)
        if (denominator(c) != 1) out.integer_coefficients = false;
    out.overdetermined = qs.size() >= static_cast<std::size_t>(out.degree) + 2;
    out.degree_matches = out.degree == out.expected_degree;
    return out;
}

/// "q^2 + q - 1" style rendering in the variable q.
inline std::string polynomial_to_string(const RationalPolynomial& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        const rational& c = p[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        const rational mag = negative ? rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = mag == 1 && k > 0;
        if (!unit) out += to_string(mag);
        if (k > 0) out += std::string(unit ? "" : "*") + "q" + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out;
}

}  // namespace unitri
