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
 * @file field.hpp
 * @brief Finite fields F_q, q = p^k, with a canonical integer encoding.
 *
 * An element of F_{p^k} is stored as the integer sum c_i p^i, where
 * c_0 + c_1 x + ... + c_{k-1} x^{k-1} is its representative modulo the
 * field's defining polynomial. For k = 1 the encoding is the residue itself.
 * The defining polynomial is the lexicographically smallest monic irreducible
 * of degree k, comparing coefficients from the constant term upward.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri {

/// Encoded field element. Only meaningful together with its Field.
using elem = std::uint32_t;

namespace detail {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, constant term first.
using poly = std::vector<int>;

inline void trim(poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int inv_mod(int a, int p) {
    // extended Euclid
    int t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        const int quot = r / new_r;
        int tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod: element is not invertible");
    return t < 0 ? t + p : t;
}

// Remainder of f modulo g (g nonzero) over F_p.
inline poly poly_mod(poly f, const poly& g, int p) {
    trim(f);
    const int dg = static_cast<int>(g.size()) - 1;
    const int lead_inv = inv_mod(g.back(), p);
    while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
        const int shift = static_cast<int>(f.size()) - 1 - dg;
        const int c = f.back() * lead_inv % p;
        for (int i = 0; i <= dg; ++i) {
            f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
        }
        trim(f);
    }
    return f;
}

// Polynomial whose coefficients are the base-p digits of code.
inline poly decode_poly(std::int64_t code, int p, int len) {
    poly f(len, 0);
    for (int i = 0; i < len; ++i) {
        f[i] = static_cast<int>(code % p);
        code /= p;
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const poly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            poly g = decode_poly(code, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/**
 * The field F_q. Immutable after construction and shared through FieldPtr.
 *
 * Multiplication goes through discrete log tables; for q <= 256 full
 * addition and multiplication tables are also kept.
 */
class Field {
public:
    /// make_field: throws std::invalid_argument for non-prime p, k < 1, or q > 2^16.
    static std::shared_ptr<const Field> make(int p, int k = 1) {
        return std::shared_ptr<const Field>(new Field(p, k));
    }

    /// Field of order q for a prime power q.
    static std::shared_ptr<const Field> make_order(std::int64_t q) {
        const auto pk = prime_power(q);
        if (!pk) throw std::invalid_argument("q=" + std::to_string(q) + " is not a prime power");
        return make(pk->first, pk->second);
    }

    /// (p, k) with q = p^k, or nullopt when q is not a prime power.
    static std::optional<std::pair<int, int>> prime_power(std::int64_t q) {
        if (q < 2) return std::nullopt;
        std::int64_t p = 2;
        while (p * p <= q && q % p != 0) ++p;
        if (q % p != 0) p = q;
        int k = 0;
        while (q % p == 0) {
            q /= p;
            ++k;
        }
        if (q != 1) return std::nullopt;
        return std::make_pair(static_cast<int>(p), k);
    }

    int p() const { return p_; }
    int k() const { return k_; }
    std::uint32_t q() const { return q_; }
    bool is_prime_field() const { return k_ == 1; }

    /// Monic irreducible modulus, constant term first; empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    /// "q=<p^k>"
    std::string name() const { return "q=" + std::to_string(q_); }

    bool contains(elem a) const { return a < q_; }

    elem add(elem a, elem b) const {
        if (small_) return add_table_[a * q_ + b];
        if (k_ == 1) {
            const elem s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        return digitwise(a, b, +1);
    }

    elem neg(elem a) const { return neg_table_[a]; }

    elem sub(elem a, elem b) const { return add(a, neg_table_[b]); }

    elem mul(elem a, elem b) const {
        if (small_) return mul_table_[a * q_ + b];
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }

    /// Inverse by extended Euclid (k = 1) or a^{q-2} (k > 1). Throws on 0.
    elem inv(elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
        if (k_ == 1) return static_cast<elem>(detail::inv_mod(static_cast<int>(a), p_));
        return pow(a, q_ - 2);
    }

    elem div(elem a, elem b) const { return mul(a, inv(b)); }

    elem pow(elem a, std::uint64_t e) const {
        elem result = 1;
        while (e > 0) {
            if (e & 1U) result = mul(result, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return result;
    }

    /// Image of an integer in the prime subfield.
    elem from_int(std::int64_t v) const {
        std::int64_t r = v % p_;
        if (r < 0) r += p_;
        return static_cast<elem>(r);
    }

    /// All q elements in increasing encoding order.
    std::vector<elem> elements() const {
        std::vector<elem> out(q_);
        for (elem a = 0; a < q_; ++a) out[a] = a;
        return out;
    }

    /// Multiplicative order of a nonzero element.
    std::uint32_t order(elem a) const {
        if (a == 0) throw std::domain_error("order of zero");
        std::uint32_t k = 1;
        for (elem x = a; x != 1; x = mul(x, a)) ++k;
        return k;
    }

    elem primitive_element() const { return generator_; }

    bool operator==(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

private:
    Field(int p, int k) : p_(p), k_(k) {
        if (!detail::is_prime(p)) throw std::invalid_argument("make_field: p=" + std::to_string(p) + " is not prime");
        if (k < 1) throw std::invalid_argument("make_field: extension degree must be >= 1");
        std::uint64_t q = 1;
        for (int i = 0; i < k; ++i) {
            q *= static_cast<std::uint64_t>(p);
            if (q > (1U << 16U)) throw std::invalid_argument("make_field: q exceeds 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);
        if (k > 1) modulus_ = smallest_irreducible();
        build_tables();
    }

    std::vector<int> smallest_irreducible() const {
        // Lexicographic from the constant term: c_0 is the most significant digit.
        const std::uint32_t count = q_;
        for (std::uint32_t t = 0; t < count; ++t) {
            detail::poly f(k_ + 1, 0);
            std::uint32_t rest = t;
            for (int i = k_ - 1; i >= 0; --i) {
                f[i] = static_cast<int>(rest % p_);
                rest /= p_;
            }
            f[k_] = 1;
            if (detail::is_irreducible(f, p_)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    elem digitwise(elem a, elem b, int sign) const {
        elem out = 0, scale = 1;
        for (int i = 0; i < k_; ++i) {
            const int da = static_cast<int>(a % p_), db = static_cast<int>(b % p_);
            a /= p_;
            b /= p_;
            const int d = ((da + sign * db) % p_ + p_) % p_;
            out += static_cast<elem>(d) * scale;
            scale *= p_;
        }
        return out;
    }

    // Product via polynomial arithmetic; used only to build tables.
    elem slow_mul(elem a, elem b) const {
        if (k_ == 1) return static_cast<elem>((static_cast<std::uint64_t>(a) * b) % q_);
        const auto fa = detail::decode_poly(a, p_, k_);
        const auto fb = detail::decode_poly(b, p_, k_);
        detail::poly prod(2 * k_ - 1, 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
        const auto r = detail::poly_mod(prod, modulus_, p_);
        elem out = 0, scale = 1;
        for (int c : r) {
            out += static_cast<elem>(c) * scale;
            scale *= p_;
        }
        return out;
    }

    void build_tables() {
        neg_table_.resize(q_);
        for (elem a = 0; a < q_; ++a) neg_table_[a] = k_ == 1 ? (a == 0 ? 0 : q_ - a) : digitwise(0, a, -1);

        // Generator by exhaustive order search.
        generator_ = 0;
        for (elem g = 1; g < q_; ++g) {
            std::uint32_t ord = 1;
            for (elem x = g; x != 1; x = slow_mul(x, g)) ++ord;
            if (ord == q_ - 1) {
                generator_ = g;
                break;
            }
        }
        exp_.assign(q_, 0);
        log_.assign(q_, 0);
        elem x = 1;
        for (std::uint32_t e = 0; e + 1 < q_; ++e) {
            exp_[e] = x;
            log_[x] = e;
            x = slow_mul(x, generator_);
        }
        exp_[q_ - 1] = 1;

        small_ = q_ <= 256;
        if (small_) {
            add_table_.resize(static_cast<std::size_t>(q_) * q_);
            mul_table_.resize(static_cast<std::size_t>(q_) * q_);
            for (elem a = 0; a < q_; ++a) {
                for (elem b = 0; b < q_; ++b) {
                    add_table_[a * q_ + b] = k_ == 1 ? (a + b) % q_ : digitwise(a, b, +1);
                    mul_table_[a * q_ + b] = slow_mul(a, b);
                }
            }
        }
    }

    int p_;
    int k_;
    std::uint32_t q_ = 0;
    std::vector<int> modulus_;
    elem generator_ = 0;
    bool small_ = false;
    std::vector<elem> neg_table_;
    std::vector<elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(int p, int k = 1) { return Field::make(p, k); }

/// Field element bound to its field; arithmetic across different fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, elem value) : field_(std::move(field)), value_(value) {
        if (!field_ || !field_->contains(value_))
            throw std::invalid_argument("FieldElement: encoding out of range");
    }

    const FieldPtr& field() const { return field_; }
    elem value() const { return value_; }

    FieldElement operator+(const FieldElement& o) const { return {field_, field_->add(value_, check(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, field_->sub(value_, check(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, field_->mul(value_, check(o))}; }
    FieldElement operator/(const FieldElement& o) const { return {field_, field_->div(value_, check(o))}; }
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement inv() const { return {field_, field_->inv(value_)}; }

    bool operator==(const FieldElement& o) const { return value_ == check(o); }

private:
    elem check(const FieldElement& o) const {
        if (field_ != o.field_ && !(*field_ == *o.field_))
            throw std::invalid_argument("FieldElement: operands belong to different fields");
        return o.value_;
    }

    FieldPtr field_;
    elem value_;
};

}  // namespace unitri
