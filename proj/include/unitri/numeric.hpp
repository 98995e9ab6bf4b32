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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace unitri {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint ipow(const bigint& base, std::uint64_t e) {
    bigint result = 1, b = base;
    while (e > 0) {
        if (e & 1U) result *= b;
        b *= b;
        e >>= 1U;
    }
    return result;
}

inline rational rpow(const rational& base, std::int64_t e) {
    if (e < 0) return rational(1) / rpow(base, -e);
    rational result = 1, b = base;
    auto u = static_cast<std::uint64_t>(e);
    while (u > 0) {
        if (u & 1U) result *= b;
        b *= b;
        u >>= 1U;
    }
    return result;
}

inline bigint factorial(unsigned n) {
    bigint r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

inline std::string to_string(const bigint& v) { return v.str(); }

/// "a/b", or "a" for integers.
inline std::string to_string(const rational& v) {
    const bigint num = boost::multiprecision::numerator(v);
    const bigint den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace unitri
