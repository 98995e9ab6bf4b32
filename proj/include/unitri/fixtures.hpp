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
 * @file fixtures.hpp
 * @brief Committed expected values: derived.json (oracle outputs with
 * provenance) and reference.json (published worked examples).
 */

#include "unitri/matrix.hpp"
#include "unitri/numeric.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri {

using json = nlohmann::json;

#ifndef UNITRI_FIXTURES_DIR
#define UNITRI_FIXTURES_DIR "fixtures"
#endif

/// UNITRI_FIXTURES overrides the compiled-in directory.
inline std::filesystem::path fixtures_dir() {
    if (const char* env = std::getenv("UNITRI_FIXTURES")) return env;
    return UNITRI_FIXTURES_DIR;
}

inline json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return json::parse(in);
}

class FixtureSet {
public:
    FixtureSet() = default;

    static FixtureSet load(const std::filesystem::path& dir = fixtures_dir()) {
        FixtureSet set;
        set.reference_ = load_json(dir / "reference.json");
        const json derived = load_json(dir / "derived.json");
        for (const auto& entry : derived.at("fixtures")) {
            const std::string key = entry.at("key");
            if (set.derived_.contains(key)) throw std::runtime_error("duplicate fixture key " + key);
            set.derived_[key] = entry.at("value");
        }
        return set;
    }

    /// Oracle output committed under key.
    const json& derived(const std::string& key) const {
        const auto it = derived_.find(key);
        if (it == derived_.end()) throw std::out_of_range("missing fixture " + key);
        return *it;
    }

    bool has_derived(const std::string& key) const { return derived_.contains(key); }

    const json& reference(const std::string& key) const { return reference_.at(key); }

private:
    json derived_ = json::object();
    json reference_ = json::object();
};

inline bigint json_bigint(const json& v) { return bigint(v.get<std::string>()); }

/// Rows of whitespace-separated entries; "a/b" is read as a times the inverse of b.
inline Matrix matrix_from_json(const json& rows, const FieldPtr& field) {
    const std::size_t n = rows.size();
    std::vector<std::vector<elem>> cells;
    for (const auto& row : rows) {
        std::vector<elem> out;
        std::istringstream in(row.get<std::string>());
        std::string token;
        while (in >> token) {
            const auto slash = token.find('/');
            if (slash == std::string::npos) {
                out.push_back(field->from_int(std::stoll(token)));
            } else {
                const elem num = field->from_int(std::stoll(token.substr(0, slash)));
                const elem den = field->from_int(std::stoll(token.substr(slash + 1)));
                out.push_back(field->div(num, den));
            }
        }
        cells.push_back(std::move(out));
    }
    Matrix m(field, n, n ? cells.front().size() : 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (cells[i].size() != m.cols()) throw std::invalid_argument("matrix_from_json: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = cells[i][j];
    }
    return m;
}

}  // namespace unitri
