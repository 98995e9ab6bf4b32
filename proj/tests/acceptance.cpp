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

// Acceptance driver: one line per criterion, nonzero exit on any failure.
//
//   acceptance [--profile quick|full] [--workers N]

#include "unitri/verify.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    unitri::Profile profile = unitri::Profile::full;
    unsigned workers = unitri::default_workers();
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--profile" && i + 1 < argc) {
            const std::string value = argv[++i];
            if (value != "quick" && value != "full") {
                std::cerr << "--profile: expected quick or full\n";
                return 2;
            }
            profile = value == "quick" ? unitri::Profile::quick : unitri::Profile::full;
        } else if (arg == "--workers" && i + 1 < argc) {
            workers = static_cast<unsigned>(std::stoul(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--profile quick|full] [--workers N]\n";
            return 2;
        }
    }

    const auto fixtures = unitri::FixtureSet::load();
    int failed = 0;
    for (const auto& r : unitri::run_acceptance(profile, fixtures, workers)) {
        std::cout << unitri::format_result(r) << std::endl;
        if (r.ran && !r.passed) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
    return failed ? 1 : 0;
}
