// SPDX-License-Identifier: Apache-2.0
//
// rissec: Monte-Carlo secrecy simulator for RIS-assisted wiretap channels
// Copyright (C) 2026 The rissec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Acceptance runner: one pass/fail line per criterion, exit 0 iff all selected pass.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rissec/acceptance.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"rissec acceptance suite"};
    rissec::acceptance::Options opts;
    std::vector<std::string> only;
    bool list = false;
    app.add_option("--trials", opts.trials, "Trials per sweep point")->capture_default_str();
    app.add_option("--seed", opts.seed, "Master seed")->capture_default_str();
    app.add_option("--workers", opts.workers, "Worker threads")->capture_default_str();
    app.add_option("--only", only, "Run only this criterion (repeatable)");
    app.add_flag("--list", list, "List criterion ids");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& c : rissec::acceptance::criteria())
            std::cout << c.id << "\n";
        return 0;
    }
    const auto results = rissec::acceptance::run(opts, only, [](const rissec::acceptance::CriterionResult& r) {
        std::cout << rissec::acceptance::format(r) << std::endl;
    });
    if (results.empty()) {
        std::cerr << "no criterion selected\n";
        return 1;
    }
    int failed = 0;
    for (const auto& r : results)
        failed += r.passed ? 0 : 1;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
