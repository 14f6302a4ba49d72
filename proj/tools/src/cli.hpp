/*
 * Copyright 2026 The ivg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef IVG_TOOLS_CLI_HPP
#define IVG_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivg/arena.hpp"
#include "ivg/document.hpp"
#include "ivg/error.hpp"

namespace ivg::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kBadInput = 2,
    kUnsupported = 3,
    kDisagreement = 4,
    kTooLarge = 5,
};

int exit_code(ErrorKind k);

struct SolveOptions {
    std::optional<std::int64_t> bound;
    std::uint64_t horizon_slack = 0;
};

struct Verdict {
    std::string algorithm;
    Regions regions;
    std::vector<std::pair<std::string, std::int64_t>> metadata;
};

/// Throws Error(UnsupportedObjective) for standalone parity documents.
Verdict solve_document(const GameDocument& doc, const SolveOptions& opts = {});

/// Entry point shared by the executable and the tests; args exclude argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ivg::cli

#endif
