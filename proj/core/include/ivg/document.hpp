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

#ifndef IVG_DOCUMENT_HPP
#define IVG_DOCUMENT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ivg/arena.hpp"
#include "ivg/parity.hpp"
#include "ivg/totalsum.hpp"

namespace ivg {

/// A parsed game document. `priorities` is filled only for parity documents.
struct GameDocument {
    GameGraph graph;
    Objective objective;
    std::vector<Priority> priorities;
    std::string comment;

    bool is_parity() const { return objective.payoff == Payoff::Parity; }
    ParityGame parity_game() const;
};

/// Parses the JSON game format:
///   {"vertices": [{"id", "owner", ["priority"]}], "edges": [{"src", "dst", "weight"}],
///    "initial": id, "objective": {"payoff", ["lambda"], "intervals": [...]}, ["comment"]}
/// Throws Error(MalformedDocument | DeadEndVertex | UnknownVertexReference |
///              LambdaOutOfRange | EmptyInterval).
GameDocument parse_game(std::string_view text);

/// Inverse of parse_game; output is deterministic (two-space indented JSON).
std::string serialize_game(const GameDocument& doc);

GameDocument make_document(GameGraph g, Objective o, std::string comment = {});
GameDocument make_parity_document(const ParityGame& p, std::string comment = {});

/// One-counter parity games use `payoff: "ocpg-parity"` and list zero-test
/// edges under "zero_edges".
OneCounterParityGame parse_ocpg(std::string_view text);
std::string serialize_ocpg(const OneCounterParityGame& game, std::string_view comment = {});

} // namespace ivg

#endif
