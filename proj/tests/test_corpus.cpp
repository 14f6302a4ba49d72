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

// Golden run over the shipped corpus: every .game has an .expect sidecar.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "ivg/document.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> games()
{
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(IVG_CORPUS_DIR))
        if (e.path().extension() == ".game") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

class Corpus : public ::testing::TestWithParam<fs::path> {};

} // namespace

TEST_P(Corpus, MatchesSidecar)
{
    const fs::path game = GetParam();
    fs::path sidecar = game;
    sidecar.replace_extension(".expect");
    ASSERT_TRUE(fs::exists(sidecar)) << sidecar;
    std::ifstream in(sidecar);
    const auto expect = nlohmann::json::parse(in);
    ASSERT_TRUE(expect.contains("notes"));

    std::ostringstream out, err;
    const int code = ivg::cli::run({"solve", game.string()}, out, err);
    if (expect.contains("error")) {
        EXPECT_EQ(code, expect["exit_code"].get<int>());
        EXPECT_NE(err.str().find(expect["error"].get<std::string>()), std::string::npos) << err.str();
        return;
    }
    ASSERT_EQ(code, 0) << err.str();
    std::string winner = expect["winner"];
    for (auto& c : winner) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    EXPECT_EQ(out.str(), winner + "\n");

    // Same bytes on a second run.
    std::ostringstream again, err2;
    ivg::cli::run({"solve", game.string(), "--format", "structured"}, again, err2);
    std::ostringstream third;
    ivg::cli::run({"solve", game.string(), "--format", "structured"}, third, err2);
    EXPECT_EQ(again.str(), third.str());
}

TEST(CorpusNormalize, SupPayoffsKeepTheirWinner)
{
    for (const fs::path& game : games()) {
        std::ifstream in(game);
        std::stringstream text;
        text << in.rdbuf();
        const ivg::GameDocument doc = ivg::parse_game(text.str());
        const ivg::Payoff p = doc.objective.payoff;
        if (p != ivg::Payoff::Limsup && p != ivg::Payoff::MpSup && p != ivg::Payoff::TotalSup) continue;
        const ivg::NormalizedGame n = ivg::normalize(doc.graph, doc.objective);
        const ivg::GameDocument inf = ivg::make_document(n.graph, n.objective);
        const auto a = ivg::cli::solve_document(doc), b = ivg::cli::solve_document(inf);
        EXPECT_EQ(a.regions.winner(doc.graph.initial()), b.regions.winner(doc.graph.initial())) << game;
    }
}

INSTANTIATE_TEST_SUITE_P(Golden, Corpus, ::testing::ValuesIn(games()),
                         [](const ::testing::TestParamInfo<fs::path>& info) { return info.param.stem().string(); });
