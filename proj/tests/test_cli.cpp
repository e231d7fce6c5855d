/*
 * Copyright 2026 The egrl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace egrl;

namespace {

struct Result {
    int rc;
    std::string out, err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int rc = cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string tmp_path(const std::string& name) { return (std::filesystem::path(EGRL_TEST_TMPDIR) / name).string(); }

const std::vector<std::string> kGoldenGf9 = {"--q", "9", "--mod", "2,1,1", "--k", "5", "--b", "2",
                                             "--M", "1,1,2,1", "--special", "--order", "gen"};

std::vector<std::string> with(std::string cmd, std::vector<std::string> base, std::vector<std::string> extra = {}) {
    base.insert(base.begin(), std::move(cmd));
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
}

// Every JSON number must be emitted as a string.
bool no_json_numbers(const Json& j) {
    if (j.is_number()) return false;
    if (j.is_array() || j.is_object())
        for (const auto& x : j)
            if (!no_json_numbers(x)) return false;
    return true;
}

} // namespace

TEST(Cli, ConstructGoldenGeneratorMatrix) {
    auto r = run_cli(with("construct", kGoldenGf9));
    EXPECT_EQ(r.rc, cli::kOk);
    EXPECT_EQ(r.out, "5 11\n"
                     "1 1 1 1 1 1 1 1 0 0 2\n"
                     "1 3 7 8 2 6 5 4 0 0 0\n"
                     "1 7 2 5 1 7 2 5 0 0 0\n"
                     "1 8 5 3 2 4 7 6 1 1 0\n"
                     "1 2 1 2 1 2 1 2 2 1 0\n");
}

TEST(Cli, ConstructWithParityCheck) {
    auto r = run_cli({"construct", "--q", "13", "--k", "4", "--n", "6", "--alpha", "1,2,3,4,5,6", "--b", "1", "--M",
                      "1,1,1,2", "--with-h", "--verify"});
    ASSERT_EQ(r.rc, cli::kOk) << r.err;
    EXPECT_TRUE(contains(r.out, "G*H^T = 0: true"));
    EXPECT_TRUE(contains(r.out, "rank(H) = 5"));
    auto f = Field::make_q(13);
    std::istringstream is(r.out);
    Matrix g = Matrix::read(f, is), h = Matrix::read(f, is);
    EXPECT_EQ(g.rows(), 4u);
    EXPECT_EQ(h.rows(), 5u);
    EXPECT_EQ(h.cols(), 9u);
    EXPECT_TRUE((g * h.transpose()).is_zero());
}

TEST(Cli, ConstructErrors) {
    auto dup = run_cli({"construct", "--q", "13", "--k", "3", "--alpha", "1,1,2", "--M", "1,1,1,2"});
    EXPECT_EQ(dup.rc, cli::kBadInput);
    EXPECT_TRUE(contains(dup.err, "DuplicateAlpha"));
    auto shape = run_cli({"construct", "--q", "7", "--k", "4", "--alpha", "1,2,3,4,5", "--ell", "3", "--M",
                          "1,0,0,0,1,0,0,0,1", "--with-h"});
    EXPECT_EQ(shape.rc, cli::kUnsupported);
    EXPECT_TRUE(contains(shape.err, "UnsupportedShape"));
    EXPECT_EQ(run_cli({"construct", "--q", "12", "--k", "3", "--alpha", "1,2,3", "--M", "1,0,0,1"}).rc, cli::kBadInput);
    EXPECT_EQ(run_cli({"frobnicate"}).rc, cli::kBadInput);
    EXPECT_EQ(run_cli({}).rc, cli::kBadInput);
}

TEST(Cli, InstanceFileRoundTrip) {
    const std::string path = tmp_path("golden_gf9.json");
    auto saved = run_cli(with("construct", kGoldenGf9, {"--save-instance", path}));
    ASSERT_EQ(saved.rc, cli::kOk) << saved.err;
    auto reread = run_cli({"construct", "--instance", path});
    ASSERT_EQ(reread.rc, cli::kOk) << reread.err;
    EXPECT_EQ(reread.out, saved.out);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(generator_matrix(instance_from_string(text.str())).to_string(), saved.out);
}

TEST(Cli, ClassifyMdsInstance) {
    auto r = run_cli({"classify", "--q", "13", "--k", "5", "--alpha", "1,2,7,8,9", "--M", "1,1,1,2", "--verify"});
    ASSERT_EQ(r.rc, cli::kOk) << r.err;
    EXPECT_TRUE(contains(r.out, "MDS: true\n"));
    EXPECT_TRUE(contains(r.out, "[8,5,4]"));
    EXPECT_TRUE(contains(r.out, "agreement: true"));
}

TEST(Cli, ClassifyNonMdsWitness) {
    auto r = run_cli({"classify", "--q", "13", "--k", "5", "--alpha", "1,2,7,8,9", "--M", "1,0,5,1", "--verify"});
    ASSERT_EQ(r.rc, cli::kOk) << r.err;
    EXPECT_TRUE(contains(r.out, "MDS: false; witness I_1={1,2,7,8} j=1"));
    EXPECT_TRUE(contains(r.out, "dual AMDS: true"));
    EXPECT_TRUE(contains(r.out, "agreement: true"));
}

TEST(Cli, ClassifyBruteForceOnlyShape) {
    auto r = run_cli({"classify", "--q", "7", "--k", "4", "--alpha", "1,2,3,4,5", "--ell", "3", "--M", "1,0,0,0,1,0,0,0,1"});
    ASSERT_EQ(r.rc, cli::kOk) << r.err;
    EXPECT_TRUE(contains(r.out, "brute-force only"));
    EXPECT_TRUE(contains(r.out, "brute force: [9,4,"));
}

TEST(Cli, ClassifyJsonUsesDecimalStrings) {
    auto r = run_cli({"classify", "--q", "13", "--k", "5", "--alpha", "1,2,7,8,9", "--M", "1,0,5,1", "--verify", "--json"});
    ASSERT_EQ(r.rc, cli::kOk) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_TRUE(no_json_numbers(j));
    EXPECT_EQ(j["schema"], "1");
    EXPECT_EQ(j["criteria"]["witness"]["subset"], Json::array({"1", "2", "7", "8"}));
    EXPECT_EQ(j["brute_force"]["parameters"], "[8,5,3]");
}

TEST(Cli, WeightsGoldenBoth) {
    auto r = run_cli(with("weights", kGoldenGf9, {"--method", "both"}));
    ASSERT_EQ(r.rc, cli::kOk) << r.err;
    EXPECT_TRUE(contains(r.out, "enumerator: 1+224x^6+1520x^7+4880x^8+14040x^9+22240x^10+16144x^11\n"));
    EXPECT_TRUE(contains(r.out, "agreement: true"));
    auto j = Json::parse(run_cli(with("weights", kGoldenGf9, {"--method", "both", "--json"})).out);
    EXPECT_TRUE(no_json_numbers(j));
}

TEST(Cli, WeightsRawGenerator) {
    const std::string path = tmp_path("rep3.txt");
    std::ofstream(path) << "1 3\n1 1 1\n";
    auto r = run_cli({"weights", "--q", "3", "--generator", path});
    ASSERT_EQ(r.rc, cli::kOk) << r.err;
    EXPECT_TRUE(contains(r.out, "enumerator: 1+2x^3\n"));
    auto c = run_cli({"classify", "--q", "3", "--generator", path});
    EXPECT_EQ(c.rc, cli::kOk);
    EXPECT_TRUE(contains(c.out, "[3,1,3] MDS"));
}

TEST(Cli, WeightsFormulaAtQ27) {
    auto r = run_cli({"weights", "--q", "27", "--k", "5", "--b", "1", "--M", "1,1,2,1", "--special", "--method", "formula"});
    ASSERT_EQ(r.rc, cli::kOk) << r.err;
    EXPECT_TRUE(contains(r.out, "enumerator: 1+33800x^24+448526x^25+528008x^26+3377712x^27+5109208x^28+4851652x^29\n"));
}

TEST(Cli, WeightsBudgetAndShapeErrors) {
    auto r = run_cli(with("weights", kGoldenGf9, {"--budget", "10"}));
    EXPECT_EQ(r.rc, cli::kBadInput);
    EXPECT_TRUE(contains(r.err, "59049"));
    EXPECT_TRUE(contains(r.err, "--budget"));
    auto f = run_cli({"weights", "--q", "13", "--k", "5", "--alpha", "1,2,7,8,9", "--M", "1,1,1,2", "--method", "formula"});
    EXPECT_EQ(f.rc, cli::kUnsupported);
}

TEST(Cli, SubsetSum) {
    auto a = run_cli({"subsetsum", "--q", "5", "--domain", "star", "--m", "2", "--b", "1", "--method", "both"});
    ASSERT_EQ(a.rc, cli::kOk) << a.err;
    EXPECT_TRUE(contains(a.out, "1\nagreement: true\n"));
    auto b = run_cli({"subsetsum", "--q", "4", "--domain", "full", "--m", "2", "--b", "0"});
    EXPECT_EQ(b.out, "0\n");
    auto c = run_cli({"subsetsum", "--q", "9", "--domain", "star", "--m", "0", "--b", "0"});
    EXPECT_EQ(c.out, "1\n");
    auto j = Json::parse(run_cli({"subsetsum", "--q", "5", "--m", "2", "--b", "1", "--method", "both", "--json"}).out);
    EXPECT_EQ(j["count"], "1");
    EXPECT_TRUE(no_json_numbers(j));
    EXPECT_EQ(run_cli({"subsetsum", "--q", "5", "--m", "9", "--b", "1"}).rc, cli::kBadInput);
}

TEST(Cli, SweepIsDeterministicAndClean) {
    const std::vector<std::string> args{"sweep", "--q-list", "5,7,9", "--k-list", "4,5", "--trials", "3", "--seed", "7"};
    auto a = run_cli(args), b = run_cli(args);
    ASSERT_EQ(a.rc, cli::kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(contains(a.out, "\n0 disagreements\n"));
    auto j1 = run_cli({"sweep", "--q-list", "9", "--k-list", "5", "--trials", "1", "--seed", "1", "--json"});
    ASSERT_EQ(j1.rc, cli::kOk) << j1.err;
    auto j = Json::parse(j1.out);
    EXPECT_TRUE(no_json_numbers(j));
    EXPECT_EQ(j["cells"][0]["golden"], true);
    EXPECT_TRUE(contains(run_cli({"sweep", "--q-list", "9", "--k-list", "5", "--trials", "1"}).out, "golden checked"));
}

TEST(Cli, SweepRejectsBadLists) {
    EXPECT_EQ(run_cli({"sweep", "--q-list", "", "--k-list", "4"}).rc, cli::kBadInput);
    EXPECT_EQ(run_cli({"sweep", "--q-list", "5", "--k-list", ""}).rc, cli::kBadInput);
    EXPECT_EQ(run_cli({"sweep", "--q-list", "32", "--k-list", "4"}).rc, cli::kBadInput);
    EXPECT_EQ(run_cli({"sweep", "--q-list", "5", "--k-list", "2"}).rc, cli::kBadInput);
}
