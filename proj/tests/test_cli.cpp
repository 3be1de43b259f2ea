// Drives the installed binary end to end: flag parsing, exit codes, output
// determinism. The binary path comes from the build system.

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "ecx/ecx.hpp"
#include "fixtures.hpp"

namespace {

using json = nlohmann::ordered_json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(ECX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    RunResult res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int rc = pclose(pipe);
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string write_spec(const std::string& name, const json& j) {
    std::string path = std::string(::testing::TempDir()) + name;
    std::ofstream out(path);
    out << j.dump();
    return path;
}

} // namespace

TEST(Cli, CurveInfo) {
    auto res = run_cli("--format json curve-info --p 11 --a 1 --b 6");
    ASSERT_EQ(res.exit_code, 0);
    json j = json::parse(res.out);
    EXPECT_EQ(j.at("points"), 13);
    EXPECT_TRUE(j.at("hasse").at("holds").get<bool>());
    EXPECT_EQ(j.at("subgroup_orders"), json({1, 13}));
}

TEST(Cli, SingularCurveIsUsageError) {
    auto res = run_cli("curve-info --p 11 --a 0 --b 0");
    EXPECT_EQ(res.exit_code, 2);
}

TEST(Cli, ExtensionSpecFile) {
    std::string path = write_spec("f49_curve.json",
                                  json{{"field", {{"p", 7}, {"n", 2}, {"modulus", {1, 0, 1}}}},
                                       {"a", {1, 0}},
                                       {"b", {6, 0}}});
    auto res = run_cli("--format json curve-info --spec " + path);
    ASSERT_EQ(res.exit_code, 0);
    json j = json::parse(res.out);
    int points = j.at("points").get<int>();
    EXPECT_GE(points, 36); // Hasse window for q = 49
    EXPECT_LE(points, 64);
    EXPECT_EQ(points, 55);
}

TEST(Cli, SpecFileWinsOverInlineFlags) {
    std::string path = write_spec("f11_curve.json",
                                  json{{"field", {{"p", 11}}}, {"a", 1}, {"b", 6}});
    auto res = run_cli("--format json curve-info --p 13 --a 1 --b 1 --spec " + path);
    ASSERT_EQ(res.exit_code, 0);
    EXPECT_EQ(json::parse(res.out).at("points"), 13);
}

TEST(Cli, FindSubgroups) {
    auto res = run_cli("--format json find-subgroups --p 11 --a 1 --b 7 --order 5");
    ASSERT_EQ(res.exit_code, 0);
    json j = json::parse(res.out);
    EXPECT_EQ(j.at("count"), 1);
    EXPECT_EQ(j.at("subgroups")[0].at("generator"), json({{"x", 1}, {"y", 3}}));
}

TEST(Cli, ExtractExamples) {
    auto res = run_cli("--format json extract --p 11 --a 1 --b 6 --extractor ext1"
                       " --P '[2,7]' --Q '[2,7]' --k 2");
    ASSERT_EQ(res.exit_code, 0);
    json j = json::parse(res.out);
    EXPECT_EQ(j.at("output").at("value"), 1);
    EXPECT_EQ(j.at("output").at("bits"), "01");

    auto lk = run_cli("--format json extract --p 11 --a 1 --b 6 --extractor lk --P '[5,2]' --k 2");
    ASSERT_EQ(lk.exit_code, 0);
    EXPECT_EQ(json::parse(lk.out).at("output").at("value"), 1);
}

TEST(Cli, ExtractAtInfinityIsProtocolFailure) {
    auto res = run_cli("extract --p 11 --a 1 --b 6 --extractor ext1 --P '[2,7]' --Q '[2,4]' --k 1");
    EXPECT_EQ(res.exit_code, 4);
}

TEST(Cli, AuditPassesAndIsByteIdentical) {
    std::string cmd = "--format json audit --p 11 --a 1 --b 6 --extractor ext1"
                      " --gen1 '[2,7]' --k 1 --e 40";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    json j = json::parse(a.out);
    EXPECT_TRUE(j.at("all_lemmas_hold").get<bool>());
    EXPECT_EQ(j.at("distribution").at("total"), 156);
}

TEST(Cli, AuditTextFormat) {
    auto res = run_cli("audit --p 11 --a 1 --b 6 --extractor ext1 --gen1 '[2,7]' --k 1 --e 40");
    ASSERT_EQ(res.exit_code, 0);
    EXPECT_NE(res.out.find("collision_lemma"), std::string::npos);
    EXPECT_NE(res.out.find("holds"), std::string::npos);
    EXPECT_NE(res.out.find("156 / 13"), std::string::npos);
    EXPECT_EQ(res.out.find("VIOLATED"), std::string::npos);
}

TEST(Cli, AuditRejectsOversizedK) {
    auto res = run_cli("audit --p 11 --a 1 --b 6 --extractor ext1 --gen1 '[2,7]' --k 5 --e 40");
    EXPECT_EQ(res.exit_code, 2);
}

TEST(Cli, AuditExtensionTwoSource) {
    std::string path = write_spec("f49_audit.json",
                                  json{{"field", {{"p", 7}, {"n", 2}, {"modulus", {1, 0, 1}}}},
                                       {"a", {1, 0}},
                                       {"b", {6, 0}}});
    auto res = run_cli("--format json audit --spec " + path +
                       " --extractor ext2 --gen1 '[[0,0],[0,1]]' --gen2 '[[1,0],[1,0]]' --k 1 --e 40");
    ASSERT_EQ(res.exit_code, 0);
    json j = json::parse(res.out);
    EXPECT_TRUE(j.at("all_lemmas_hold").get<bool>());
    EXPECT_EQ(j.at("r"), 5);
    EXPECT_EQ(j.at("t"), 11);
}

TEST(Cli, BoundsExamples) {
    auto r1 = run_cli("--format json bounds --mode ext1 --m 256 --l 256 --n 256 --e 80");
    ASSERT_EQ(r1.exit_code, 0);
    EXPECT_EQ(json::parse(r1.out).at("kmax"), 87);

    auto r2 = run_cli("--format json bounds --mode ext1 --m 128 --l 128 --n 256 --e 80");
    ASSERT_EQ(r2.exit_code, 0);
    json j2 = json::parse(r2.out);
    EXPECT_EQ(j2.at("kmax"), -169);
    EXPECT_FALSE(j2.at("feasible").get<bool>());

    auto r3 = run_cli("--format json bounds --mode ext2 --l 200 --s 200 --m 32 --n 6 --e 80");
    ASSERT_EQ(r3.exit_code, 0);
    EXPECT_EQ(json::parse(r3.out).at("kmax"), 1);

    auto r4 = run_cli("--format json bounds --mode ext1 --m 4 --l 4 --n 4 --e 1"
                      " --p 11 --k 1 --r 13 --t 13");
    ASSERT_EQ(r4.exit_code, 0);
    json j4 = json::parse(r4.out);
    EXPECT_NEAR(j4.at("delta_bound_ln").get<double>(), 0.395, 1e-3);
}

TEST(Cli, CharSumsAdditive) {
    for (const char* set : {"zero", "base", "full"}) {
        auto res = run_cli(std::string("--format json char-sums --kind additive --p 7 --n 2"
                                       " --modulus [1,0,1] --set ") + set);
        ASSERT_EQ(res.exit_code, 0) << set;
        json j = json::parse(res.out);
        EXPECT_NEAR(j.at("sum").get<double>(), 49.0, 1e-6) << set;
        EXPECT_TRUE(j.at("within_bound").get<bool>());
    }
}

TEST(Cli, CharSumsBilinearSweep) {
    auto res = run_cli("--format json char-sums --kind bilinear --p 11 --a 1 --b 6 --gen1 '[2,7]'");
    ASSERT_EQ(res.exit_code, 0);
    json j = json::parse(res.out);
    EXPECT_EQ(j.at("characters").size(), 10u); // all nontrivial characters of F_11
    EXPECT_TRUE(j.at("trivial_bound_holds").get<bool>());
}

TEST(Cli, DhDemoDeterministicTranscript) {
    std::string cmd = "--format json dh-demo --p 11 --a 1 --b 6 --g '[2,7]'"
                      " --secret-a 3 --secret-b 5 --k 2 --mode two_source";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    json j = json::parse(a.out);
    EXPECT_EQ(j.at("exchange1").at("shared"), j.at("exchange2").at("shared"));
}

TEST(Cli, DhDemoDerivationFailure) {
    // full 15-point group: a*b = 15 = 0 mod order
    fixtures::F11CompositeCurve fx;
    auto subs = ecx::find_subgroups(fx.curve, 15);
    ASSERT_EQ(subs.size(), 1u);
    auto G = subs[0].generator;
    std::string gen = "'[" + std::to_string(G.x().value()) + "," + std::to_string(G.y().value()) + "]'";
    auto res = run_cli("dh-demo --p 11 --a 1 --b 7 --g " + gen +
                       " --secret-a 3 --secret-b 5 --k 1 --mode single");
    EXPECT_EQ(res.exit_code, 4);
}

TEST(Cli, AuditModeFlagDoesNotChangeResults) {
    std::string base = "--format json audit --p 11 --a 1 --b 6 --extractor ext1"
                       " --gen1 '[2,7]' --k 2 --e 40";
    auto on = run_cli(base);
    auto off = run_cli("--audit-mode off " + base);
    ASSERT_EQ(on.exit_code, 0);
    ASSERT_EQ(off.exit_code, 0);
    EXPECT_EQ(on.out, off.out);
}

TEST(Cli, ExtractDkViaSpecFile) {
    std::string path = write_spec("f49_extract.json",
                                  json{{"field", {{"p", 7}, {"n", 2}, {"modulus", {1, 0, 1}}}},
                                       {"a", {1, 0}},
                                       {"b", {6, 0}}});
    auto res = run_cli("--format json extract --spec " + path +
                       " --extractor dk --P '[[3,5],[2,2]]' --k 1");
    ASSERT_EQ(res.exit_code, 0);
    EXPECT_EQ(json::parse(res.out).at("output"), json({3}));
}

TEST(Cli, DhDemoSeededSecretsPrinted) {
    std::string cmd = "--format json dh-demo --p 11 --a 1 --b 6 --g '[2,7]' --k 2"
                      " --mode single --seed 7";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    json j = json::parse(a.out);
    EXPECT_EQ(j.at("seed"), 7);
    EXPECT_GE(j.at("exchange1").at("secret_a").get<uint64_t>(), 1u);
}

TEST(Cli, PrngCountZeroAndDeterminism) {
    auto empty = run_cli("--format json prng --p 11 --a 1 --b 6 --gen1 '[2,7]' --k 3 --count 0");
    ASSERT_EQ(empty.exit_code, 0);
    EXPECT_EQ(json::parse(empty.out).at("outputs").size(), 0u);

    std::string cmd = "--format json prng --p 11 --a 1 --b 6 --gen1 '[2,7]' --k 3 --count 64";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    json j = json::parse(a.out);
    EXPECT_EQ(j.at("outputs").size(), 64u);
    EXPECT_TRUE(j.contains("skipped"));
}

TEST(Cli, PrngPackedStream) {
    std::string path = std::string(::testing::TempDir()) + "stream.bin";
    auto res = run_cli("prng --p 11 --a 1 --b 6 --gen1 '[2,7]' --k 3 --count 16 --out " + path);
    ASSERT_EQ(res.exit_code, 0);
    std::ifstream in(path, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(bytes.size(), 6u); // 48 bits -> 6 bytes
}

TEST(Cli, CapExceededExitCode) {
    auto res = run_cli("curve-info --p 101 --a 1 --b 1 --cap 50");
    EXPECT_EQ(res.exit_code, 3);
    auto env = run_cli("curve-info --p 101 --a 1 --b 1", "ECX_CAP=50");
    EXPECT_EQ(env.exit_code, 3);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli("").exit_code, 2);                       // missing subcommand
    EXPECT_EQ(run_cli("audit --p 11").exit_code, 2);           // missing required flags
    EXPECT_EQ(run_cli("bounds --mode nope --m 1").exit_code, 2);
    EXPECT_EQ(run_cli("--help").exit_code, 0);
}
