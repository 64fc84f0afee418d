#include <json.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + (env.empty() ? "" : " ") + ASNP_CLI_PATH + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string kCounter = "--p 5 --a 2 --f 0,0,1,0,0,0,1,0,1";

}  // namespace

TEST(Cli, NpCertifiedPolygon) {
    const auto r = run("np " + kCounter);
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("certified"), true);
    EXPECT_EQ(j.at("polygon").at("slopes"), json::parse(R"([["1/2",1],["3/4",2],["1",1],["5/4",2],["3/2",1]])"));
}

TEST(Cli, TwistedLambda) {
    const auto r = run("np " + kCounter + " --lambda 2,1");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).at("polygon").at("slopes"), json::parse(R"([["1/2",1],["1",5],["3/2",1]])"));
}

TEST(Cli, TsvColumns) {
    const auto r = run("np " + kCounter + " --N 3 --m 3 --format tsv");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "index\tord_num\tord_den\texactness\n1\t1\t2\texact\n2\t5\t4\texact\n3\t2\t1\texact\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("np --p 6 --f 0,1").code, 1);
    EXPECT_EQ(run("np --p 5 --f 0,0,0,0,0,1").code, 1);
    EXPECT_EQ(run("np --p 5 --f 0,1 --lambda 0").code, 1);
    EXPECT_EQ(run("np --p 5 --f 0,1 --bogus").code, 1);
    EXPECT_EQ(run("np " + kCounter + " --N 1 --m 1").code, 3);
    EXPECT_EQ(run("scan " + kCounter).code, 2);
    EXPECT_EQ(run("scan --p 5 --a 2 --f 0,0,1").code, 0);
}

TEST(Cli, ScanReportsWitnesses) {
    const auto r = run("scan " + kCounter);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("verdict"), "varies");
    EXPECT_EQ(j.at("classes").size(), 6u);
    EXPECT_TRUE(j.contains("witnesses"));
}

TEST(Cli, ThreadsFromEnvironmentDoNotChangeOutput) {
    const auto a = run("scan --p 5 --a 2 --f 0,1,0,1,0,0,1", "ASNP_THREADS=1");
    const auto b = run("scan --p 5 --a 2 --f 0,1,0,1,0,0,1", "ASNP_THREADS=7");
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JobFileMatchesFlags) {
    const std::string path = ::testing::TempDir() + "asnp_job.json";
    std::ofstream(path) << R"({"p":5,"a":2,"f":[0,0,1,0,0,0,1,0,1],"lambda":[2,1]})";
    const auto a = run("np --job " + path);
    const auto b = run("np " + kCounter + " --lambda 2,1");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, IncludeTrivial) {
    const auto r = run("np --p 5 --f 0,1 --include-trivial");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).at("polygon").at("slopes"), json::parse(R"([["0",1]])"));
}

TEST(Cli, Traces) {
    const auto r = run("traces " + kCounter + " --N 3 --m 3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).at("traces"),
              json::parse("[[[20,0],[90,0],[71,0],[41,0]],[[95,0],[105,0],[0,0],[60,0]],[[100,0],[25,0],[70,0],[45,0]]]"));
}

TEST(Cli, OracleAgreesWithNp) {
    const auto o = run("oracle --p 5 --f 0,1,0,1,1");
    const auto n = run("np --p 5 --f 0,1,0,1,1");
    ASSERT_EQ(o.code, 0);
    ASSERT_EQ(n.code, 0);
    EXPECT_EQ(json::parse(o.out).at("polygon").at("vertices"), json::parse(n.out).at("polygon").at("vertices"));
}

TEST(Cli, PlotBreakpoints) {
    const std::string path = ::testing::TempDir() + "asnp_np.json";
    {
        const auto r = run("np " + kCounter + " -o " + path);
        ASSERT_EQ(r.code, 0);
    }
    const auto svg = run("plot --input " + path);
    ASSERT_EQ(svg.code, 0);
    for (int x : {1, 3, 4, 6}) EXPECT_NE(svg.out.find("data-x=\"" + std::to_string(x) + "\""), std::string::npos) << x;
    const auto twisted = run("plot " + kCounter + " --lambda 2,1");
    ASSERT_EQ(twisted.code, 0);
    EXPECT_NE(twisted.out.find("data-x=\"6\""), std::string::npos);
    EXPECT_EQ(twisted.out.find("data-x=\"3\""), std::string::npos);
}

TEST(Cli, SearchSummaryLine) {
    const auto r = run("search --p 3 --a 2 --max-degree 4");
    ASSERT_TRUE(r.code == 0 || r.code == 2);
    const auto last = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
    const json s = json::parse(last).at("summary");
    EXPECT_EQ(s.at("region").at("exhaustive"), false);
    EXPECT_EQ(s.at("searched"), 10);
}
