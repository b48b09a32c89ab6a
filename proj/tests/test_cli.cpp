#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run(const std::string& args)
{
    const std::string cmd = std::string(CHOW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(CHOWPOLY_DATA_DIR) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, ChowBraidAugmented)
{
    const CliRun r = run("chow --braid 3 --augmented");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x^3 + 14x^2 + 14x + 1\n");
}

TEST(Cli, ChowGamma)
{
    const CliRun r = run("chow --braid 2 --gamma");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x + 1\ngamma: (1)\n");
}

TEST(Cli, ChowBooleanRankOne)
{
    const CliRun r = run("chow --boolean 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, ChowMethodAll)
{
    const CliRun r = run("chow --braid 3 --method all");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x^2 + 8x + 1\ncross-check: pass (chains, descents, extab, braid)\n");
    const CliRun g = run("chow --graph " + data("path3.json") + " --method all --augmented");
    EXPECT_EQ(g.code, 0);
    EXPECT_EQ(first_line(g.out), "x^2 + 3x + 1");
}

TEST(Cli, ChowJsonReport)
{
    const CliRun r = run("chow --uniform 2,3 --method all --gamma --json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["input"], "uniform:2,3");
    EXPECT_EQ(j["result"]["text"], "x + 1");
    EXPECT_EQ(j["result"]["coeffs"], nlohmann::json::array({"1", "1"}));
    EXPECT_EQ(j["cross_check"]["status"], "pass");
    EXPECT_EQ(j["method"], "all");
    EXPECT_EQ(j["gamma"]["gammas"], nlohmann::json::array({"1"}));
    EXPECT_TRUE(j["wall_time_ms"].is_number());
    EXPECT_TRUE(j.contains("command"));
}

TEST(Cli, AbIndex)
{
    EXPECT_EQ(run("abindex --boolean 1 --extended").out, "a + y*b\n");
    EXPECT_EQ(run("abindex --boolean 1 --extended --eval \"-x,1,x\"").out, "1 - x^2\n");
    EXPECT_EQ(run("abindex --boolean 2").out, "aa + ab\n");
    EXPECT_EQ(run("abindex --boolean 1 --extended --truncated").out, "(1 + y)\n");
    const CliRun j = run("abindex --braid 2 --json");
    ASSERT_EQ(j.code, 0);
    EXPECT_EQ(nlohmann::json::parse(j.out)["result"]["text"], "aa + 2*ab");
}

TEST(Cli, Verify)
{
    const CliRun ok = run("verify --braid 3 --suite all");
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_EQ(ok.out.find("fail"), std::string::npos) << ok.out;
    EXPECT_NE(ok.out.find("rlabeling: pass"), std::string::npos);
    EXPECT_NE(ok.out.find("omega: pass"), std::string::npos);

    const CliRun bad = run("verify --poset " + data("corrupted_labels.json") + " --suite rlabeling");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("rlabeling: fail (interval [0, 1] has at least 2 weakly increasing maximal chains)"),
              std::string::npos)
        << bad.out;

    const CliRun id = run("verify --uniform 2,3 --suite identities");
    EXPECT_EQ(id.code, 0) << id.out;
    EXPECT_EQ(id.out.find("fail"), std::string::npos);
}

TEST(Cli, Cfhp)
{
    const CliRun r2 = run("cfhp --braid 2 --eval \"-x,x\"");
    EXPECT_EQ(r2.code, 0);
    EXPECT_EQ(first_line(r2.out), "x + 1");
    const CliRun r3 = run("cfhp --braid 3 --eval \"-x,x\"");
    EXPECT_EQ(r3.code, 0);
    EXPECT_EQ(first_line(r3.out), "x^2 + 8x + 1");
    const CliRun b1 = run("cfhp --boolean 1");
    EXPECT_EQ(b1.code, 0);
    EXPECT_EQ(b1.out, "numerator: 1 + y\ndenominator: 1 - t\n");
}

TEST(Cli, Braid)
{
    const CliRun r = run("braid --n 3 --augmented --gamma");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["result"]["text"], "x^3 + 14x^2 + 14x + 1");
    EXPECT_EQ(j["gamma"]["gammas"], nlohmann::json::array({"1", "11"}));
    const CliRun r2 = run("braid --n 2");
    EXPECT_EQ(nlohmann::json::parse(r2.out)["result"]["text"], "x + 1");
}

TEST(Cli, InputErrors)
{
    EXPECT_EQ(run("chow").code, 1);
    EXPECT_EQ(run("chow --boolean 2 --braid 2").code, 1);
    EXPECT_EQ(run("chow --poset " + data("nongraded.json")).code, 1);
    EXPECT_EQ(run("chow --poset " + data("missing.json")).code, 1);
    EXPECT_EQ(run("chow --graph " + data("disconnected.json")).code, 1);
    EXPECT_EQ(run("chow --uniform 2").code, 1);
    EXPECT_EQ(run("chow --braid 2 --method bogus").code, 1);
    EXPECT_EQ(run("chow --poset " + data("partial_labels.json") + " --method descents").code, 1);
    EXPECT_EQ(run("braid --n 20").code, 1);
    EXPECT_EQ(run("abindex --boolean 1 --eval \"1,2\"").code, 1);
    EXPECT_EQ(run("nosuchcommand").code, 1);
}

TEST(Cli, PartialLabelsStillComputeChains)
{
    const CliRun r = run("chow --poset " + data("partial_labels.json") + " --method all");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x + 1\ncross-check: pass (chains, extab)\n");
}
