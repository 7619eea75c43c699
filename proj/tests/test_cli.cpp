#include "stein/json_io.hpp"
#include "stein/pl.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace stein;

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

// stdout only; stderr goes to the test log
Outcome stein_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + STEIN_CLI_PATH + "' " + args;
    Outcome r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("stein_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& body) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << body;
        return "'" + p.string() + "'";
    }

    fs::path dir_;
};

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_F(Cli, InvariantsHigman) {
    const Outcome r = stein_cli("invariants " + file("a.json", R"({"ring": {"minpoly": [-3, 1]}, "ell": 1})"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "H0                   Z/2\n")) << r.out;
    EXPECT_TRUE(has(r.out, "unit class           1\n")) << r.out;
    EXPECT_TRUE(has(r.out, "V_ab                 Z/2")) << r.out;
}

TEST_F(Cli, InvariantsIntegrallyAcyclic) {
    const Outcome r = stein_cli("invariants " + file("z.json", R"({"ring": {"integers": [2, 3]}, "label": "V_{2,3}"})"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "integrally acyclic   yes")) << r.out;
    EXPECT_TRUE(has(r.out, "V_{2,3}")) << r.out;
}

TEST_F(Cli, InvariantsJsonIsDeterministic) {
    const std::string f = file("g.json", R"({"ring": {"minpoly": "t^2+t-1"}, "ell": 1})");
    const Outcome a = stein_cli("invariants --json --degree 3 " + f), b = stein_cli("invariants " + f + " --degree 3 --json");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const Json j = parse_json(a.out);
    EXPECT_EQ(j["schema"], "stein.invariants/1");
    EXPECT_TRUE(j["abelianization"]["conflict"].get<bool>());
    EXPECT_EQ(j["groupoidHomology"].size(), 4u);
}

TEST_F(Cli, InvariantsErrors) {
    EXPECT_EQ(stein_cli("invariants " + file("m.json", "{\"ring\": ")).code, 2);
    EXPECT_EQ(stein_cli("invariants " + file("n.json", R"({"ell": 1})")).code, 2);
    EXPECT_EQ(stein_cli("invariants '" + (dir_ / "missing.json").string() + "'").code, 2);
    EXPECT_EQ(stein_cli("invariants " + file("r.json", R"({"ring": {"minpoly": [-4, 0, 1]}})")).code, 3);
    EXPECT_EQ(stein_cli("invariants " + file("e.json", R"({"ring": {"integers": [2]}, "ell": -1})")).code, 3);
    EXPECT_EQ(stein_cli("invariants " + file("w.json", R"({"ring": {"minpoly": [-2, 1], "rootWindow": ["3", "4"]}})")).code,
              3);
}

TEST_F(Cli, VerifySuites) {
    EXPECT_EQ(stein_cli("verify fi --lambda 't^2+t-1' --max-i 6").code, 0);
    EXPECT_EQ(stein_cli("verify gi --lambda 2/3 --max-i 6").code, 0);
    EXPECT_EQ(stein_cli("verify multigen --integers 2,3").code, 0);
    const Outcome c = stein_cli("verify conjugacy --integers 2,3 --json");
    EXPECT_EQ(c.code, 0);
    const Json j = parse_json(c.out);
    EXPECT_EQ(j["schema"], "stein.report/1");
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["records"].size(), 6u);
    EXPECT_EQ(stein_cli("verify purely-infinite --lambda 't^2+t-1'").code, 0);
    EXPECT_EQ(stein_cli("verify expansivity --lambda 2/3").code, 0);
}

TEST_F(Cli, VerifyUsageErrors) {
    EXPECT_EQ(stein_cli("verify fi --max-i 0").code, 2);
    EXPECT_EQ(stein_cli("verify nope").code, 2);
    EXPECT_EQ(stein_cli("verify").code, 2);
    EXPECT_EQ(stein_cli("").code, 2);
    EXPECT_EQ(stein_cli("verify fi --lambda 3/2").code, 3);
    EXPECT_EQ(stein_cli("verify conjugacy --integers 2,2").code, 3);
}

TEST_F(Cli, SeedReproducible) {
    const Outcome a = stein_cli("verify expansivity", "STEIN_SEED=7"), b = stein_cli("verify expansivity", "STEIN_SEED=7");
    const Outcome c = stein_cli("verify expansivity", "STEIN_SEED=8");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
}

TEST_F(Cli, Compare) {
    const std::string a = file("a.json", R"({"ring": {"minpoly": [-3, 1]}, "ell": 1})");
    const std::string b = file("b.json", R"({"ring": {"minpoly": [-3, 1]}, "ell": 2})");
    const Outcome r = stein_cli("compare " + a + " " + b);
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(has(r.out, "unit class")) << r.out;
    const Outcome s = stein_cli("compare --json " + a + " " + a);
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(parse_json(s.out)["verdict"], "NotDistinguished");
}

TEST_F(Cli, DecomposeAndCompose) {
    const RingPtr r = RingSpec::multi_integer({2});
    const VElement b = sample_b(Slope{{-1}}, r);
    const VElement f = sample_f(Slope{{-1}}, RingElement::one(r));
    const std::string bf = file("b.json", to_json(b).dump());
    const Outcome d = stein_cli("decompose " + bf);
    ASSERT_EQ(d.code, 0);
    const Json j = parse_json(d.out);
    EXPECT_EQ(velement_from_json(j["ie"]), b);
    EXPECT_TRUE(velement_from_json(j["f"]).is_identity());

    const Outcome c = stein_cli("compose " + file("f.json", to_json(f).dump()) + " " + file("fi.json", to_json(invert(f)).dump()));
    ASSERT_EQ(c.code, 0);
    EXPECT_TRUE(velement_from_json(parse_json(c.out)).is_identity());
    const Outcome c2 = stein_cli("compose " + bf + " " + file("f2.json", to_json(f).dump()));
    ASSERT_EQ(c2.code, 0);
    EXPECT_EQ(velement_from_json(parse_json(c2.out)), compose(b, f));
}

TEST_F(Cli, KGraph) {
    const Outcome f = stein_cli("kgraph --integers 2,3 factorize 1@3,1@2");
    EXPECT_EQ(f.code, 0);
    EXPECT_TRUE(has(f.out, "normal form  1@2,0@3")) << f.out;
    EXPECT_TRUE(has(f.out, "cylinder     [1/2, 2/3]")) << f.out;
    const Outcome a = stein_cli("kgraph factorize 1@2,2@3 --approx");
    EXPECT_TRUE(has(a.out, "~0.833333333333")) << a.out;
    const Outcome e = stein_cli("kgraph --integers 2,3 enumerate --multidegree 1,1");
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(std::count(e.out.begin(), e.out.end(), '\n'), 6);
    EXPECT_EQ(stein_cli("kgraph enumerate --multidegree 5,0").code, 2);
    EXPECT_EQ(stein_cli("kgraph factorize 2@2").code, 2);
}

TEST_F(Cli, Witnesses) {
    const Outcome s = stein_cli("witnesses separate 3/4- 3/4+");
    EXPECT_EQ(s.code, 0);
    EXPECT_TRUE(has(s.out, "c'  1/4")) << s.out;
    const Outcome o = stein_cli("witnesses orbit 0+ 1/2,3/4");
    EXPECT_EQ(o.code, 0);
    EXPECT_TRUE(has(o.out, "g(x)  (5/8)+")) << o.out;
    const Outcome p = stein_cli("witnesses --lambda 't^2+t-1' purely-infinite '0,t^2;t,1'");
    ASSERT_EQ(p.code, 0);
    const Json j = parse_json(p.out);
    EXPECT_FALSE(j["U"].empty());
    EXPECT_FALSE(j["V"].empty());
    EXPECT_EQ(stein_cli("witnesses separate 1/2+ 1/2+").code, 2);
    EXPECT_EQ(stein_cli("witnesses separate 1/2 1/2+").code, 2);
}
