#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hcc/examples.hpp"

using namespace hcc;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " " + HCC_BIN + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p))
        out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

class Cli : public ::testing::Test {
protected:
    static std::filesystem::path dir;

    static void SetUpTestSuite()
    {
        dir = std::filesystem::temp_directory_path() / ("hcc-cli-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        for (const auto& e : examples::all())
            io::write_file(file(e.name), e.emit());
    }
    static void TearDownTestSuite() { std::filesystem::remove_all(dir); }

    static std::string file(const std::string& name) { return (dir / (name + ".json")).string(); }
};

std::filesystem::path Cli::dir;

} // namespace

TEST_F(Cli, CheckHopfPasses)
{
    auto r = run("check hopf " + file("sweedler-h4"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "PASS")) << r.out;
}

TEST_F(Cli, SaydFailureNamesWitness)
{
    auto r = run("check coefficient --flavor sayd --hopf " + file("sweedler-h4") + " --coeff " +
                 file("sweedler-h4-C-1-eps"));
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_TRUE(has(r.out, "FAIL")) << r.out;
    EXPECT_TRUE(has(r.out, "at m⊗x")) << r.out;
    auto ok = run("check coefficient --flavor sayd --hopf " + file("sweedler-h4") + " --coeff " +
                  file("sweedler-h4-C-g-eps"));
    EXPECT_EQ(ok.code, 0) << ok.out;
}

TEST_F(Cli, JsonReport)
{
    auto r = run("--json check coefficient --flavor sayd --hopf " + file("sweedler-h4") + " --coeff " +
                 file("sweedler-h4-C-1-eps"));
    EXPECT_EQ(r.code, 1);
    auto j = io::json::parse(r.out);
    EXPECT_EQ(j.at("pass"), false);
    EXPECT_EQ(j.at("witness").at("element"), "m⊗x");
}

TEST_F(Cli, TrivialCyclicCohomology)
{
    auto r = run("cohomology --theory cyclic --max-degree 3 --hopf " + file("trivial") + " --carrier " +
                 file("trivial-comodule-algebra") + " --coeff " + file("trivial-coefficients"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "dims: 1 0 1 0")) << r.out;
    auto h = run("cohomology --theory hochschild --max-degree 3 --hopf example:trivial --carrier "
                 "example:trivial-comodule-algebra --coeff example:trivial-coefficients");
    EXPECT_EQ(h.code, 0) << h.out;
    EXPECT_TRUE(has(h.out, "dims: 1 0 0 0")) << h.out;
}

TEST_F(Cli, CyclicRefusedInPositiveCharacteristic)
{
    auto r = run("--field 'GF(3)' cohomology --theory cyclic --max-degree 1 --hopf example:trivial --carrier "
                 "example:trivial-comodule-algebra --coeff example:trivial-coefficients");
    EXPECT_EQ(r.code, 2) << r.out;
}

TEST_F(Cli, BrokenAntipode)
{
    auto j = io::read_file(file("k-z2"));
    j["antipode"] = io::json::array({io::json::array({0, 0, "1"}), io::json::array({1, 1, "2"})});
    std::string p = (dir / "broken.json").string();
    io::write_file(p, j);
    auto r = run("check hopf " + p);
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_TRUE(has(r.out, "antipode")) << r.out;
}

TEST_F(Cli, MalformedInputsExitTwo)
{
    auto j = io::read_file(file("k-z2"));
    j["mult"][0][2] = "1/0";
    std::string p = (dir / "zero.json").string();
    io::write_file(p, j);
    auto r = run("check hopf " + p);
    EXPECT_EQ(r.code, 2) << r.out;
    EXPECT_TRUE(has(r.out, "division by zero")) << r.out;

    EXPECT_EQ(run("check hopf " + (dir / "missing.json").string()).code, 2);
    EXPECT_EQ(run("check hopf " + file("sweedler-h4-C-g-eps")).code, 2);
    EXPECT_EQ(run("--field 'GF(4)' check hopf " + file("k-z2")).code, 2);
    // coefficients over H4 handed to k[Z/2]
    EXPECT_EQ(run("check coefficient --flavor sayd --hopf " + file("k-z2") + " --coeff " + file("sweedler-h4-C-g-eps")).code,
              2);
}

TEST_F(Cli, UsageErrors)
{
    auto r = run("check hopf " + file("k-z2") + " --bogus");
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(has(r.out, "--bogus")) << r.out;
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("cohomology --theory cyclic --max-degree 9 --hopf example:trivial --carrier "
                  "example:trivial-comodule-algebra --coeff example:trivial-coefficients")
                  .code,
              2);
}

TEST_F(Cli, Deterministic)
{
    std::string args = "complex build --kind comodule-algebra --verify --max-degree 2 --hopf " + file("sweedler-h4") +
                       " --carrier " + file("sweedler-h4-regular") + " --coeff " + file("sweedler-h4-C-g-eps");
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, NoColor)
{
    auto r = run("check hopf " + file("k-z2"), "NO_COLOR=1");
    EXPECT_FALSE(has(r.out, "\x1b[")) << r.out;
}

TEST_F(Cli, EmitMatchesLibrary)
{
    auto r = run("examples emit sweedler-h4");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, io::canonical(examples::find("sweedler-h4")->emit()));
    EXPECT_EQ(run("examples emit no-such-example").code, 2);
}

TEST_F(Cli, CupOfSampleCochains)
{
    auto r = run("cup --hopf " + file("k-z2") + " --module-algebra " + file("z2-on-k-z3") + " --comodule-algebra " +
                 file("k-z2-regular") + " --coeff " + file("k-z2-C-1-eps") + " --phi " + file("cup-phi") + " --psi " +
                 file("cup-psi"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "PASS b-closed")) << r.out;
    // the cochains name their carrier by hash
    auto bad = run("cup --hopf " + file("k-z2") + " --module-algebra " + file("z2-on-k-z3") + " --comodule-algebra " +
                   file("k-z2-regular") + " --coeff " + file("k-z2-C-1-sign") + " --phi " + file("cup-phi") +
                   " --psi " + file("cup-psi"));
    EXPECT_EQ(bad.code, 2) << bad.out;
}

TEST_F(Cli, CorpusScenario)
{
    auto r = run("corpus run sayd-implies-ah-sayd");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "PASS")) << r.out;
    EXPECT_EQ(run("corpus run no-such-scenario").code, 2);
}
