#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliRun {
    int exit = -1;
    std::string out;
};

CliRun shtk(const std::string& args)
{
    const std::string cmd = std::string("cd '") + SHTK_GOLDEN_INPUTS + "' && env -u SHTK_BUDGET '" + SHTK_CLI_PATH +
                            "' " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, VerifyEmptyCertificate)
{
    EXPECT_EQ(shtk("verify zero.json empty-cert.json").exit, 0);
    EXPECT_EQ(shtk("verify z2-one-step.json empty-cert.json").exit, 1);
}

TEST(Cli, ReduceObstructionExitCode)
{
    const CliRun r = shtk("reduce z5-unit.json");
    EXPECT_EQ(r.exit, 3);
    EXPECT_NE(r.out.find("\"obstruction\""), std::string::npos);
    EXPECT_EQ(shtk("reduce z2-one-step.json").exit, 2);
    EXPECT_EQ(shtk("reduce cone-id-z2.json --budget 0").exit, 2);
}

TEST(Cli, ScenarioCertifyPrintsLength)
{
    const CliRun r = shtk("scenario certify --seed 7 --steps 10");
    EXPECT_EQ(r.exit, 0);
    EXPECT_NE(r.out.find("\"length\""), std::string::npos);
}

TEST(Cli, Errors)
{
    EXPECT_EQ(shtk("validate bad-dsquared.json").exit, 1);
    EXPECT_EQ(shtk("validate malformed-syntax.json").exit, 1);
    EXPECT_EQ(shtk("validate does-not-exist.json").exit, 1);
    EXPECT_EQ(shtk("reduce-z zint-two.json").exit, 1);
}
