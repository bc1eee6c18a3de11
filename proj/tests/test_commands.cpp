#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kemetric_cli/commands.hpp"
#include "kemetric_cli/spec_file.hpp"

using namespace kemetric;
using namespace kemetric::cli;

namespace
{

class Files : public ::testing::Test
{
protected:
    void SetUp() override
    {
        dir_ = std::filesystem::temp_directory_path() /
               ("kemetric_cmd_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content)
    {
        const auto p = (dir_ / name).string();
        std::ofstream(p) << content;
        return p;
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

const char* kVeronese =
    R"({"n":2,"monomials":[{"exponents":[2,0],"coef":"1/4"},{"exponents":[1,1],"coef":"1/2"},)"
    R"({"exponents":[0,2],"coef":"1/4"}],"lambda":"3"})";
const char* kSegre = R"({"n":2,"monomials":[{"exponents":[1,1],"coef":"1"}]})";
const char* kSymbolic = R"({"n":2,"monomials":[{"exponents":[2,0],"coef":{"sym":"a1"}},)"
                        R"({"exponents":[1,1],"coef":{"sym":"b12"}},{"exponents":[0,2],"coef":{"sym":"a2"}}]})";

int run_binary(const std::string& args)
{
    const std::string cmd = std::string(KEMETRIC_CLI_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_F(Files, VerifyExitCodes)
{
    std::ostringstream out, err;
    EXPECT_EQ(cmd_verify({file("v.json", kVeronese), {}, {}, {}}, out, err), kExitPass);
    EXPECT_NE(out.str().find("result      PASS"), std::string::npos);

    const std::string segre = file("s.json", kSegre);
    EXPECT_EQ(cmd_verify({segre, "4", {}, {}}, out, err), kExitPass);
    EXPECT_EQ(cmd_verify({segre, "6", {}, {}}, out, err), kExitFail);
    EXPECT_EQ(cmd_verify({segre, "6", 3u, {}}, out, err), kExitFail);
    EXPECT_EQ(cmd_verify({segre, {}, {}, {}}, out, err), kExitUsage);
    EXPECT_EQ(cmd_verify({segre, "0.5", {}, {}}, out, err), kExitInput);
    EXPECT_EQ(cmd_verify({path("missing.json"), "4", {}, {}}, out, err), kExitInput);
    EXPECT_EQ(cmd_verify({file("sym.json", kSymbolic), "3", {}, {}}, out, err), kExitUsage);
}

TEST_F(Files, VerifyJsonReportToFile)
{
    std::ostringstream out, err;
    const std::string report = path("r.json");
    EXPECT_EQ(cmd_verify({file("v.json", kVeronese), {}, {}, {Format::Json, report}}, out, err), kExitPass);
    EXPECT_TRUE(out.str().empty());
    const std::string text = read_file(report);
    EXPECT_NE(text.find("\"schema\": \"kemetric.report/1\""), std::string::npos);
    EXPECT_NE(text.find("\"result\": \"PASS\""), std::string::npos);
}

TEST_F(Files, Constraints)
{
    std::ostringstream out, err;
    EXPECT_EQ(cmd_constraints({file("sym.json", kSymbolic), {}, 1u, {}}, out, err), kExitPass);
    EXPECT_NE(out.str().find("[x1] 1/2*lambda + 4*a1 + b12 - 3 = 0"), std::string::npos);
    EXPECT_EQ(cmd_constraints({file("v.json", kVeronese), {}, {}, {}}, out, err), kExitUsage);
}

TEST_F(Files, InducedNormalizeOracle)
{
    std::ostringstream out, err;
    const std::string half = file("h.json", R"({"n":1,"potential":{"log_scale":"3/2",)"
                                            R"("monomials":[{"exponents":[1],"coef":"1"}]}})");
    EXPECT_EQ(cmd_induced({half, 6, {}}, out, err), kExitFail);
    EXPECT_EQ(cmd_induced({file("v.json", kVeronese), 6, {}}, out, err), kExitPass);
    EXPECT_EQ(cmd_normalize({half, 4, {}}, out, err), kExitPass);
    const std::string flat = file("f.json", R"({"n":1,"potential":{"terms":[{"exponents":[2],"coef":"1"}]}})");
    EXPECT_EQ(cmd_normalize({flat, 4, {}}, out, err), kExitUsage);
    EXPECT_EQ(cmd_normalize({file("s.json", kSegre), 4, {}}, out, err), kExitPass);
    EXPECT_EQ(cmd_oracle_check({path("s.json"), {}}, out, err), kExitPass);
    const std::string n4 = file("n4.json", R"({"n":4,"monomials":[]})");
    EXPECT_EQ(cmd_oracle_check({n4, {}}, out, err), kExitUsage);
}

TEST_F(Files, SweepSmall)
{
    std::ostringstream out, err;
    SweepArgs args;
    args.options.dim_lo = 2;
    args.options.dim_hi = 2;
    args.options.k_max = 1;
    args.options.deg_cap = 2;
    EXPECT_EQ(cmd_sweep(args, out, err), kExitPass);
    EXPECT_NE(out.str().find("2 distinct model spaces, 0 UNKNOWN, 0 UNRESOLVED"), std::string::npos);
    args.options.dim_hi = 9;
    EXPECT_EQ(cmd_sweep(args, out, err), kExitUsage);
}

TEST(ArgParsing, DimsAndFormat)
{
    EXPECT_EQ(parse_dims("2..6"), (std::pair<std::size_t, std::size_t>{2, 6}));
    EXPECT_EQ(parse_dims("4"), (std::pair<std::size_t, std::size_t>{4, 4}));
    EXPECT_THROW(parse_dims("6..2"), std::exception);
    EXPECT_THROW(parse_dims("a..b"), std::exception);
    EXPECT_EQ(parse_format("json"), Format::Json);
    EXPECT_EQ(parse_format("text"), Format::Text);
    EXPECT_THROW(parse_format("xml"), std::exception);
}

TEST_F(Files, BinaryExitCodes)
{
    const std::string v = file("v.json", kVeronese);
    const std::string s = file("s.json", kSegre);
    EXPECT_EQ(run_binary("verify --spec " + v), kExitPass);
    EXPECT_EQ(run_binary("verify --spec " + s + " --lambda 6"), kExitFail);
    EXPECT_EQ(run_binary("verify --spec " + s + " --lambda 4 --exact --degree 3"), kExitUsage);
    EXPECT_EQ(run_binary("verify --spec " + file("bad.json", "{\"n\":")), kExitInput);
    EXPECT_EQ(run_binary("sweep --dims 1..1 --max-codim 0 --format json --out " + path("r.json")), kExitPass);
    EXPECT_NE(read_file(path("r.json")).find("\"summary\""), std::string::npos);
    EXPECT_EQ(run_binary("frobnicate"), kExitUsage);
}
