#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = thmon::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EqExitCodes) {
    Result eq = run({"eq", "M1 M1", "M1"});
    EXPECT_EQ(eq.code, 0);
    EXPECT_EQ(eq.out.rfind("EQUAL", 0), 0u);
    EXPECT_EQ(run({"eq", "M1", "M2"}).code, 1);
    EXPECT_EQ(run({"eq", "--mode", "brute", "M1", "M2"}).code, 1);
    EXPECT_EQ(run({"eq", "--mode", "table", "Not Not", ""}).code, 0);
    EXPECT_EQ(run({"--k", "3", "eq", "Not Not", "Not Not Not Not"}).code, 0);
}

TEST(Cli, EqJson) {
    Result r = run({"eq", "--json", "M1 ZtoE M1", "M1 ZtoE M1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"verdict\":\"EQUAL\""), std::string::npos);
    EXPECT_NE(r.out.find("\"imc_sizes\":[1,1]"), std::string::npos);
}

TEST(Cli, ErrorsExitWithTwo) {
    Result bad = run({"eq", "M1 (", "M1"});
    EXPECT_EQ(bad.code, thmon::cli::kExitError);
    EXPECT_NE(bad.err.find("line 1, column 4"), std::string::npos);
    EXPECT_EQ(run({"frobnicate"}).code, thmon::cli::kExitError);
    EXPECT_EQ(run({"eq", "M1"}).code, thmon::cli::kExitError);
    EXPECT_EQ(run({"--k", "1", "info", "M1"}).code, thmon::cli::kExitError);
    EXPECT_EQ(run({"eq", "@{{\"k\":2,\"table\":[[\"0\",\"0\"],[\"1\",\"00\"]]}}", "M1"}).code,
              thmon::cli::kExitError);
    EXPECT_EQ(run({"bench", "--n-max", "1000"}).code, thmon::cli::kExitError);
}

TEST(Cli, TableFiles) {
    auto path = std::filesystem::temp_directory_path() / "thmon_cli_test_table.json";
    {
        std::ofstream f(path);
        f << R"({"k":2,"table":[["0","0"],["1","00"]]})";
    }
    Result info = run({"info", path.string()});
    EXPECT_EQ(info.code, 0);
    EXPECT_NE(info.out.find("normal: no"), std::string::npos);
    Result norm = run({"normalize", path.string()});
    EXPECT_EQ(norm.out, "{(00,00),(01,01),(1,00)}\n");
    Result json = run({"normalize", "--json", path.string()});
    EXPECT_EQ(json.out, "{\"k\":2,\"table\":[[\"00\",\"00\"],[\"01\",\"01\"],[\"1\",\"00\"]]}\n");
    Result token = run({"maxext", "@{" + path.string() + "}"});
    EXPECT_EQ(token.out, "{(0,0),(1,00)}\n");
    {
        std::ofstream f(path);
        f << "{\"k\":2,\n\"table\":[[\"0\",\"0\"],[\"01\",\"00\"]]}";
    }
    Result invalid = run({"validate", path.string()});
    EXPECT_EQ(invalid.code, thmon::cli::kExitError);
    EXPECT_NE(invalid.err.find("01"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, OtherSubcommands) {
    EXPECT_EQ(run({"mul", "Not", "Not"}).out, "{((),())}\n");
    EXPECT_EQ(run({"validate", "M1 tau(1,2)"}).code, 0);
    Result f = run({"factor", "M1"});
    EXPECT_EQ(f.code, 0);
    EXPECT_EQ(run({"eq", f.out.substr(0, f.out.size() - 1), "M1"}).code, 0);
    EXPECT_EQ(run({"dclass", "M1"}).out, "D-class: 1\n");
    EXPECT_EQ(run({"dclass", "Not", "M1"}).code, 0);
    EXPECT_EQ(run({"--k", "3", "dclass", "@{{\"k\":3,\"table\":[[\"0\",\"0\"],[\"1\",\"1\"]]}}",
                   "@{{\"k\":3,\"table\":[[\"0\",\"0\"]]}}"})
                  .code,
              1);
    Result dot = run({"dfa-export", "M1 ZtoE M1", "--target", "0"});
    EXPECT_NE(dot.out.find("digraph"), std::string::npos);
    Result json = run({"dfa-export", "--json", "M1", "--target", "0"});
    EXPECT_EQ(json.out, "{\"states\":2,\"start\":0,\"accept\":1,\"edges\":[[0,0,1],[0,1,1]]}\n");
    Result bench = run({"bench", "--n-max", "4"});
    EXPECT_EQ(bench.code, 0);
    EXPECT_EQ(std::count(bench.out.begin(), bench.out.end(), '\n'), 4);
}
