#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tenspect/cli.hpp"
#include "tenspect/io.hpp"

using namespace tenspect;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    [[nodiscard]] json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, CountTable) {
    const auto r = run({"count", "3", "3", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report()["count"], 37);
    EXPECT_EQ(run({"count", "2", "2", "2", "2"}).report()["count"], 24);
    EXPECT_EQ(run({"count", "--symmetric", "3", "3"}).report()["count"], 7);
}

TEST(Cli, SvdIdentityFixture) {
    const auto r = run({"svd", "--fixture", "identity3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report()["sigmas"], json::array({1.0, 1.0, 1.0}));
    EXPECT_EQ(r.report()["config"]["fixture"], "identity3");
}

TEST(Cli, DemoCommand) {
    const auto r = run({"demo-paper"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = r.report();
    EXPECT_EQ(j["count"], 15);
    EXPECT_EQ(j["real_count"], 9);
    EXPECT_NEAR(j["min_distance"].get<double>(), 184.038, 0.01);
    for (const auto& c : j["published_factor_cosines"]) EXPECT_GE(c.get<double>(), 0.9999);
    EXPECT_LE(j["kronecker_relative_error"].get<double>(), 5e-3);
    EXPECT_EQ(j["config"]["seed"], 42);
    EXPECT_EQ(j["config"]["starts"], 500);
}

TEST(Cli, DeterministicForFixedSeed) {
    const auto a = run({"tuples", "--fixture", "example-kronecker", "--seed", "5", "--starts", "100"});
    const auto b = run({"tuples", "--fixture", "example-kronecker", "--seed", "5", "--starts", "100"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.report()["config"]["seed"], 5);
}

TEST(Cli, ApproxOutputIsATensorFile) {
    const auto r = run({"approx", "--fixture", "example-f"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto path = write_temp("approx.json", r.out);
    const auto back = run({"hosvd", "--input", path});
    ASSERT_EQ(back.code, 0) << back.err;
    const auto file = io::read_tensor_file(path);
    EXPECT_EQ(file.tensor.shape(), (Shape{3, 3, 2}));
    EXPECT_NEAR(r.report()["distance"].get<double>(), 184.038, 0.01);
}

TEST(Cli, MatrixApproxRoundTrip) {
    const auto path = write_temp("m.json", R"({"shape": [3, 2], "data": [3, 0, 0, 2, 0, 0]})");
    const auto r = run({"approx", "--input", path, "--rank", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = r.report();
    EXPECT_NEAR(j["distance"].get<double>(), 2.0, 1e-14);
    EXPECT_EQ(j["critical_points"].size(), 2U);
    const auto again = run({"svd", "--input", write_temp("m1.json", r.out)});
    ASSERT_EQ(again.code, 0) << again.err;
    EXPECT_EQ(again.report()["rank"], 1);
}

TEST(Cli, OrthogonalizeAndHyperdet) {
    const auto m = write_temp("d.json", R"({"shape": [2, 2], "data": [2, 0, 0, 3]})");
    const auto o = run({"orthogonalize", "--input", m});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.report()["critical_count"], 4);
    EXPECT_EQ(o.report()["data"], json::array({1.0, 0.0, 0.0, 1.0}));

    const auto t = write_temp("t.json", R"({"shape": [2, 2, 2], "data": [0.3, -1.2, 0.8, 2.1, -0.5, 0.9, 1.7, -0.4]})");
    const auto h = run({"hyperdet", "--input", t});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_TRUE(h.report()["passed"].get<bool>());
    EXPECT_EQ(h.report()["critical_points"].size(), 6U);
}

TEST(Cli, EigenAndSingspaceFromPolynomial) {
    const auto p = write_temp("fermat.json", R"({"symmetric_poly": {"3,0,0": 1, "0,3,0": 1, "0,0,3": 1}})");
    const auto e = run({"eigen", "--input", p});
    ASSERT_EQ(e.code, 0) << e.err;
    EXPECT_EQ(e.report()["expected_count"], 7);
    const auto s = run({"singspace", "--input", p});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(s.report()["numeric_dimension"], 7);
    EXPECT_TRUE(s.report()["symmetric"].get<bool>());
}

TEST(Cli, TextFormatRendersSameReport) {
    const auto r = run({"count", "3", "3", "3", "--format", "text"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("count: 37"), std::string::npos);
    EXPECT_NE(r.out.find("command: count"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
    const auto unknown = run({"frobnicate"});
    EXPECT_EQ(unknown.code, cli::kExitInputError);
    EXPECT_NE(unknown.err.find("subcommand"), std::string::npos);

    const auto bad_shape = run({"svd", "--input", write_temp("bad.json", R"({"shape": [2, 2], "data": [1]})")});
    EXPECT_EQ(bad_shape.code, cli::kExitInputError);
    EXPECT_NE(bad_shape.err.find("'data'"), std::string::npos);

    const auto malformed = run({"svd", "--input", write_temp("broken.json", "{\"shape\": ")});
    EXPECT_EQ(malformed.code, cli::kExitInputError);
    EXPECT_NE(malformed.err.find("'input'"), std::string::npos);

    EXPECT_EQ(run({"svd"}).code, cli::kExitInputError);
    EXPECT_EQ(run({"svd", "--fixture", "example-f"}).code, cli::kExitInputError);
    EXPECT_EQ(run({"svd", "--fixture", "nope"}).code, cli::kExitInputError);
    EXPECT_EQ(run({"count", "3", "x"}).code, cli::kExitInputError);
    EXPECT_EQ(run({"count"}).code, cli::kExitInputError);
    EXPECT_EQ(run({"approx", "--fixture", "example-f", "--rank", "2"}).code, cli::kExitInputError);
    EXPECT_EQ(run({"svd", "--fixture", "identity3", "--format", "xml"}).code, cli::kExitInputError);
    EXPECT_EQ(run({}).code, cli::kExitInputError);
    EXPECT_EQ(run({"eigen", "--fixture", "example-f"}).code, cli::kExitInputError);

    std::string ones = "1";
    for (int k = 1; k < 24; ++k) ones += ",1";
    const auto big = write_temp("big.json", R"({"shape": [6, 2, 2], "data": [)" + ones + "]}");
    EXPECT_EQ(run({"tuples", "--input", big}).code, cli::kExitInputError);
}

TEST(Cli, NonConvergenceExitsThree) {
    const auto r = run({"approx", "--fixture", "example-f", "--starts", "0", "--real-starts", "0"});
    EXPECT_EQ(r.code, cli::kExitNoConvergence);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("demo-paper"), std::string::npos);
}

TEST(Cli, BinaryRuns) {
    const std::string cmd = std::string(TENSPECT_CLI) + " count 2 2 2 > " + ::testing::TempDir() + "cli_out.json";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    std::ifstream in(::testing::TempDir() + "cli_out.json");
    EXPECT_EQ(json::parse(in)["count"], 6);
}
