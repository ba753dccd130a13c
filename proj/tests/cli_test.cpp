#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "gyro/cli.hpp"

namespace gyro::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result gyro(std::vector<std::string> args, Environment env = {}) {
    args.insert(args.begin(), "gyro");
    std::ostringstream out, err;
    const int code = run(args, out, err, env);
    return {code, out.str(), err.str()};
}

TEST(Cli, AddEinstein) {
    const Result r = gyro({"add", "--model", "einstein", "--u", "0.5,0", "--v", "0.5,0"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "0.8,0\n");
}

TEST(Cli, AddNegativeValues) {
    const Result r = gyro({"add", "--model", "mobius", "--u", "-0.5,0", "--v", "-0.5,0"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "-0.8,0\n");
}

TEST(Cli, AddDiskComplexSyntax) {
    const Result r = gyro({"add", "--model", "poincare-disk", "--u", "0", "--v", "0.3+0.1i"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "0.3,0.1\n");
}

TEST(Cli, StructuredPointOutput) {
    const Result r = gyro({"add", "--model", "einstein", "--u", "0.5", "--v", "0.5", "--output", "structured"});
    EXPECT_EQ(r.code, kOk);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["result"][0], 0.8);
}

TEST(Cli, Gyr) {
    const Result r = gyro({"gyr", "--model", "poincare-disk", "--a", "0.5", "--b", "0.5i", "--c", "0.3"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "0.2647058823529412,-0.1411764705882353\n");
}

TEST(Cli, Dist) {
    Result r = gyro({"dist", "--model", "poincare-disk", "--u", "0", "--v", "0.5"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_NEAR(std::stod(r.out), 1.0986122886681098, 1e-12);
    r = gyro({"dist", "--model", "einstein", "--gyronorm", "euclidean", "--u", "0,0", "--v", "0.5,0"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "0.5\n");
}

TEST(Cli, Convert) {
    const Result r = gyro({"convert", "--from", "mobius", "--to", "einstein", "0.5,0"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "0.8,0\n");
    EXPECT_EQ(gyro({"convert", "--from", "mobius", "--to", "einstein", "-0.5,0"}).out, "-0.8,0\n");
    EXPECT_EQ(gyro({"convert", "--from", "group", "--to", "einstein", "0.5,0"}).code, kUsage);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(gyro({}).code, kUsage);
    EXPECT_EQ(gyro({"frobnicate"}).code, kUsage);
    EXPECT_EQ(gyro({"add", "--model", "klein", "--u", "0", "--v", "0"}).code, kUsage);
    EXPECT_EQ(gyro({"add", "--model", "einstein", "--u", "0.5,0"}).code, kUsage);
    EXPECT_EQ(gyro({"add", "--model", "einstein", "--u", "0.5,x", "--v", "0,0"}).code, kUsage);
    EXPECT_EQ(gyro({"add", "--model", "einstein", "--u", "0.5,0", "--v", "0.5"}).code, kUsage);
    EXPECT_EQ(gyro({"add", "--model", "einstein", "--dim", "3", "--u", "0.5,0", "--v", "0,0"}).code, kUsage);
    EXPECT_EQ(gyro({"check", "--model", "einstein", "--suite", "nope"}).code, kUsage);
    EXPECT_EQ(gyro({"check", "--model", "einstein", "--suite", "axioms", "--gyronorm", "poincare"}).code, kUsage);
    EXPECT_EQ(gyro({"check", "--model", "einstein", "--suite", "axioms", "--seed", "abc"}).code, kUsage);
}

TEST(Cli, UnknownNameListsChoices) {
    const Result r = gyro({"check", "--model", "einstein", "--suite", "nope"});
    EXPECT_NE(r.err.find("axioms"), std::string::npos) << r.err;
}

TEST(Cli, BoundaryExit) {
    Result r = gyro({"add", "--model", "mobius", "--u", "0.9999999,0", "--v", "0.9999999,0"});
    EXPECT_EQ(r.code, kBoundary);
    EXPECT_FALSE(r.err.empty());
    r = gyro({"add", "--model", "einstein", "--u", "1,0", "--v", "0,0"});
    EXPECT_EQ(r.code, kBoundary);
    EXPECT_EQ(gyro({"add", "--model", "mobius", "--u", "0.9999,0", "--v", "0.9999,0"}).code, kOk);
}

TEST(Cli, CheckPassesAndFails) {
    Result r = gyro({"check", "--model", "einstein", "--suite", "axioms", "--samples", "300"});
    EXPECT_EQ(r.code, kOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["suite"], "axioms");
    EXPECT_EQ(doc["samples"], 300);
    r = gyro({"check", "--model", "poincare-disk", "--suite", "klee", "--samples", "300"});
    EXPECT_EQ(r.code, kPropertyFailure);
    r = gyro({"check", "--model", "group", "--suite", "klee", "--samples", "300", "--output", "text"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("klee_condition"), std::string::npos);
}

TEST(Cli, SeedFromEnvironment) {
    Environment env;
    env.seed = "7";
    const std::vector<std::string> args{"check", "--model", "mobius", "--suite", "gyronorm", "--samples", "50"};
    const auto doc = nlohmann::json::parse(gyro(args, env).out);
    EXPECT_EQ(doc["seed"], 7);
    std::vector<std::string> flagged = args;
    flagged.insert(flagged.end(), {"--seed", "9"});
    EXPECT_EQ(nlohmann::json::parse(gyro(flagged, env).out)["seed"], 9);
    EXPECT_EQ(nlohmann::json::parse(gyro(args).out)["seed"], 42);
}

TEST(Cli, ByteIdenticalReports) {
    const std::vector<std::string> args{"check", "--model", "poincare-disk", "--suite", "klee", "--samples", "500"};
    const Result a = gyro(args), b = gyro(args);
    EXPECT_EQ(a.out, b.out);
    std::vector<std::string> threaded = args;
    threaded.insert(threaded.end(), {"--workers", "4"});
    EXPECT_EQ(a.out, gyro(threaded).out);
}

TEST(Cli, TolerancesAreReported) {
    const Result r = gyro({"check", "--model", "group", "--suite", "metric", "--samples", "20", "--tol-abs", "1e-6",
                           "--tol-rel", "0"});
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["tolerance"]["abs"], 1e-6);
    EXPECT_EQ(doc["tolerance"]["rel"], 0.0);
    EXPECT_EQ(gyro({"check", "--model", "group", "--suite", "metric", "--tol-abs", "-1"}).code, kUsage);
}

}  // namespace
}  // namespace gyro::cli
