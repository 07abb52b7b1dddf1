#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "runner.hpp"

using namespace cartperm;
using namespace cartperm::cli;

namespace {

const char* kMixed = R"({
  "field": {"p": 3},
  "set": {"components": [{"kind": "full"}, {"kind": "mult", "order": 2}]},
  "monomials": {"generators": [[2, 0], [1, 1]]},
  "tasks": ["classify", "closures", "p-borel-graph", "families", "oracle-verify"]
})";

std::string pointer_of(const std::string& text) {
    try {
        parse_config(json::parse(text));
    } catch (const ConfigError& e) {
        return e.pointer();
    }
    return "<no error>";
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Config, Errors) {
    EXPECT_EQ(pointer_of(R"({"tasks": []})"), "/tasks");
    EXPECT_EQ(pointer_of(R"({})"), "/tasks");
    EXPECT_EQ(pointer_of(R"({"tasks": ["nope"]})"), "/tasks/0");
    EXPECT_EQ(pointer_of(R"({"tasks": ["classify"]})"), "/set");
    EXPECT_EQ(pointer_of(R"({"field": {"p": 3}, "tasks": ["closures"]})"), "/monomials");
    EXPECT_EQ(pointer_of(R"({"set": {"components": []}, "tasks": ["examples"]})"), "/field");
    EXPECT_EQ(pointer_of(R"({"field": {"p": 3}, "set": {"components": [{"kind": "full"}]},
                            "monomials": [[1, 1]], "tasks": ["examples"]})"),
              "/monomials/0");
    EXPECT_EQ(pointer_of(R"({"tasks": ["examples"], "budget": 0})"), "/budget");
    EXPECT_EQ(pointer_of(R"({"tasks": ["examples"], "budget": 5})"), "<no error>");
}

TEST(Run, OracleVerifyMixedSet) {
    const RunConfig c = parse_config(json::parse(kMixed));
    const RunResult r = run(c);
    EXPECT_EQ(r.exit_code, Ok);
    ASSERT_EQ(r.outputs.size(), 5u);
    const json& ov = r.outputs[4].report;
    EXPECT_EQ(ov["stabilizer_count"], 36);
    for (const auto& rep : ov["characterizations"]) {
        EXPECT_EQ(rep["oracle_count"], 36);
        EXPECT_EQ(rep["relation"], "equal");
    }
    EXPECT_FALSE(ov["guaranteed"].empty());
    EXPECT_TRUE(ov["two_route"]["disagreements"].empty());
}

TEST(Run, BudgetExceededGivesDistinctCode) {
    RunConfig c = parse_config(json::parse(kMixed));
    c.budget.max_transformations = 10;
    const RunResult r = run(c);
    EXPECT_EQ(r.exit_code, BudgetHit);
    EXPECT_TRUE(r.outputs.back().report.contains("required"));
}

TEST(Run, ExamplesPass) {
    RunConfig c = parse_config(json::parse(R"({"tasks": ["examples"]})"));
    const RunResult r = run(c);
    EXPECT_EQ(r.exit_code, Ok);
    EXPECT_EQ(r.outputs[0].report["failed"], 0);
}

TEST(Run, ByteIdenticalReports) {
    const auto base = std::filesystem::temp_directory_path() / "cartperm_runner_test";
    std::filesystem::remove_all(base);
    RunConfig c = parse_config(json::parse(kMixed));
    write_outputs(run(c), base / "a");
    c.budget.jobs = 3;
    write_outputs(run(c), base / "b");
    for (const auto& entry : std::filesystem::directory_iterator(base / "a"))
        EXPECT_EQ(slurp(entry.path()), slurp(base / "b" / entry.path().filename()))
            << entry.path().filename();
    std::filesystem::remove_all(base);
}
