#ifndef CARTPERM_TOOLS_RUNNER_HPP
#define CARTPERM_TOOLS_RUNNER_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cartperm/json_io.hpp"

namespace cartperm::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, ConfigInvalid = 2, BudgetHit = 3 };

enum class Task { Classify, Closures, PBorelGraph, Families, OracleVerify, Examples };

std::string_view to_string(Task t);

struct RunConfig {
    std::optional<Field> field;
    std::optional<CartesianSet> set;
    std::optional<MonomialSet> monomials;
    std::vector<Task> tasks;
    OracleBudget budget;
    std::uint64_t seed = 1;
    std::optional<std::filesystem::path> output;
};

/// Throws ConfigError with the pointer of the offending field. Field, set
/// and monomials are optional as a whole but must be present for the tasks
/// that need them.
RunConfig parse_config(const json& j);
RunConfig load_config(const std::filesystem::path& path);

struct TaskOutput {
    std::string name;    // file stem
    json report;
    bool passed = true;
    std::string summary; // human-readable lines
};

struct RunResult {
    int exit_code = Ok;
    std::vector<TaskOutput> outputs;
};

/// Runs every task in order. Budget overruns and config problems surface
/// as exit codes rather than exceptions; reports of the tasks that did run
/// are kept.
RunResult run(const RunConfig& config);

/// Writes <dir>/<name>.json for every output (pretty-printed, sorted keys).
void write_outputs(const RunResult& result, const std::filesystem::path& dir);

// Single tasks, also used by the subcommands.
TaskOutput task_classify(const RunConfig& c);
TaskOutput task_closures(const RunConfig& c);
TaskOutput task_graph(const MonomialSet& L, std::uint32_t p);
TaskOutput task_families(const RunConfig& c);
TaskOutput task_oracle_verify(const RunConfig& c);
TaskOutput task_examples(const RunConfig& c);
/// Every stabilizer of the set as a transformation report entry.
TaskOutput task_group(const RunConfig& c);

} // namespace cartperm::cli

#endif // CARTPERM_TOOLS_RUNNER_HPP
