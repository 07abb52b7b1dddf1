#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "runner.hpp"

using namespace cartperm;
using namespace cartperm::cli;

namespace {

struct CommonFlags {
    std::optional<std::uint64_t> budget;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> jobs;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--budget", f.budget, "maximum number of candidate maps")->check(CLI::PositiveNumber);
    cmd->add_option("--out", f.out, "directory for JSON reports");
    cmd->add_option("--seed", f.seed, "seed for sampled checks");
    cmd->add_option("--jobs", f.jobs, "worker threads for the oracle")->check(CLI::PositiveNumber);
}

void apply(const CommonFlags& f, RunConfig& c) {
    if (f.budget)
        c.budget.max_transformations = *f.budget;
    if (f.seed)
        c.seed = *f.seed;
    if (f.jobs)
        c.budget.jobs = *f.jobs;
    if (f.out)
        c.output = *f.out;
}

int finish(const RunResult& r, const RunConfig& c) {
    for (const auto& o : r.outputs)
        std::cout << o.name << (o.passed ? "" : " (failed)") << '\n' << o.summary;
    const auto dir = c.output.value_or("cartperm_out");
    write_outputs(r, dir);
    std::cout << "reports written to " << dir.string() << "\n";
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine permutations of monomial Cartesian codes"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string path;
    std::uint32_t p = 2;

    auto* verify = app.add_subcommand("verify", "run the tasks of a configuration file");
    verify->add_option("config", path, "configuration JSON")->required();
    add_common(verify, flags);

    auto* examples = app.add_subcommand("examples", "reproduce the worked examples");
    add_common(examples, flags);

    auto* graph = app.add_subcommand("graph", "p-Borel graph of a monomial set");
    graph->add_option("monomials", path, "monomial-set JSON")->required();
    graph->add_option("--p", p, "characteristic")->required();
    add_common(graph, flags);

    auto* group = app.add_subcommand("group", "list the stabilizers of a configuration's set");
    group->add_option("config", path, "configuration JSON")->required();
    add_common(group, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig config;
        RunResult result;
        if (verify->parsed()) {
            config = load_config(path);
            apply(flags, config);
            result = run(config);
        } else if (examples->parsed()) {
            config.tasks = {Task::Examples};
            apply(flags, config);
            result = run(config);
        } else if (graph->parsed()) {
            if (!is_prime(p))
                throw ConfigError("", "--p must be prime");
            std::ifstream in(path);
            if (!in)
                throw ConfigError("", "cannot open " + path);
            json j;
            try {
                j = json::parse(in);
            } catch (const json::parse_error& e) {
                throw ConfigError("", std::string("invalid JSON: ") + e.what());
            }
            apply(flags, config);
            result.outputs.push_back(task_graph(monomial_set_from_json(j), p));
        } else {
            config = load_config(path);
            if (!config.set)
                throw ConfigError("/set", "required by 'group'");
            apply(flags, config);
            result.outputs.push_back(task_group(config));
        }
        return finish(result, config);
    } catch (const ConfigError& e) {
        std::cerr << "config error at " << e.what() << '\n';
        return ConfigInvalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return BudgetHit;
    }
}
