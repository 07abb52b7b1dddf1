#include "runner.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "worked_examples.hpp"

namespace cartperm::cli {

namespace {

constexpr std::pair<Task, std::string_view> kTaskNames[] = {
    {Task::Classify, "classify"},         {Task::Closures, "closures"},
    {Task::PBorelGraph, "p-borel-graph"}, {Task::Families, "families"},
    {Task::OracleVerify, "oracle-verify"}, {Task::Examples, "examples"},
};

std::uint64_t read_count(const json& j, const std::string& ptr) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0)
        throw ConfigError(ptr, "expected a positive integer");
    return j.get<std::uint64_t>();
}

bool needs_set(Task t) {
    return t == Task::Classify || t == Task::Families || t == Task::OracleVerify;
}
bool needs_monomials(Task t) {
    return t == Task::Closures || t == Task::PBorelGraph || t == Task::OracleVerify;
}

bool all_additive(const CartesianSet& S) {
    return std::all_of(S.components().begin(), S.components().end(),
                       [](const SetComponent& c) { return c.is_additive_group(); });
}
bool all_full(const CartesianSet& S) {
    return std::all_of(S.components().begin(), S.components().end(),
                       [](const SetComponent& c) { return c.kind() == ComponentKind::FullField; });
}

std::vector<Family> characterizations(const CartesianSet& S) {
    std::vector<Family> out;
    for (auto make : {characterize_mult_product, characterize_mixed_full_torus,
                      characterize_mixed_general, characterize_additive_power}) {
        try {
            out.push_back(make(S));
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

std::vector<Family> guaranteed_families(const CartesianSet& S, const MonomialSet& L) {
    std::vector<Family> out;
    const Field& F = S.field();
    if (all_full(S) && is_decreasing(L)) {
        if (has_borel_property(L))
            out.push_back(lta(F, S.dimension()));
        out.push_back(ml_invertible(stable_pattern(L, F.p()), F));
    }
    try {
        out.push_back(borel_claimed_subgroup(S, L));
    } catch (const std::invalid_argument&) {
    }
    return out;
}

std::vector<AffineTransformation> sorted_members(const Family& fam, std::uint64_t budget) {
    auto v = fam.enumerate(budget).collect();
    std::sort(v.begin(), v.end());
    return v;
}

std::string describe(const Family& fam) {
    std::string s(to_string(fam.kind()));
    for (const auto& p : fam.params())
        s += " " + p.name + "=" + std::to_string(p.value);
    return s;
}

std::optional<CandidateSpace> oracle_candidates(const CartesianSet& S) {
    if (all_additive(S) && !all_full(S))
        return additive_hetero_pattern(S).candidates();
    return std::nullopt;
}

std::string mark(bool ok) { return ok ? "[PASS] " : "[FAIL] "; }

} // namespace

std::string_view to_string(Task t) {
    for (const auto& [task, name] : kTaskNames)
        if (task == t)
            return name;
    return "?";
}

RunConfig parse_config(const json& j) {
    if (!j.is_object())
        throw ConfigError("", "configuration must be a JSON object");
    RunConfig c;
    if (j.contains("field"))
        c.field = field_from_json(j["field"], "/field");
    if (j.contains("set")) {
        if (!c.field)
            throw ConfigError("/field", "required by 'set'");
        c.set = cartesian_set_from_json(*c.field, j["set"], "/set");
    }
    if (j.contains("monomials")) {
        std::optional<std::vector<std::uint32_t>> bound;
        if (c.set)
            bound = c.set->bounds();
        c.monomials = monomial_set_from_json(j["monomials"], "/monomials", bound);
        if (c.set && c.monomials->variables() != c.set->dimension())
            throw ConfigError("/monomials", "variable count differs from the set dimension");
    }
    if (!j.contains("tasks"))
        throw ConfigError("/tasks", "missing required field");
    const json& tasks = j["tasks"];
    if (!tasks.is_array())
        throw ConfigError("/tasks", "expected an array");
    if (tasks.empty())
        throw ConfigError("/tasks", "task list is empty");
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const std::string ptr = "/tasks/" + std::to_string(i);
        if (!tasks[i].is_string())
            throw ConfigError(ptr, "expected a task name");
        const auto name = tasks[i].get<std::string>();
        auto it = std::find_if(std::begin(kTaskNames), std::end(kTaskNames),
                               [&](const auto& kv) { return kv.second == name; });
        if (it == std::end(kTaskNames))
            throw ConfigError(ptr, "unknown task '" + name + "'");
        const Task t = it->first;
        if (needs_set(t) && !c.set)
            throw ConfigError("/set", "required by task '" + name + "'");
        if (needs_monomials(t) && !c.monomials)
            throw ConfigError("/monomials", "required by task '" + name + "'");
        if (t == Task::PBorelGraph && !c.field)
            throw ConfigError("/field", "required by task '" + name + "'");
        c.tasks.push_back(t);
    }
    if (j.contains("budget"))
        c.budget.max_transformations = read_count(j["budget"], "/budget");
    if (j.contains("jobs"))
        c.budget.jobs = static_cast<unsigned>(read_count(j["jobs"], "/jobs"));
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            throw ConfigError("/seed", "expected a non-negative integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("output")) {
        if (!j["output"].is_string())
            throw ConfigError("/output", "expected a path string");
        c.output = j["output"].get<std::string>();
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("", "cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(j);
}

TaskOutput task_classify(const RunConfig& c) {
    const CartesianSet& S = *c.set;
    const Field& F = S.field();
    TaskOutput out{"classify", json::object(), true, {}};
    json comps = json::array();
    std::ostringstream sum;
    for (std::size_t i = 0; i < S.dimension(); ++i) {
        const SetComponent& given = S.component(i);
        const SetComponent cls = classify_subset(F, given.elements());
        json e = {{"index", i + 1},
                  {"given_kind", to_string(given.kind())},
                  {"kind", to_string(cls.kind())},
                  {"size", cls.size()}};
        if (cls.is_multiplicative_group()) {
            e["order"] = cls.order();
            e["generator"] = element_to_json(F, cls.generator());
        }
        if (cls.is_additive_group()) {
            e["stabilizer_subfield_degree"] = stabilizer_subfield(cls);
            json basis = json::array();
            for (auto b : cls.basis())
                basis.push_back(element_to_json(F, b));
            e["basis"] = basis;
        }
        sum << "  A" << i + 1 << ": " << to_string(cls.kind()) << ", " << cls.size()
            << " elements\n";
        comps.push_back(std::move(e));
    }
    out.report["field"] = to_json(F);
    out.report["components"] = comps;
    out.report["points"] = S.size();
    if (all_additive(S))
        out.report["transporter_table"] = to_json(additive_hetero_pattern(S));
    out.summary = sum.str();
    return out;
}

TaskOutput task_closures(const RunConfig& c) {
    const MonomialSet& L = *c.monomials;
    TaskOutput out{"closures", json::object(), true, {}};
    const auto w = borel_violation(L);
    const MonomialSet dc = divisibility_closure(L);
    const MonomialSet bc = borel_closure(L);
    out.report = {{"input", to_json(L)},
                  {"is_decreasing", is_decreasing(L)},
                  {"has_borel_property", !w.has_value()},
                  {"divisibility_closure", to_json(dc)},
                  {"borel_closure", to_json(bc)}};
    if (w)
        out.report["borel_witness"] = {{"u", w->member.exponents()},
                                       {"movement", w->movement.exponents()}};
    std::ostringstream sum;
    sum << "  |L| = " << L.size() << ", decreasing: " << (is_decreasing(L) ? "yes" : "no")
        << ", Borel: " << (w ? "no (" + to_string(w->member) + " -> " + to_string(w->movement) + ")"
                             : std::string("yes"))
        << "\n  divisibility closure " << dc.size() << ", Borel closure " << bc.size() << "\n";
    out.summary = sum.str();
    return out;
}

TaskOutput task_graph(const MonomialSet& L, std::uint32_t p) {
    TaskOutput out{"p_borel_graph", json::object(), true, {}};
    const PBorelGraph g = p_borel_graph(L, p);
    out.report = to_json(g);
    const StableMatrixPattern s = stable_pattern(g);
    json mask = json::array();
    for (std::size_t i = 0; i < s.m; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.m; ++j)
            row.push_back(s.allowed(i, j) ? 1 : 0);
        mask.push_back(row);
    }
    out.report["stable_pattern"] = mask;
    std::ostringstream sum;
    for (std::size_t i = 0; i < g.m; ++i)
        for (std::size_t j = 0; j < g.m; ++j)
            if (i != j)
                sum << "  x" << i + 1 << " -> x" << j + 1 << ": "
                    << (g.has_edge(i, j) ? "edge" : "absent") << '\n';
    out.summary = sum.str();
    return out;
}

TaskOutput task_families(const RunConfig& c) {
    const CartesianSet& S = *c.set;
    TaskOutput out{"families", json::object(), true, {}};
    std::ostringstream sum;
    json chars = json::array();
    for (const auto& fam : characterizations(S)) {
        chars.push_back(to_json(fam));
        sum << "  " << describe(fam) << ": " << fam.count() << " maps\n";
    }
    out.report["characterizations"] = chars;
    json guaranteed = json::array();
    if (c.monomials)
        for (const auto& fam : guaranteed_families(S, *c.monomials)) {
            guaranteed.push_back(to_json(fam));
            sum << "  " << describe(fam) << " (contained in Perm_A): " << fam.count() << " maps\n";
        }
    out.report["guaranteed_families"] = guaranteed;
    if (all_additive(S)) {
        const HeteroPattern h = additive_hetero_pattern(S);
        out.report["hetero_pattern"] = to_json(h);
        sum << "  AdditiveHetero (necessary only): " << h.candidates().size() << " candidates\n";
    }
    out.summary = sum.str();
    return out;
}

TaskOutput task_oracle_verify(const RunConfig& c) {
    const CartesianSet& S = *c.set;
    const MonomialSet& L = *c.monomials;
    TaskOutput out{"oracle_verify", json::object(), true, {}};
    std::ostringstream sum;

    const auto cands = oracle_candidates(S);
    const auto stab = oracle_stabilizers(S, c.budget, cands);
    const auto group = filter_span(stab, L, S, c.budget.jobs);
    const GroupCheck axioms = check_group_axioms(group, 1u << 20, c.seed);
    out.report["candidate_space"] = cands ? "hetero-pattern" : "all-affine";
    out.report["stabilizer_count"] = stab.size();
    out.report["perm_group_count"] = group.size();
    out.report["group_axioms"] = to_json(axioms);
    out.passed &= axioms.ok();
    sum << "  stabilizers " << stab.size() << ", affine permutations " << group.size() << '\n'
        << "  " << mark(axioms.ok()) << "group axioms"
        << (axioms.exhaustive ? "" : " (sampled)") << '\n';

    json chars = json::array();
    for (const auto& fam : characterizations(S)) {
        const auto r = compare_with_oracle(describe(fam), sorted_members(fam, c.budget.max_transformations),
                                           stab, true, S);
        out.passed &= r.passed();
        chars.push_back(to_json(r));
        sum << "  " << mark(r.passed()) << r.configuration << " == stabilizers: claimed "
            << r.claimed_count << ", oracle " << r.oracle_count << '\n';
    }
    out.report["characterizations"] = chars;

    json guaranteed = json::array();
    for (const auto& fam : guaranteed_families(S, L)) {
        const auto r = compare_with_oracle(describe(fam), sorted_members(fam, c.budget.max_transformations),
                                           group, false, S, &L);
        out.passed &= r.passed();
        guaranteed.push_back(to_json(r));
        sum << "  " << mark(r.passed()) << r.configuration << " <= Perm_A: claimed "
            << r.claimed_count << ", oracle " << r.oracle_count << ", gap "
            << r.oracle_count - r.verified_count << '\n';
    }
    out.report["guaranteed"] = guaranteed;

    const auto dis = two_route_check(stab, L, S, c.budget.jobs);
    json dj = json::array();
    for (const auto& d : dis)
        dj.push_back({{"T", to_json(d.T)},
                      {"span_condition", d.span_condition},
                      {"code_preserved", d.code_preserved}});
    out.report["two_route"] = {{"checked", stab.size()}, {"disagreements", dj}};
    out.passed &= dis.empty();
    sum << "  " << mark(dis.empty()) << "span condition agrees with code check on " << stab.size()
        << " stabilizers\n";
    out.summary = sum.str();
    return out;
}

TaskOutput task_examples(const RunConfig& c) {
    TaskOutput out{"examples", json::object(), true, {}};
    const auto asserts = run_worked_examples(c.budget);
    json list = json::array();
    std::ostringstream sum;
    std::size_t failed = 0;
    for (const auto& a : asserts) {
        list.push_back(to_json(a));
        failed += !a.passed;
        sum << "  " << mark(a.passed) << a.example << ": " << a.name;
        if (!a.detail.empty())
            sum << " [" << a.detail << "]";
        sum << '\n';
        if (a.note)
            sum << "         note: " << *a.note << '\n';
    }
    out.passed = failed == 0;
    out.report = {{"assertions", list}, {"passed", asserts.size() - failed}, {"failed", failed}};
    out.summary = sum.str();
    return out;
}

TaskOutput task_group(const RunConfig& c) {
    const CartesianSet& S = *c.set;
    TaskOutput out{"group", json::object(), true, {}};
    const auto stab = oracle_stabilizers(S, c.budget, oracle_candidates(S));
    json entries = json::array();
    std::uint64_t in_group = 0;
    if (c.monomials) {
        SpanChecker checker(*c.monomials, S);
        for (const auto& T : stab) {
            json e = {{"T", to_json(T)}, {"stabilizes_set", true}};
            const auto w = checker.violation(T);
            e["stabilizes_span"] = !w.has_value();
            e["witness"] = w ? json{{"u", w->member.exponents()}, {"monomial", w->monomial.exponents()}}
                             : json(nullptr);
            in_group += !w;
            entries.push_back(std::move(e));
        }
    } else {
        for (const auto& T : stab)
            entries.push_back({{"T", to_json(T)}, {"stabilizes_set", true}});
    }
    out.report = {{"stabilizer_count", stab.size()}, {"entries", entries}};
    std::ostringstream sum;
    sum << "  stabilizers " << stab.size();
    if (c.monomials) {
        out.report["perm_group_count"] = in_group;
        sum << ", affine permutations " << in_group;
    }
    out.summary = sum.str() + "\n";
    return out;
}

RunResult run(const RunConfig& config) {
    RunResult result;
    for (Task t : config.tasks) {
        try {
            switch (t) {
            case Task::Classify:
                result.outputs.push_back(task_classify(config));
                break;
            case Task::Closures:
                result.outputs.push_back(task_closures(config));
                break;
            case Task::PBorelGraph:
                result.outputs.push_back(task_graph(*config.monomials, config.field->p()));
                break;
            case Task::Families:
                result.outputs.push_back(task_families(config));
                break;
            case Task::OracleVerify:
                result.outputs.push_back(task_oracle_verify(config));
                break;
            case Task::Examples:
                result.outputs.push_back(task_examples(config));
                break;
            }
        } catch (const BudgetExceeded& e) {
            std::string name(to_string(t));
            std::replace(name.begin(), name.end(), '-', '_');
            result.outputs.push_back(
                {name, {{"error", e.what()}, {"required", e.required()},
                                             {"budget", e.budget()}},
                 false, std::string("  budget exceeded: ") + e.what() + "\n"});
            result.exit_code = BudgetHit;
            return result;
        }
        if (!result.outputs.back().passed)
            result.exit_code = VerificationFailed;
    }
    return result;
}

void write_outputs(const RunResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& o : result.outputs) {
        std::ofstream f(dir / (o.name + ".json"));
        f << o.report.dump(2) << '\n';
    }
}

} // namespace cartperm::cli
