// Command-line front end: kernelize, solve, lift, verify, gen.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "mwis/io.hpp"
#include "mwis/scheduler.hpp"
#include "mwis/solver.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace mwis;
namespace fs = std::filesystem;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An instance together with the external name of every internal id.
struct Instance {
    WeightedGraph graph;
    InstanceFormat format = InstanceFormat::MetisWeighted;
    std::vector<std::uint64_t> labels;

    [[nodiscard]] std::uint64_t external(VertexId v) const
    {
        return format == InstanceFormat::EdgeList ? labels.at(v) : std::uint64_t{v} + 1;
    }
};

Instance load_instance(const std::string& path, const std::string& format_name)
{
    std::string text = read_file(path);
    Instance inst;
    if (format_name == "auto") {
        inst.format = sniff_format(text);
    } else {
        auto f = format_from_name(format_name);
        if (!f) throw InputError("unknown format '" + format_name + "' (expected metis, edgelist or auto)");
        inst.format = *f;
    }
    try {
        if (inst.format == InstanceFormat::MetisWeighted) {
            inst.graph = parse_metis(text);
        } else {
            LabeledGraph lg = parse_edge_list(text);
            inst.graph = std::move(lg.graph);
            inst.labels = std::move(lg.labels);
        }
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
    return inst;
}

ReducerConfig load_config(const std::string& rules, const std::string& tier_config, double time_limit)
{
    ReducerConfig config = tier_config.empty() ? parse_rule_list(rules) : parse_tier_config(read_file(tier_config));
    if (time_limit > 0) config.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(time_limit * 1000));
    return config;
}

fs::path default_map_path(const std::string& kernel_path) { return fs::path(kernel_path + ".map"); }

// Rebuilds the kernel with its internal ids from the METIS file and sidecar.
WeightedGraph load_kernel(const std::string& kernel_path, const std::string& map_path)
{
    WeightedGraph dense;
    try {
        dense = parse_metis(read_file(kernel_path));
    } catch (const ParseError& e) {
        throw InputError(kernel_path + ": " + e.what());
    }
    fs::path mp = map_path.empty() ? default_map_path(kernel_path) : fs::path(map_path);
    std::vector<VertexId> ids;
    if (fs::exists(mp)) {
        ids = parse_kernel_map(read_file(mp));
    } else {
        for (VertexId v = 0; v < dense.id_bound(); ++v) ids.push_back(v);
    }
    if (ids.size() != dense.num_vertices())
        throw InputError("kernel map lists " + std::to_string(ids.size()) + " vertices, kernel has "
                         + std::to_string(dense.num_vertices()));
    if (!std::is_sorted(ids.begin(), ids.end()) || std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw InputError("kernel map ids must be strictly increasing");

    WeightedGraph g;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        g.reserve_ids(ids[k]);
        g.add_vertex(dense.weight(static_cast<VertexId>(k)));
    }
    for (VertexId a = 0; a < dense.id_bound(); ++a)
        for (VertexId b : dense.neighbors(a))
            if (a < b) g.add_edge(ids[a], ids[b]);
    return g;
}

SolutionFile to_file(const Instance& inst, const Solution& s)
{
    SolutionFile f;
    f.weight = s.weight;
    for (VertexId v : s.vertices) f.vertices.push_back(inst.external(v));
    std::sort(f.vertices.begin(), f.vertices.end());
    return f;
}

void print_line(const std::string& s) { std::cout << s << std::endl; }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kernelization and exact solving for maximum weight independent set"};
    app.require_subcommand(1);

    // kernelize
    std::string input, format = "auto", rules = "default", tier_config, output, trace_path, stats_path;
    double time_limit = 0;
    bool no_timings = false;
    auto* kernelize = app.add_subcommand("kernelize", "Reduce an instance to a kernel and record the trace");
    kernelize->add_option("-i,--input", input, "Instance file")->required()->check(CLI::ExistingFile);
    kernelize->add_option("--format", format, "metis, edgelist or auto")->capture_default_str();
    kernelize->add_option("--rules", rules, "default, all, or a comma-separated list of operations")
        ->capture_default_str();
    kernelize->add_option("--tier-config", tier_config, "JSON tier configuration (overrides --rules)")
        ->check(CLI::ExistingFile);
    kernelize->add_option("-o,--output", output, "Kernel in METIS format; ids are mapped in OUTPUT.map")->required();
    kernelize->add_option("--trace", trace_path, "Trace file (JSON lines)")->required();
    kernelize->add_option("--stats", stats_path, "Statistics JSON");
    kernelize->add_option("--time-limit", time_limit, "Seconds; stops early without a fixed point");
    kernelize->add_flag("--no-timings", no_timings, "Omit timings from the statistics");

    // solve
    std::string solve_input, solve_format = "auto", solve_output, solve_rules = "default";
    double solve_limit = 0;
    bool exact = false;
    auto* solve = app.add_subcommand("solve", "Kernelize, then solve the kernel by branch and reduce");
    solve->add_option("-i,--input", solve_input, "Instance file")->required()->check(CLI::ExistingFile);
    solve->add_option("--format", solve_format, "metis, edgelist or auto")->capture_default_str();
    solve->add_option("--rules", solve_rules, "Operations used for kernelization")->capture_default_str();
    solve->add_flag("--exact", exact, "Fail unless optimality is proven");
    solve->add_option("--time-limit", solve_limit, "Seconds");
    solve->add_option("-o,--output", solve_output, "Solution file");

    // lift
    std::string lift_trace, lift_solution, lift_original, lift_format = "auto", lift_map, lift_kernel, lift_output;
    auto* lift_cmd = app.add_subcommand("lift", "Map a kernel solution back to the original instance");
    lift_cmd->add_option("--trace", lift_trace, "Trace file")->required()->check(CLI::ExistingFile);
    lift_cmd->add_option("--kernel-solution", lift_solution, "Solution of the kernel (kernel vertex numbers)")
        ->required()
        ->check(CLI::ExistingFile);
    lift_cmd->add_option("--original", lift_original, "Original instance")->required()->check(CLI::ExistingFile);
    lift_cmd->add_option("--format", lift_format, "Format of the original")->capture_default_str();
    lift_cmd->add_option("--kernel", lift_kernel, "Kernel file, used to check the kernel solution");
    lift_cmd->add_option("--kernel-map", lift_map, "Kernel id map (default KERNEL.map)");
    lift_cmd->add_option("-o,--output", lift_output, "Lifted solution file (stdout if omitted)");

    // verify
    std::string verify_input, verify_format = "auto", verify_kernel_path, verify_trace, verify_map,
                                verify_rules = "default", verify_tiers;
    bool check_original = false;
    auto* verify = app.add_subcommand("verify", "Check offset, lifting and the fixed point of a kernel");
    verify->add_option("-i,--input", verify_input, "Original instance")->required()->check(CLI::ExistingFile);
    verify->add_option("--format", verify_format, "metis, edgelist or auto")->capture_default_str();
    verify->add_option("--kernel", verify_kernel_path, "Kernel file")->required()->check(CLI::ExistingFile);
    verify->add_option("--trace", verify_trace, "Trace file")->required()->check(CLI::ExistingFile);
    verify->add_option("--kernel-map", verify_map, "Kernel id map (default KERNEL.map)");
    verify->add_option("--rules", verify_rules, "Operations the kernel must be a fixed point of")
        ->capture_default_str();
    verify->add_option("--tier-config", verify_tiers, "JSON tier configuration")->check(CLI::ExistingFile);
    verify->add_flag("--check-original", check_original, "Also solve the original exactly and compare");

    // gen
    std::size_t gen_n = 0;
    double gen_p = 0;
    Weight gen_wmin = 1, gen_wmax = 10;
    std::uint64_t gen_seed = 0;
    std::string gen_output, gen_format = "metis";
    auto* gen = app.add_subcommand("gen", "Generate a random G(n, p) instance");
    gen->add_option("-n", gen_n, "Vertices")->required();
    gen->add_option("-p", gen_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen->add_option("--wmin", gen_wmin, "Smallest weight")->capture_default_str()->check(CLI::NonNegativeNumber);
    gen->add_option("--wmax", gen_wmax, "Largest weight")->capture_default_str()->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
    gen->add_option("--format", gen_format, "metis or edgelist")->capture_default_str();
    gen->add_option("-o,--output", gen_output, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*kernelize) {
            Instance inst = load_instance(input, format);
            ReducerConfig config = load_config(rules, tier_config, time_limit);
            KernelResult r = reduce(inst.graph, config);
            VertexSet ids = r.kernel.vertices();
            write_file_atomic(output, write_metis(r.kernel));
            write_file_atomic(default_map_path(output), write_kernel_map(ids));
            write_file_atomic(trace_path, serialize_trace(r.trace));
            if (!stats_path.empty()) write_file_atomic(stats_path, stats_json(r.stats, !no_timings));
            print_line("kernel n=" + std::to_string(r.kernel.num_vertices()) + " m="
                       + std::to_string(r.kernel.num_edges()) + " offset=" + std::to_string(r.offset)
                       + " events=" + std::to_string(r.trace.size())
                       + " fixed_point=" + (r.fixed_point ? "true" : "false"));
            return 0;
        }

        if (*solve) {
            Instance inst = load_instance(solve_input, solve_format);
            ReducerConfig config = load_config(solve_rules, "", solve_limit);
            KernelResult r = reduce(inst.graph, config);
            SolveBudget budget;
            if (exact) budget.node_limit = std::numeric_limits<std::size_t>::max();
            if (solve_limit > 0)
                budget.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(solve_limit * 1000));
            SolveResult sr = branch_and_reduce_solve(r.kernel, budget);
            Solution full;
            try {
                full = lift(r.trace, sr.solution, r.kernel, inst.graph);
            } catch (const LiftError&) {
                // Lifting formulas assume an optimal kernel solution.
                if (sr.optimal) throw;
                full = greedy_mwis(inst.graph);
            }
            if (!solve_output.empty()) write_file_atomic(solve_output, write_solution(to_file(inst, full)));
            print_line("weight " + std::to_string(full.weight) + (sr.optimal ? " optimal" : " upper_bound "
                                                                                  + std::to_string(sr.upper_bound + r.offset)));
            if (exact && !sr.optimal) {
                std::cerr << "optimality not proven within the budget\n";
                return kVerifyFailed;
            }
            return 0;
        }

        if (*lift_cmd) {
            Instance inst = load_instance(lift_original, lift_format);
            ReductionTrace trace = parse_trace(read_file(lift_trace));
            SolutionFile kf = parse_solution(read_file(lift_solution));

            std::vector<VertexId> ids;
            std::string map_path = lift_map;
            if (map_path.empty() && !lift_kernel.empty() && fs::exists(default_map_path(lift_kernel)))
                map_path = default_map_path(lift_kernel).string();
            if (!map_path.empty()) ids = parse_kernel_map(read_file(map_path));
            VertexSet kernel_vertices;
            for (std::uint64_t k : kf.vertices) {
                if (k == 0) throw InputError("kernel vertex numbers start at 1");
                if (!ids.empty()) {
                    if (k > ids.size()) throw InputError("kernel vertex " + std::to_string(k) + " not in map");
                    kernel_vertices.push_back(ids[k - 1]);
                } else {
                    kernel_vertices.push_back(static_cast<VertexId>(k - 1));
                }
            }
            kernel_vertices = make_set(std::move(kernel_vertices));

            Solution lifted;
            if (!lift_kernel.empty()) {
                WeightedGraph kernel = load_kernel(lift_kernel, map_path);
                lifted = lift(trace, make_solution(kernel, kernel_vertices), kernel, inst.graph);
            } else if (kf.weight) {
                lifted = lift(trace, Solution{kernel_vertices, *kf.weight}, inst.graph);
            } else {
                throw InputError("kernel solution has no '# weight' header; pass --kernel");
            }
            std::string text = write_solution(to_file(inst, lifted));
            if (lift_output.empty()) std::cout << text;
            else write_file_atomic(lift_output, text);
            return 0;
        }

        if (*verify) {
            Instance inst = load_instance(verify_input, verify_format);
            KernelResult r;
            r.kernel = load_kernel(verify_kernel_path, verify_map);
            r.trace = parse_trace(read_file(verify_trace));
            r.offset = r.trace.offset();
            ReducerConfig config = load_config(verify_rules, verify_tiers, 0);
            SolveBudget budget;
            SolveResult sr = branch_and_reduce_solve(r.kernel, budget);
            if (!sr.optimal) {
                std::cerr << "kernel could not be solved exactly within the solve budget\n";
                return kVerifyFailed;
            }
            std::optional<Weight> optimum;
            if (check_original) {
                SolveResult orig = branch_and_reduce_solve(inst.graph, budget);
                if (!orig.optimal) {
                    std::cerr << "original could not be solved exactly within the solve budget\n";
                    return kVerifyFailed;
                }
                optimum = orig.solution.weight;
            }
            VerifyReport rep = verify_kernel(inst.graph, r, sr.solution, config, optimum);
            print_line(std::string("fixed_point ") + (rep.fixed_point ? "ok" : "FAIL"));
            print_line(std::string("lift ") + (rep.lift_ok ? "ok" : "FAIL"));
            print_line(std::string("weight_identity ") + (rep.weight_identity ? "ok" : "FAIL") + " kernel="
                       + std::to_string(rep.kernel_weight) + " offset=" + std::to_string(rep.offset)
                       + " lifted=" + std::to_string(rep.lifted_weight));
            for (const auto& p : rep.problems) std::cerr << "problem: " << p << '\n';
            return rep.ok() ? 0 : kVerifyFailed;
        }

        if (*gen) {
            auto f = format_from_name(gen_format);
            if (!f) throw InputError("unknown format '" + gen_format + "'");
            if (gen_wmin > gen_wmax) throw InputError("--wmin must not exceed --wmax");
            WeightedGraph g = gen_random(gen_n, gen_p, gen_wmin, gen_wmax, gen_seed);
            write_file_atomic(gen_output, *f == InstanceFormat::MetisWeighted ? write_metis(g) : write_edge_list(g));
            return 0;
        }
    } catch (const LiftError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
