// Command line front end: generate, solve, verify, brute-force, bench
// and plot pickup-and-placement instances.

#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "porter/bench.hpp"
#include "porter/errors.hpp"
#include "porter/io.hpp"
#include "porter/oracle.hpp"
#include "porter/pipeline.hpp"
#include "porter/svg.hpp"

namespace {

struct SolverOptions {
    porter::ShakeParams shake;
    porter::SaParams sa;
};

void add_solver_options(CLI::App* cmd, SolverOptions& opt) {
    cmd->add_option("--seed", opt.sa.rng_seed, "annealing RNG seed");
    cmd->add_option("--window", opt.sa.window, "annealing window size");
    cmd->add_option("--step", opt.sa.step, "annealing window stride");
    cmd->add_option("--t0", opt.sa.t0, "start temperature (<= 0 derives it)");
    cmd->add_option("--t-min", opt.sa.t_min, "stop temperature (<= 0 means t0/1000)");
    cmd->add_option("--alpha", opt.sa.alpha, "cooling factor in (0, 1)");
    cmd->add_option("--samples", opt.sa.samples, "proposals per temperature sweep");
    cmd->add_option("--max-iters", opt.shake.max_iters, "shake iteration cap");
    cmd->add_option("--eps", opt.shake.tolerance, "shake convergence threshold");
}

void print_report(const porter::SolveReport& r) {
    std::printf("instance    : %s\n", r.instance_name.c_str());
    std::printf("lower bound : %.6f\n", r.lower_bound);
    std::printf("merge cost  : %.6f\n", r.merge_cost);
    std::printf("shaken cost : %.6f\n", r.shaken_cost);
    std::printf("final cost  : %.6f\n", r.final_cost);
    std::printf("stage times : merge %.3f s, sa %.3f s, shake %.3f s\n",
                r.stage_times.merge_s, r.stage_times.sa_s, r.stage_times.shake_s);
    std::printf("seed        : %llu\n", static_cast<unsigned long long>(r.seed));
}

int run(int argc, char** argv) {
    CLI::App app{"heuristic solver for joint item-to-placeholder assignment and pickup routing"};
    app.require_subcommand(1);

    // ----- gen -----
    auto* gen = app.add_subcommand("gen", "generate a uniform random instance");
    int gen_n = 10;
    std::uint64_t gen_seed = 1;
    double gen_extent = 1.0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "number of items")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--extent", gen_extent, "side length of the square region");
    gen->add_option("--out", gen_out, "output instance file")->required();

    // ----- solve -----
    auto* solve_cmd = app.add_subcommand("solve", "run the full heuristic pipeline");
    std::string solve_instance;
    std::string solve_out;
    SolverOptions solve_opt;
    solve_cmd->add_option("instance", solve_instance, "instance file")->required();
    solve_cmd->add_option("--out", solve_out, "write the solution here");
    add_solver_options(solve_cmd, solve_opt);

    // ----- verify -----
    auto* verify_cmd = app.add_subcommand("verify", "check a solution against an instance");
    std::string verify_instance;
    std::string verify_solution;
    verify_cmd->add_option("instance", verify_instance, "instance file")->required();
    verify_cmd->add_option("solution", verify_solution, "solution file")->required();

    // ----- oracle -----
    auto* oracle_cmd = app.add_subcommand("oracle", "exact optimum by enumeration (small n)");
    std::string oracle_instance;
    std::string oracle_out;
    oracle_cmd->add_option("instance", oracle_instance, "instance file")->required();
    oracle_cmd->add_option("--out", oracle_out, "write the optimal solution here");

    // ----- bench -----
    auto* bench_cmd = app.add_subcommand("bench", "benchmark the pipeline over instances");
    std::vector<std::string> bench_files;
    std::vector<int> bench_sizes;
    int bench_count = 1;
    double bench_extent = 1.0;
    int bench_repeats = 10;
    int bench_threads = 0;
    bool bench_times = false;
    std::string bench_ref;
    std::string bench_out;
    SolverOptions bench_opt;
    bench_cmd->add_option("instances", bench_files, "instance files");
    bench_cmd->add_option("--n", bench_sizes, "generate instances of these sizes")
        ->delimiter(',');
    bench_cmd->add_option("--count", bench_count, "instances per generated size");
    bench_cmd->add_option("--extent", bench_extent, "region side for generated instances");
    bench_cmd->add_option("--repeats", bench_repeats, "runs per instance");
    bench_cmd->add_option("--threads", bench_threads, "worker threads (0 = hardware)");
    bench_cmd->add_option("--ref", bench_ref, "reference costs file");
    bench_cmd->add_option("--out", bench_out, "write the CSV table here");
    bench_cmd->add_flag("--times", bench_times, "include timing columns in the CSV");
    add_solver_options(bench_cmd, bench_opt);

    // ----- plot -----
    auto* plot_cmd = app.add_subcommand("plot", "render a solution to SVG");
    std::string plot_instance;
    std::string plot_solution;
    std::string plot_out;
    plot_cmd->add_option("instance", plot_instance, "instance file")->required();
    plot_cmd->add_option("solution", plot_solution, "solution file")->required();
    plot_cmd->add_option("--out", plot_out, "output SVG file")->required();

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        const porter::Instance inst = porter::generate(gen_n, gen_seed, gen_extent);
        porter::write_instance(inst, gen_out);
        std::printf("wrote %s (%s)\n", gen_out.c_str(), inst.name().c_str());
        return 0;
    }

    if (solve_cmd->parsed()) {
        const porter::Instance inst = porter::read_instance(solve_instance);
        const porter::SolveReport report =
            porter::solve(inst, solve_opt.shake, solve_opt.sa);
        print_report(report);
        if (!solve_out.empty()) {
            porter::write_solution(report.solution, solve_out, inst.name());
            std::printf("solution    : %s\n", solve_out.c_str());
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        const porter::Instance inst = porter::read_instance(verify_instance);
        const porter::Solution sol = porter::read_solution(verify_solution);
        const auto report = porter::validate_solution(inst, sol);
        if (report.empty()) {
            std::printf("feasible, cost %.6f\n", sol.cost);
            return 0;
        }
        for (const std::string& line : report) {
            std::fprintf(stderr, "violation: %s\n", line.c_str());
        }
        throw porter::infeasible_error("solution is infeasible");
    }

    if (oracle_cmd->parsed()) {
        const porter::Instance inst = porter::read_instance(oracle_instance);
        const porter::Solution sol = porter::brute_force(inst);
        std::printf("optimal cost %.6f\n", sol.cost);
        if (!oracle_out.empty()) {
            porter::write_solution(sol, oracle_out, inst.name());
        }
        return 0;
    }

    if (bench_cmd->parsed()) {
        std::vector<porter::Instance> instances;
        for (const std::string& f : bench_files) {
            instances.push_back(porter::read_instance(f));
        }
        for (const int n : bench_sizes) {
            for (int k = 0; k < bench_count; ++k) {
                instances.push_back(porter::generate(
                    n, bench_opt.sa.rng_seed + static_cast<std::uint64_t>(k),
                    bench_extent));
            }
        }
        if (instances.empty()) {
            throw porter::input_error("bench needs instance files or --n sizes");
        }
        std::map<std::string, double> refs;
        if (!bench_ref.empty()) refs = porter::read_reference_costs(bench_ref);
        const porter::BenchTable table = porter::run_bench(
            instances, bench_repeats, bench_opt.shake, bench_opt.sa,
            bench_ref.empty() ? nullptr : &refs, bench_threads);
        std::fputs(porter::to_text(table).c_str(), stdout);
        if (!bench_out.empty()) {
            std::ofstream out(bench_out);
            if (!out) throw std::runtime_error("cannot write " + bench_out);
            out << porter::to_csv(table, bench_times);
        }
        return 0;
    }

    if (plot_cmd->parsed()) {
        const porter::Instance inst = porter::read_instance(plot_instance);
        const porter::Solution sol = porter::read_solution(plot_solution);
        porter::write_svg(inst, sol, plot_out);
        std::printf("wrote %s\n", plot_out.c_str());
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const porter::parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const porter::infeasible_error& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return 3;
    } catch (const porter::guard_error& e) {
        std::fprintf(stderr, "guard: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
