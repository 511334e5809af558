#include "porter/pipeline.hpp"

#include <chrono>

#include "porter/assign.hpp"
#include "porter/cycles.hpp"

namespace porter {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

SolveReport solve(const Instance& inst, const ShakeParams& shake_params,
                  const SaParams& sa_params) {
    SolveReport report;
    report.instance_name = inst.name();
    report.seed = sa_params.rng_seed;

    if (inst.n() == 0) {
        // Only the depot round trip exists.
        report.solution.sequence = PickupSequence::identity(1);
        report.solution.assignment = Assignment::identity(1);
        report.solution.cost = 2.0 * dist(inst.depot_end(), inst.depot_start());
        report.lower_bound = report.solution.cost;
        report.merge_cost = report.solution.cost;
        report.shaken_cost = report.solution.cost;
        report.final_cost = report.solution.cost;
        return report;
    }

    auto t = clock_type::now();
    const TwoPhaseResult phases = two_phase_assign(inst);
    const CycleSet cycles = detect_cycles(inst, phases.forward, phases.backward);
    Solution sol = merge_all(inst, cycles);
    report.stage_times.merge_s = seconds_since(t);
    report.merge_cost = sol.cost;

    report.lower_bound = lower_bound(inst);

    t = clock_type::now();
    sol = shake(inst, sol, shake_params);
    report.stage_times.shake_s = seconds_since(t);
    report.shaken_cost = sol.cost;

    t = clock_type::now();
    sol = anneal_pass(inst, sol, sa_params);
    report.stage_times.sa_s = seconds_since(t);

    t = clock_type::now();
    sol = shake(inst, sol, shake_params);
    report.stage_times.shake_s += seconds_since(t);
    report.final_cost = sol.cost;

    report.solution = std::move(sol);
    return report;
}

}  // namespace porter
