#pragma once

#include <cstdint>
#include <string>

#include "porter/anneal.hpp"
#include "porter/model.hpp"
#include "porter/shake.hpp"

namespace porter {

struct StageTimes {
    double merge_s = 0.0;  // assignment phases, cycle detection, merging
    double sa_s = 0.0;     // windowed annealing pass
    double shake_s = 0.0;  // both full-tour shake passes
};

struct SolveReport {
    std::string instance_name;
    double lower_bound = 0.0;
    double merge_cost = 0.0;   // after the merge construction
    double shaken_cost = 0.0;  // after the first full shake
    double final_cost = 0.0;   // after annealing and the final shake
    StageTimes stage_times;
    Solution solution;
    std::uint64_t seed = 0;
};

// Full heuristic: two-phase assignment, cycle merge, shake, windowed
// annealing, final shake.  Stage costs are non-increasing in that
// order.  n == 0 takes the closed-form depot round trip.
SolveReport solve(const Instance& inst, const ShakeParams& shake_params = {},
                  const SaParams& sa_params = {});

}  // namespace porter
