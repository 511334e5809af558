#pragma once

#include <vector>

#include "porter/model.hpp"

namespace porter {

struct TwoPhaseResult {
    Assignment forward;         // item -> placeholder, forward(0) == 0
    std::vector<int> backward;  // placeholder -> next item, never undoes forward
    double forward_cost = 0.0;  // sum of d(item, assigned placeholder)
    double backward_cost = 0.0; // sum of d(placeholder, next item)
};

// Min-cost item -> placeholder bijection over d(p_i, s_j), with the
// depot pair pinned: item 0 takes placeholder 0 and nothing else may.
Assignment forward_assign(const Instance& inst);

// Min-cost placeholder -> item map over d(s_j, p_i), forbidding every
// cell that would send a placeholder straight back to the item the
// forward assignment drew it from.  That exclusion rules out 1-item
// loops, so instances need n >= 1 (degenerate_error otherwise).
std::vector<int> backward_assign(const Instance& inst, const Assignment& fwd);

// Both phases plus their geometric costs.
TwoPhaseResult two_phase_assign(const Instance& inst);

// forward_assign cost plus the unconstrained backward matching cost.
// Every closed tour splits into one forward set and one backward set of
// legs, and each matching is separately optimal, so this never exceeds
// the optimal tour cost.
double lower_bound(const Instance& inst);

}  // namespace porter
