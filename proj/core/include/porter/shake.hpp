#pragma once

#include <vector>

#include "porter/model.hpp"

namespace porter {

struct ShakeParams {
    int max_iters = 50;
    double tolerance = 1e-9;  // absolute stop threshold on the cost change
};

// Iteration trace for instrumentation: costs after every half-step.
struct ShakeTrace {
    int iterations = 0;
    std::vector<double> half_step_costs;  // starts with the incoming cost
};

// Best assignment for a fixed pickup order: slot k prices placeholder j
// at d(p_seq(k), s_j) + d(s_j, p_seq(k+1)), wrapping at the end, with
// the depot pair pinned.  The matching total is exactly the new tour
// cost, so the result never costs more than the incoming assignment.
Assignment reassign_for_sequence(const Instance& inst, const PickupSequence& seq);

// Best pickup order for a fixed assignment, relinking items between the
// consecutive placeholder gaps of the current tour.  The matching prices
// slots by gap, but the returned order keeps each item bound to its own
// placeholder, and those two pairings can disagree; the candidate is
// kept only when it does not cost more than the incoming order.
PickupSequence resequence_for_assignment(const Instance& inst,
                                         const PickupSequence& seq,
                                         const Assignment& asg);

// Alternate the two half-steps until the cost change drops below
// params.tolerance or params.max_iters iterations have run.  Cost is
// non-increasing across every half-step.
Solution shake(const Instance& inst, const Solution& sol,
               const ShakeParams& params = {}, ShakeTrace* trace = nullptr);

}  // namespace porter
