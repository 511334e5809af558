#include "porter/shake.hpp"

#include <cmath>

#include "porter/errors.hpp"
#include "porter/lap.hpp"

namespace porter {

Assignment reassign_for_sequence(const Instance& inst, const PickupSequence& seq) {
    const int n1 = inst.size();
    if (seq.size() != n1) {
        throw input_error("reassign_for_sequence: sequence does not match the instance");
    }
    CostMatrix c(n1);
    for (int k = 0; k < n1; ++k) {
        const Point& from = inst.item(seq(k));
        const Point& to = inst.item(seq((k + 1) % n1));
        for (int j = 0; j < n1; ++j) {
            const Point& s = inst.placeholder(j);
            c.at(k, j) = dist(from, s) + dist(s, to);
        }
    }
    for (int k = 1; k < n1; ++k) {
        c.forbid(0, k);
        c.forbid(k, 0);
    }
    const LapResult r = solve_lap(c);
    Assignment a;
    a.map.assign(static_cast<size_t>(n1), 0);
    for (int k = 0; k < n1; ++k) {
        a.map[static_cast<size_t>(seq(k))] = r.col_of_row[static_cast<size_t>(k)];
    }
    return a;
}

PickupSequence resequence_for_assignment(const Instance& inst,
                                         const PickupSequence& seq,
                                         const Assignment& asg) {
    const int n1 = inst.size();
    if (seq.size() != n1 || asg.size() != n1) {
        throw input_error("resequence_for_assignment: solution does not match the instance");
    }
    // Placeholder visiting order of the current tour; slot t is the gap
    // between placeholder t-1 (wrapping) and placeholder t.
    std::vector<int> ph_order(static_cast<size_t>(n1));
    for (int k = 0; k < n1; ++k) {
        ph_order[static_cast<size_t>(k)] = asg(seq(k));
    }
    CostMatrix c(n1);
    for (int i = 0; i < n1; ++i) {
        const Point& p = inst.item(i);
        for (int t = 0; t < n1; ++t) {
            const Point& prev = inst.placeholder(ph_order[static_cast<size_t>((t + n1 - 1) % n1)]);
            const Point& cur = inst.placeholder(ph_order[static_cast<size_t>(t)]);
            c.at(i, t) = dist(prev, p) + dist(p, cur);
        }
    }
    for (int k = 1; k < n1; ++k) {
        c.forbid(0, k);
        c.forbid(k, 0);
    }
    const LapResult r = solve_lap(c);
    PickupSequence candidate;
    candidate.order.assign(static_cast<size_t>(n1), 0);
    for (int i = 0; i < n1; ++i) {
        candidate.order[static_cast<size_t>(r.col_of_row[static_cast<size_t>(i)])] = i;
    }
    // The matching prices items against placeholder gaps, but each item
    // still walks to its own placeholder, so the relinked order can
    // disagree with the tour it implies.  Keep it only when it helps.
    if (tour_cost(inst, candidate, asg) <= tour_cost(inst, seq, asg)) {
        return candidate;
    }
    return seq;
}

Solution shake(const Instance& inst, const Solution& sol,
               const ShakeParams& params, ShakeTrace* trace) {
    if (params.max_iters < 1) {
        throw input_error("shake: max_iters must be positive");
    }
    if (!(params.tolerance >= 0.0)) {
        throw input_error("shake: tolerance must be non-negative");
    }
    PickupSequence seq = sol.sequence;
    Assignment asg = sol.assignment;
    double prev = tour_cost(inst, seq, asg);
    if (trace) {
        trace->iterations = 0;
        trace->half_step_costs.assign(1, prev);
    }
    double cur = prev;
    for (int t = 1; t <= params.max_iters; ++t) {
        asg = reassign_for_sequence(inst, seq);
        if (trace) trace->half_step_costs.push_back(tour_cost(inst, seq, asg));
        seq = resequence_for_assignment(inst, seq, asg);
        cur = tour_cost(inst, seq, asg);
        if (trace) {
            trace->half_step_costs.push_back(cur);
            trace->iterations = t;
        }
        if (std::abs(cur - prev) < params.tolerance) break;
        prev = cur;
    }
    return Solution{seq, asg, cur};
}

}  // namespace porter
