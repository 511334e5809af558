#include "porter/assign.hpp"

#include "porter/errors.hpp"
#include "porter/lap.hpp"

namespace porter {

namespace {

CostMatrix forward_matrix(const Instance& inst) {
    const int n1 = inst.size();
    CostMatrix c(n1);
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) {
            c.at(i, j) = dist(inst.item(i), inst.placeholder(j));
        }
    }
    for (int k = 1; k < n1; ++k) {
        c.forbid(0, k);
        c.forbid(k, 0);
    }
    return c;
}

CostMatrix backward_matrix(const Instance& inst) {
    const int n1 = inst.size();
    CostMatrix c(n1);
    for (int j = 0; j < n1; ++j) {
        for (int i = 0; i < n1; ++i) {
            c.at(j, i) = dist(inst.placeholder(j), inst.item(i));
        }
    }
    return c;
}

}  // namespace

Assignment forward_assign(const Instance& inst) {
    const LapResult r = solve_lap(forward_matrix(inst));
    Assignment a;
    a.map = r.col_of_row;
    return a;
}

std::vector<int> backward_assign(const Instance& inst, const Assignment& fwd) {
    if (inst.n() < 1) {
        throw degenerate_error("backward assignment needs at least one real item");
    }
    if (fwd.size() != inst.size()) {
        throw input_error("forward assignment does not match the instance");
    }
    CostMatrix c = backward_matrix(inst);
    for (int i = 0; i < inst.size(); ++i) {
        c.forbid(fwd(i), i);
    }
    return solve_lap(c).col_of_row;
}

TwoPhaseResult two_phase_assign(const Instance& inst) {
    TwoPhaseResult r;
    r.forward = forward_assign(inst);
    r.backward = backward_assign(inst, r.forward);
    for (int i = 0; i < inst.size(); ++i) {
        r.forward_cost += dist(inst.item(i), inst.placeholder(r.forward(i)));
        r.backward_cost += dist(inst.placeholder(i), inst.item(r.backward[static_cast<size_t>(i)]));
    }
    return r;
}

double lower_bound(const Instance& inst) {
    const LapResult fwd = solve_lap(forward_matrix(inst));
    const LapResult bwd = solve_lap(backward_matrix(inst));
    return fwd.total + bwd.total;
}

}  // namespace porter
