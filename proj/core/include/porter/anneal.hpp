#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "porter/model.hpp"

namespace porter {

struct SaParams {
    int window = 12;        // positions per window
    int step = 6;           // window start stride, step < window
    double t0 = 0.0;        // start temperature; <= 0 derives it from the tour
    double t_min = 0.0;     // stop temperature; <= 0 means t0 / 1000
    double alpha = 0.95;    // geometric cooling factor, applied per sample
    int samples = 20;       // proposals per temperature sweep
    std::uint64_t rng_seed = 0;
};

// A contiguous run of tour positions lifted out as a standalone
// open-path problem.  The entry anchor is the point the tour comes from
// before the first slot; the exit anchor is the point it continues to
// after the last slot.  pin_first marks the window that holds global
// position 0, whose first slot must keep item 0.
struct WindowProblem {
    std::vector<int> sub_sequence;    // item at each window slot
    std::vector<int> sub_assignment;  // placeholder of that item
    Point entry_anchor;
    Point exit_anchor;
    bool pin_first = false;
};

// Lift positions first..last of a feasible solution into a window.
WindowProblem extract_window(const Instance& inst, const Solution& sol,
                             int first, int last);

// Anchored cost of the window's slots: entry to the first item, each
// item to its placeholder and on to the next item, last placeholder to
// the exit.  Throws input_error on an empty window.
double window_cost(const Instance& inst, const WindowProblem& w);

// Random neighbour of an item slice: one move drawn uniformly from
// swap, reverse and relocate, applied past the first fixed_prefix slots.
// Slices with fewer than two movable entries come back unchanged.
std::vector<int> perturb(const std::vector<int>& slice, std::mt19937_64& rng,
                         int fixed_prefix = 0);

// Simulated annealing on one window: perturb, re-optimize with the
// window-local half-steps, accept by the Metropolis rule, cool by
// alpha after every sample, restart each sweep from the running best.
// Returns the best (sub_sequence, sub_assignment) seen; its window
// cost never exceeds the input's.  samples == 0 or t0 <= t_min (after
// resolving defaults) returns the input unchanged.
std::pair<std::vector<int>, std::vector<int>> anneal_window(
    const Instance& inst, const WindowProblem& w, const SaParams& params,
    std::mt19937_64& rng);

// Slide windows across the tour (starts 0, step, 2*step, ... until one
// reaches the end; window >= n + 1 degenerates to a single global
// window), annealing each in place.  Every window draws its own RNG
// substream from (rng_seed, window index), so the result depends only
// on the inputs.  The returned cost never exceeds the incoming one.
Solution anneal_pass(const Instance& inst, const Solution& sol,
                     const SaParams& params);

}  // namespace porter
