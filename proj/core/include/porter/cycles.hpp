#pragma once

#include <vector>

#include "porter/model.hpp"

namespace porter {

// A closed alternating subtour: item_at(t) walks to placeholder_at(t),
// which connects back to item_at(t + 1 mod size).  Placeholders are the
// forward images of the items, so the cycle is stored as items plus
// that mapping.
struct Cycle {
    std::vector<int> items;         // item indices in subtour order
    std::vector<int> placeholders;  // placeholders[t] is the forward image of items[t]

    int size() const { return static_cast<int>(items.size()); }
    int item_at(int t) const { return items[static_cast<size_t>(t)]; }
    int placeholder_at(int t) const { return placeholders[static_cast<size_t>(t)]; }
};

struct CycleSet {
    std::vector<Cycle> cycles;
};

// Sum of a cycle's own legs.
double cycle_cost(const Instance& inst, const Cycle& c);

// Decompose the composed map i -> backward(forward(i)) into disjoint
// cycles.  Each starts at its smallest unvisited item, and cycles are
// emitted in order of that starting item, so item 0 opens cycle 0.
CycleSet detect_cycles(const Instance& inst, const Assignment& fwd,
                       const std::vector<int>& bwd);

// Cost change of cutting backward edge i of a and backward edge j of b
// and cross-linking the cut ends.  Zero when the four endpoints make
// the swap degenerate.
double merge_delta(const Instance& inst, const Cycle& a, const Cycle& b,
                   int i, int j);

// Extra bookkeeping from merge_all for verification.
struct MergeStats {
    double initial_total = 0.0;  // sum of the input cycle costs
    std::vector<double> deltas;  // cost change applied by each merge, in order
};

// Greedily merge all cycles into one feasible tour: each round joins
// the pair and edge choice with the smallest merge_delta, ties broken
// by cycle ids then edge indices.  Exactly cycles.size() - 1 merges.
Solution merge_all(const Instance& inst, const CycleSet& cs,
                   MergeStats* stats = nullptr);

}  // namespace porter
