#include "porter/cycles.hpp"

#include <algorithm>
#include <limits>

#include "porter/errors.hpp"

namespace porter {

double cycle_cost(const Instance& inst, const Cycle& c) {
    const int k = c.size();
    double total = 0.0;
    for (int t = 0; t < k; ++t) {
        const Point& s = inst.placeholder(c.placeholder_at(t));
        total += dist(inst.item(c.item_at(t)), s);
        total += dist(s, inst.item(c.item_at((t + 1) % k)));
    }
    return total;
}

CycleSet detect_cycles(const Instance& inst, const Assignment& fwd,
                       const std::vector<int>& bwd) {
    const int n1 = inst.size();
    if (fwd.size() != n1 || static_cast<int>(bwd.size()) != n1) {
        throw input_error("detect_cycles: map dimensions do not match the instance");
    }
    CycleSet cs;
    std::vector<char> visited(static_cast<size_t>(n1), 0);
    for (int start = 0; start < n1; ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        Cycle c;
        int cur = start;
        do {
            visited[static_cast<size_t>(cur)] = 1;
            c.items.push_back(cur);
            c.placeholders.push_back(fwd(cur));
            cur = bwd[static_cast<size_t>(fwd(cur))];
        } while (cur != start);
        cs.cycles.push_back(std::move(c));
    }
    return cs;
}

double merge_delta(const Instance& inst, const Cycle& a, const Cycle& b,
                   int i, int j) {
    if (i < 0 || i >= a.size() || j < 0 || j >= b.size()) {
        throw input_error("merge_delta: edge index out of range");
    }
    const Point& sa = inst.placeholder(a.placeholder_at(i));
    const Point& na = inst.item(a.item_at((i + 1) % a.size()));
    const Point& sb = inst.placeholder(b.placeholder_at(j));
    const Point& nb = inst.item(b.item_at((j + 1) % b.size()));
    return dist(sa, nb) + dist(sb, na) - dist(sa, na) - dist(sb, nb);
}

namespace {

struct PairBest {
    double delta = std::numeric_limits<double>::infinity();
    int edge_i = 0;
    int edge_j = 0;
};

// Best cut pair between two cycles; first strict improvement wins, so
// ties resolve to the smallest (edge_i, edge_j).
PairBest best_pair(const Instance& inst, const Cycle& a, const Cycle& b) {
    PairBest best;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
            const double d = merge_delta(inst, a, b, i, j);
            if (d < best.delta) {
                best = {d, i, j};
            }
        }
    }
    return best;
}

// Cycle rotated so the element after cut edge `e` comes first.
Cycle rotated_after(const Cycle& c, int e) {
    const int k = c.size();
    const int from = (e + 1) % k;
    Cycle r;
    r.items.reserve(static_cast<size_t>(k));
    r.placeholders.reserve(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) {
        const int src = (from + t) % k;
        r.items.push_back(c.item_at(src));
        r.placeholders.push_back(c.placeholder_at(src));
    }
    return r;
}

void check_partition(const Instance& inst, const CycleSet& cs) {
    const int n1 = inst.size();
    std::vector<char> item_seen(static_cast<size_t>(n1), 0);
    std::vector<char> ph_seen(static_cast<size_t>(n1), 0);
    int count = 0;
    for (const Cycle& c : cs.cycles) {
        if (c.items.size() != c.placeholders.size() || c.items.empty()) {
            throw input_error("merge_all: malformed cycle");
        }
        for (int t = 0; t < c.size(); ++t) {
            const int i = c.item_at(t);
            const int j = c.placeholder_at(t);
            if (i < 0 || i >= n1 || j < 0 || j >= n1 ||
                item_seen[static_cast<size_t>(i)] || ph_seen[static_cast<size_t>(j)]) {
                throw input_error("merge_all: cycles do not partition the instance");
            }
            if ((i == 0) != (j == 0)) {
                throw input_error("merge_all: depot item and placeholder must pair up");
            }
            item_seen[static_cast<size_t>(i)] = 1;
            ph_seen[static_cast<size_t>(j)] = 1;
            ++count;
        }
    }
    if (count != n1) {
        throw input_error("merge_all: cycles do not cover the instance");
    }
}

}  // namespace

Solution merge_all(const Instance& inst, const CycleSet& cs, MergeStats* stats) {
    check_partition(inst, cs);
    const int m = static_cast<int>(cs.cycles.size());

    std::vector<Cycle> cyc = cs.cycles;
    std::vector<char> alive(static_cast<size_t>(m), 1);
    if (stats) {
        stats->initial_total = 0.0;
        stats->deltas.clear();
        for (const Cycle& c : cyc) stats->initial_total += cycle_cost(inst, c);
    }

    // best[x][y - x - 1] caches the best cut pair for alive slots x < y.
    std::vector<std::vector<PairBest>> best(static_cast<size_t>(m));
    for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
            best[static_cast<size_t>(x)].push_back(
                best_pair(inst, cyc[static_cast<size_t>(x)], cyc[static_cast<size_t>(y)]));
        }
    }
    auto cached = [&](int x, int y) -> PairBest& {
        return best[static_cast<size_t>(x)][static_cast<size_t>(y - x - 1)];
    };

    for (int round = 0; round + 1 < m; ++round) {
        // Ascending (x, y) scan with strict improvement keeps ties on
        // the smallest id pair.
        int bx = -1, by = -1;
        double bd = std::numeric_limits<double>::infinity();
        for (int x = 0; x < m; ++x) {
            if (!alive[static_cast<size_t>(x)]) continue;
            for (int y = x + 1; y < m; ++y) {
                if (!alive[static_cast<size_t>(y)]) continue;
                if (cached(x, y).delta < bd) {
                    bd = cached(x, y).delta;
                    bx = x;
                    by = y;
                }
            }
        }

        const PairBest& pick = cached(bx, by);
        Cycle merged = rotated_after(cyc[static_cast<size_t>(bx)], pick.edge_i);
        const Cycle rot_b = rotated_after(cyc[static_cast<size_t>(by)], pick.edge_j);
        merged.items.insert(merged.items.end(), rot_b.items.begin(), rot_b.items.end());
        merged.placeholders.insert(merged.placeholders.end(), rot_b.placeholders.begin(),
                                   rot_b.placeholders.end());

        if (stats) stats->deltas.push_back(pick.delta);
        cyc[static_cast<size_t>(bx)] = std::move(merged);
        alive[static_cast<size_t>(by)] = 0;
        for (int z = 0; z < m; ++z) {
            if (z == bx || !alive[static_cast<size_t>(z)]) continue;
            const int lo = std::min(z, bx);
            const int hi = std::max(z, bx);
            cached(lo, hi) = best_pair(inst, cyc[static_cast<size_t>(lo)],
                                       cyc[static_cast<size_t>(hi)]);
        }
    }

    int final_slot = 0;
    while (!alive[static_cast<size_t>(final_slot)]) ++final_slot;
    const Cycle& tour = cyc[static_cast<size_t>(final_slot)];

    Solution sol;
    const int n1 = inst.size();
    sol.assignment.map.assign(static_cast<size_t>(n1), 0);
    int at = 0;
    while (tour.item_at(at) != 0) ++at;
    for (int t = 0; t < n1; ++t) {
        const int src = (at + t) % n1;
        sol.sequence.order.push_back(tour.item_at(src));
        sol.assignment.map[static_cast<size_t>(tour.item_at(src))] = tour.placeholder_at(src);
    }
    sol.cost = tour_cost(inst, sol.sequence, sol.assignment);
    return sol;
}

}  // namespace porter
