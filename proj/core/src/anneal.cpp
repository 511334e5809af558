#include "porter/anneal.hpp"

#include <algorithm>
#include <cmath>

#include "porter/errors.hpp"
#include "porter/lap.hpp"

namespace porter {

namespace {

// splitmix64 finalizer; decorrelates consecutive seeds.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform draws straight off the generator, so results do not depend
// on the standard library's distribution implementations.
int rand_below(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct WinState {
    std::vector<int> seq;
    std::vector<int> ph;
};

double state_cost(const Instance& inst, const WindowProblem& w, const WinState& st) {
    const int k = static_cast<int>(st.seq.size());
    double total = dist(w.entry_anchor, inst.item(st.seq[0]));
    for (int t = 0; t < k; ++t) {
        const Point& s = inst.placeholder(st.ph[static_cast<size_t>(t)]);
        total += dist(inst.item(st.seq[static_cast<size_t>(t)]), s);
        if (t + 1 < k) {
            total += dist(s, inst.item(st.seq[static_cast<size_t>(t + 1)]));
        } else {
            total += dist(s, w.exit_anchor);
        }
    }
    return total;
}

// Rebind the window's placeholder pool to the slots of the current
// order.  The entry leg is constant here, so the matching minimizes the
// full window cost.
void window_reassign(const Instance& inst, const WindowProblem& w, WinState& st) {
    const int k = static_cast<int>(st.seq.size());
    std::vector<int> pool = st.ph;
    std::sort(pool.begin(), pool.end());

    CostMatrix c(k);
    for (int t = 0; t < k; ++t) {
        const Point& item = inst.item(st.seq[static_cast<size_t>(t)]);
        for (int q = 0; q < k; ++q) {
            const Point& s = inst.placeholder(pool[static_cast<size_t>(q)]);
            double leg = dist(item, s);
            if (t + 1 < k) {
                leg += dist(s, inst.item(st.seq[static_cast<size_t>(t + 1)]));
            } else {
                leg += dist(s, w.exit_anchor);
            }
            c.at(t, q) = leg;
        }
    }
    if (w.pin_first) {
        const auto it = std::find(pool.begin(), pool.end(), 0);
        if (it == pool.end()) {
            throw input_error("pinned window is missing placeholder 0");
        }
        const int q0 = static_cast<int>(it - pool.begin());
        for (int t = 1; t < k; ++t) c.forbid(t, q0);
        for (int q = 0; q < k; ++q) {
            if (q != q0) c.forbid(0, q);
        }
    }
    const LapResult r = solve_lap(c);
    for (int t = 0; t < k; ++t) {
        st.ph[static_cast<size_t>(t)] = pool[static_cast<size_t>(r.col_of_row[static_cast<size_t>(t)])];
    }
}

// Relink the items between the fixed placeholder gaps of the current
// order; the candidate keeps items bound to their own placeholders, so
// it is adopted only when the window cost does not rise.
void window_resequence(const Instance& inst, const WindowProblem& w, WinState& st) {
    const int k = static_cast<int>(st.seq.size());
    CostMatrix c(k);
    for (int r = 0; r < k; ++r) {
        const Point& item = inst.item(st.seq[static_cast<size_t>(r)]);
        for (int t = 0; t < k; ++t) {
            const Point& prev = (t == 0)
                ? w.entry_anchor
                : inst.placeholder(st.ph[static_cast<size_t>(t - 1)]);
            c.at(r, t) = dist(prev, item) +
                         dist(item, inst.placeholder(st.ph[static_cast<size_t>(t)]));
        }
    }
    if (w.pin_first) {
        for (int t = 1; t < k; ++t) c.forbid(0, t);
        for (int r = 1; r < k; ++r) c.forbid(r, 0);
    }
    const LapResult res = solve_lap(c);

    WinState cand;
    cand.seq.assign(static_cast<size_t>(k), 0);
    cand.ph.assign(static_cast<size_t>(k), 0);
    for (int r = 0; r < k; ++r) {
        const int t = res.col_of_row[static_cast<size_t>(r)];
        cand.seq[static_cast<size_t>(t)] = st.seq[static_cast<size_t>(r)];
        cand.ph[static_cast<size_t>(t)] = st.ph[static_cast<size_t>(r)];
    }
    if (state_cost(inst, w, cand) <= state_cost(inst, w, st)) {
        st = std::move(cand);
    }
}

// Alternate the window half-steps to convergence.
void window_shake(const Instance& inst, const WindowProblem& w, WinState& st) {
    double prev = state_cost(inst, w, st);
    for (int iter = 0; iter < 50; ++iter) {
        window_reassign(inst, w, st);
        window_resequence(inst, w, st);
        const double cur = state_cost(inst, w, st);
        if (std::abs(cur - prev) < 1e-9) break;
        prev = cur;
    }
}

void check_window(const WindowProblem& w) {
    if (w.sub_sequence.empty()) {
        throw input_error("window must contain at least one slot");
    }
    if (w.sub_sequence.size() != w.sub_assignment.size()) {
        throw input_error("window sequence and assignment sizes differ");
    }
    if (w.pin_first && w.sub_sequence[0] != 0) {
        throw input_error("pinned window must hold item 0 in its first slot");
    }
}

}  // namespace

WindowProblem extract_window(const Instance& inst, const Solution& sol,
                             int first, int last) {
    const int n = inst.n();
    if (first < 0 || last > n || first > last) {
        throw input_error("extract_window: position range out of bounds");
    }
    if (sol.sequence.size() != inst.size() || sol.assignment.size() != inst.size()) {
        throw input_error("extract_window: solution does not match the instance");
    }
    WindowProblem w;
    for (int pos = first; pos <= last; ++pos) {
        const int item = sol.sequence(pos);
        w.sub_sequence.push_back(item);
        w.sub_assignment.push_back(sol.assignment(item));
    }
    w.pin_first = (first == 0);
    if (first == 0) {
        w.entry_anchor = (last == n)
            ? inst.item(0)
            : inst.placeholder(sol.assignment(sol.sequence(n)));
    } else {
        w.entry_anchor = inst.placeholder(sol.assignment(sol.sequence(first - 1)));
    }
    w.exit_anchor = (last == n) ? inst.item(0) : inst.item(sol.sequence(last + 1));
    return w;
}

double window_cost(const Instance& inst, const WindowProblem& w) {
    check_window(w);
    const WinState st{w.sub_sequence, w.sub_assignment};
    return state_cost(inst, w, st);
}

std::vector<int> perturb(const std::vector<int>& slice, std::mt19937_64& rng,
                         int fixed_prefix) {
    const int k = static_cast<int>(slice.size());
    const int lo = fixed_prefix;
    if (lo < 0 || lo > k) {
        throw input_error("perturb: fixed prefix out of range");
    }
    std::vector<int> out = slice;
    if (k - lo < 2) return out;

    const int move = rand_below(rng, 3);
    const int i = lo + rand_below(rng, k - lo);
    int j = i;
    while (j == i) j = lo + rand_below(rng, k - lo);

    if (move == 0) {
        std::swap(out[static_cast<size_t>(i)], out[static_cast<size_t>(j)]);
    } else if (move == 1) {
        const int a = std::min(i, j);
        const int b = std::max(i, j);
        std::reverse(out.begin() + a, out.begin() + b + 1);
    } else {
        const int v = out[static_cast<size_t>(i)];
        out.erase(out.begin() + i);
        out.insert(out.begin() + j, v);
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>> anneal_window(
    const Instance& inst, const WindowProblem& w, const SaParams& params,
    std::mt19937_64& rng) {
    check_window(w);
    if (!(params.alpha > 0.0 && params.alpha < 1.0)) {
        throw input_error("anneal: alpha must lie in (0, 1)");
    }
    if (params.samples < 0) {
        throw input_error("anneal: samples must be non-negative");
    }

    const int k = static_cast<int>(w.sub_sequence.size());
    WinState best{w.sub_sequence, w.sub_assignment};
    double c_best = state_cost(inst, w, best);

    double t0 = params.t0;
    if (t0 <= 0.0) t0 = c_best / (2.0 * k);
    const double t_min = params.t_min > 0.0 ? params.t_min : t0 / 1000.0;
    if (params.samples == 0 || t0 <= t_min) {
        return {best.seq, best.ph};
    }

    const int fixed = w.pin_first ? 1 : 0;
    double temp = t0;
    while (temp > t_min) {
        WinState cur = best;
        double c_cur = c_best;
        for (int s = 0; s < params.samples; ++s) {
            WinState cand;
            cand.seq = perturb(cur.seq, rng, fixed);
            cand.ph.assign(static_cast<size_t>(k), 0);
            for (int t = 0; t < k; ++t) {
                // Items carry their placeholders through the move.
                const auto at = std::find(cur.seq.begin(), cur.seq.end(),
                                          cand.seq[static_cast<size_t>(t)]);
                cand.ph[static_cast<size_t>(t)] =
                    cur.ph[static_cast<size_t>(at - cur.seq.begin())];
            }
            window_shake(inst, w, cand);
            const double c_new = state_cost(inst, w, cand);
            const double delta = c_new - c_cur;
            if (delta < 0.0 || rand_unit(rng) < std::exp(-delta / temp)) {
                cur = std::move(cand);
                c_cur = c_new;
                if (c_new < c_best) {
                    best = cur;
                    c_best = c_new;
                }
            }
            temp *= params.alpha;
        }
    }
    return {best.seq, best.ph};
}

Solution anneal_pass(const Instance& inst, const Solution& sol,
                     const SaParams& params) {
    if (params.window < 2) {
        throw input_error("anneal: window must cover at least two positions");
    }
    if (params.step < 1 || params.step >= params.window) {
        throw input_error("anneal: step must lie in [1, window)");
    }
    if (!(params.alpha > 0.0 && params.alpha < 1.0)) {
        throw input_error("anneal: alpha must lie in (0, 1)");
    }
    if (params.samples < 0) {
        throw input_error("anneal: samples must be non-negative");
    }
    const int n = inst.n();
    Solution cur = sol;
    cur.cost = tour_cost(inst, cur.sequence, cur.assignment);
    if (params.samples == 0) return cur;

    SaParams resolved = params;
    if (resolved.t0 <= 0.0) {
        // Mean leg length of the incoming tour.
        resolved.t0 = cur.cost / (2.0 * inst.size());
    }
    if (resolved.t0 <= 0.0) return cur;
    if (resolved.t_min <= 0.0) resolved.t_min = resolved.t0 / 1000.0;
    if (resolved.t0 <= resolved.t_min) return cur;

    std::vector<int> starts;
    for (int s = 0;; s += params.step) {
        starts.push_back(s);
        if (s + params.window - 1 >= n) break;
    }

    for (size_t widx = 0; widx < starts.size(); ++widx) {
        const int first = starts[widx];
        const int last = std::min(first + params.window - 1, n);
        std::mt19937_64 rng(mix64(resolved.rng_seed ^ mix64(static_cast<std::uint64_t>(widx) + 1)));
        const WindowProblem w = extract_window(inst, cur, first, last);
        const auto [nseq, nph] = anneal_window(inst, w, resolved, rng);
        for (int t = 0; t <= last - first; ++t) {
            const int item = nseq[static_cast<size_t>(t)];
            cur.sequence.order[static_cast<size_t>(first + t)] = item;
            cur.assignment.map[static_cast<size_t>(item)] = nph[static_cast<size_t>(t)];
        }
        cur.cost = tour_cost(inst, cur.sequence, cur.assignment);
    }
    return cur;
}

}  // namespace porter
