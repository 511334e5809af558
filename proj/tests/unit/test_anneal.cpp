#include <doctest.h>

#include <algorithm>
#include <random>

#include "porter/anneal.hpp"
#include "porter/assign.hpp"
#include "porter/cycles.hpp"
#include "porter/errors.hpp"
#include "porter/io.hpp"
#include "porter/shake.hpp"
#include "test_support.hpp"

using namespace porter;
namespace ts = test_support;

namespace {

Solution identity_solution(const Instance& inst) {
    Solution sol;
    sol.sequence = PickupSequence::identity(inst.size());
    sol.assignment = Assignment::identity(inst.size());
    sol.cost = tour_cost(inst, sol.sequence, sol.assignment);
    return sol;
}

}  // namespace

TEST_CASE("window cost") {
    SUBCASE("full fix1 window equals the tour cost") {
        const Instance inst = ts::fix1();
        const Solution sol = identity_solution(inst);
        const WindowProblem w = extract_window(inst, sol, 0, 1);
        CHECK(w.pin_first);
        CHECK(w.entry_anchor == inst.item(0));
        CHECK(w.exit_anchor == inst.item(0));
        CHECK(window_cost(inst, w) == doctest::Approx(ts::kFix1Cost).epsilon(1e-12));
    }
    SUBCASE("single-slot window with coincident anchors") {
        const Instance inst({{0, 0}, {2, 0}}, {{0, 0}, {2, 3}});
        WindowProblem w;
        w.sub_sequence = {1};
        w.sub_assignment = {1};
        w.entry_anchor = inst.item(1);
        w.exit_anchor = inst.placeholder(1);
        CHECK(window_cost(inst, w) == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("empty window is rejected") {
        WindowProblem w;
        CHECK_THROWS_AS(window_cost(ts::fix1(), w), input_error);
    }
    SUBCASE("splice identity: outside legs are window-independent") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 6 + static_cast<int>(rng() % 10);
            const Instance inst = generate(n, 1200 + static_cast<std::uint64_t>(trial));
            Solution sol = ts::random_solution(inst, rng);
            const int first = 1 + static_cast<int>(rng() % 3);
            const int last = first + 2 + static_cast<int>(rng() % 3);
            const WindowProblem w = extract_window(inst, sol, first, last);
            const double outside = sol.cost - window_cost(inst, w);

            // Reverse the window slots in place; items keep their own
            // placeholders.
            Solution moved = sol;
            std::reverse(moved.sequence.order.begin() + first,
                         moved.sequence.order.begin() + last + 1);
            moved.cost = tour_cost(inst, moved.sequence, moved.assignment);
            const WindowProblem w2 = extract_window(inst, moved, first, last);
            CHECK(moved.cost - window_cost(inst, w2) ==
                  doctest::Approx(outside).epsilon(1e-9));
        }
    }
}

TEST_CASE("perturb") {
    std::mt19937_64 rng(32);
    SUBCASE("slices shorter than two movable entries are unchanged") {
        CHECK(perturb({7}, rng) == std::vector<int>{7});
        CHECK(perturb({7, 9}, rng, 1) == std::vector<int>{7, 9});
    }
    SUBCASE("two movable entries always swap") {
        for (int trial = 0; trial < 10; ++trial) {
            CHECK(perturb({4, 6}, rng) == std::vector<int>{6, 4});
        }
    }
    SUBCASE("multiset invariance and fixed prefix") {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> slice{0, 5, 3, 8, 1, 9, 2};
            std::vector<int> out = perturb(slice, rng, 1);
            CHECK(out[0] == 0);
            std::vector<int> a = slice;
            std::vector<int> b = out;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
            CHECK(out != slice);
        }
    }
}

TEST_CASE("anneal window") {
    const Instance inst = ts::fix2();
    SUBCASE("zero samples returns the input") {
        const Solution sol = identity_solution(inst);
        const WindowProblem w = extract_window(inst, sol, 0, 2);
        SaParams p;
        p.samples = 0;
        std::mt19937_64 rng(1);
        const auto [seq, asg] = anneal_window(inst, w, p, rng);
        CHECK(seq == w.sub_sequence);
        CHECK(asg == w.sub_assignment);
    }
    SUBCASE("t0 at or below t_min returns the input") {
        const Solution sol = identity_solution(inst);
        const WindowProblem w = extract_window(inst, sol, 0, 2);
        SaParams p;
        p.t0 = 1e-6;
        p.t_min = 1e-3;
        std::mt19937_64 rng(1);
        const auto [seq, asg] = anneal_window(inst, w, p, rng);
        CHECK(seq == w.sub_sequence);
        CHECK(asg == w.sub_assignment);
    }
    SUBCASE("fix2 as one window reaches the optimum from the worst start") {
        Solution worst;
        worst.sequence.order = {0, 2, 1};
        worst.assignment.map = {0, 2, 1};
        worst.cost = tour_cost(inst, worst.sequence, worst.assignment);
        CHECK(worst.cost == doctest::Approx(8.06450).epsilon(1e-5));
        const WindowProblem w = extract_window(inst, worst, 0, 2);
        SaParams p;
        p.window = 3;
        p.step = 1;
        p.t0 = 1.0;
        p.t_min = 1e-3;
        p.alpha = 0.9;
        p.samples = 20;
        std::mt19937_64 rng(7);
        const auto [seq, asg] = anneal_window(inst, w, p, rng);
        WindowProblem out = w;
        out.sub_sequence = seq;
        out.sub_assignment = asg;
        CHECK(window_cost(inst, out) == doctest::Approx(ts::kFix2Cost).epsilon(1e-6));
    }
    SUBCASE("window cost never rises") {
        std::mt19937_64 seeds(33);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 8 + static_cast<int>(seeds() % 8);
            const Instance rnd = generate(n, 1300 + static_cast<std::uint64_t>(trial));
            const Solution sol = ts::random_solution(rnd, seeds);
            const int first = static_cast<int>(seeds() % 3);
            const int last = first + 4;
            const WindowProblem w = extract_window(rnd, sol, first, last);
            SaParams p;
            p.rng_seed = trial;
            std::mt19937_64 rng(seeds());
            const auto [seq, asg] = anneal_window(rnd, w, p, rng);
            WindowProblem out = w;
            out.sub_sequence = seq;
            out.sub_assignment = asg;
            CHECK(window_cost(rnd, out) <= window_cost(rnd, w) + 1e-9);
        }
    }
}

TEST_CASE("anneal pass") {
    SUBCASE("parameter validation") {
        const Instance inst = ts::fix2();
        const Solution sol = identity_solution(inst);
        SaParams p;
        p.step = p.window;
        CHECK_THROWS_AS(anneal_pass(inst, sol, p), input_error);
        p = SaParams{};
        p.alpha = 1.0;
        CHECK_THROWS_AS(anneal_pass(inst, sol, p), input_error);
    }
    SUBCASE("oversized window acts as one global window") {
        const Instance inst = generate(5, 41);
        std::mt19937_64 rng(5);
        const Solution sol = ts::random_solution(inst, rng);
        SaParams p;
        p.window = 100;
        p.step = 6;
        p.rng_seed = 3;
        const Solution out = anneal_pass(inst, sol, p);
        CHECK(validate_solution(inst, out).empty());
        CHECK(out.cost <= sol.cost + 1e-9);
    }
    SUBCASE("identical seeds produce identical solutions") {
        const Instance inst = generate(30, 42);
        std::mt19937_64 rng(6);
        const Solution sol = ts::random_solution(inst, rng);
        SaParams p;
        p.rng_seed = 1234;
        const Solution a = anneal_pass(inst, sol, p);
        const Solution b = anneal_pass(inst, sol, p);
        CHECK(a.sequence.order == b.sequence.order);
        CHECK(a.assignment.map == b.assignment.map);
        CHECK(a.cost == b.cost);
    }
    SUBCASE("never worse over seeded trials on merge plus shake input") {
        const Instance inst = generate(50, 43);
        const TwoPhaseResult two = two_phase_assign(inst);
        Solution sol = merge_all(inst, detect_cycles(inst, two.forward, two.backward));
        sol = shake(inst, sol);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            SaParams p;
            p.rng_seed = seed;
            const Solution out = anneal_pass(inst, sol, p);
            CHECK(out.cost <= sol.cost + 1e-9);
            CHECK(validate_solution(inst, out).empty());
        }
    }
    SUBCASE("all-coincident geometry is returned untouched") {
        std::vector<Point> pts(6, Point{1.0, 1.0});
        const Instance inst(pts, pts);
        const Solution sol = identity_solution(inst);
        const Solution out = anneal_pass(inst, sol, SaParams{});
        CHECK(out.cost == 0.0);
    }
}
