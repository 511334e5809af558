#pragma once

#include <string>
#include <vector>

#include "porter/geometry.hpp"

namespace porter {

// A pickup-and-placement instance.
//
// Index 0 is the depot pair: items[0] is the point where the tour ends
// (and where item 0 notionally sits) and placeholders[0] is the point
// where the tour starts.  Indices 1..n are the real items and the real
// placeholder slots.  Both arrays always have length n + 1.
class Instance {
public:
    Instance(std::vector<Point> items, std::vector<Point> placeholders,
             std::string name = "");

    // Number of real items (excludes the depot pair).
    int n() const { return static_cast<int>(items_.size()) - 1; }
    // Total index count, n + 1.
    int size() const { return static_cast<int>(items_.size()); }

    const Point& item(int i) const { return items_[static_cast<size_t>(i)]; }
    const Point& placeholder(int j) const { return placeholders_[static_cast<size_t>(j)]; }

    const std::vector<Point>& items() const { return items_; }
    const std::vector<Point>& placeholders() const { return placeholders_; }

    const Point& depot_end() const { return items_[0]; }
    const Point& depot_start() const { return placeholders_[0]; }

    const std::string& name() const { return name_; }

private:
    std::vector<Point> items_;
    std::vector<Point> placeholders_;
    std::string name_;
};

// Item -> placeholder bijection; map[i] is the placeholder item i goes to.
// Feasible assignments fix map[0] == 0.
struct Assignment {
    std::vector<int> map;

    int size() const { return static_cast<int>(map.size()); }
    int operator()(int i) const { return map[static_cast<size_t>(i)]; }

    static Assignment identity(int count);
};

// Visiting order of the items; order[k] is the k-th item picked up.
// Feasible sequences are permutations of 0..n with order[0] == 0.
struct PickupSequence {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    int operator()(int k) const { return order[static_cast<size_t>(k)]; }

    static PickupSequence identity(int count);
};

struct Solution {
    PickupSequence sequence;
    Assignment assignment;
    double cost = 0.0;
};

// Closed-tour cost of (sequence, assignment): from each item to its
// placeholder, then on to the next item in the sequence, wrapping back
// to the front.  Throws input_error on dimension mismatch; entries are
// trusted to be in range.
double tour_cost(const Instance& inst, const PickupSequence& seq,
                 const Assignment& asg);

// Feasibility report; empty means the solution is feasible and its
// cached cost matches a recomputation within 1e-9 relative tolerance.
std::vector<std::string> validate_solution(const Instance& inst,
                                           const Solution& sol);

}  // namespace porter
