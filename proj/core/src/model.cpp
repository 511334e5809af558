#include "porter/model.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "porter/errors.hpp"

namespace porter {

Instance::Instance(std::vector<Point> items, std::vector<Point> placeholders,
                   std::string name)
    : items_(std::move(items)),
      placeholders_(std::move(placeholders)),
      name_(std::move(name)) {
    if (items_.empty() || placeholders_.empty()) {
        throw input_error("instance needs at least the depot pair");
    }
    if (items_.size() != placeholders_.size()) {
        throw input_error("instance item and placeholder counts differ");
    }
    for (const Point& p : items_) {
        if (!is_finite(p)) throw input_error("instance has a non-finite item point");
    }
    for (const Point& p : placeholders_) {
        if (!is_finite(p)) throw input_error("instance has a non-finite placeholder point");
    }
}

Assignment Assignment::identity(int count) {
    Assignment a;
    a.map.resize(static_cast<size_t>(count));
    std::iota(a.map.begin(), a.map.end(), 0);
    return a;
}

PickupSequence PickupSequence::identity(int count) {
    PickupSequence s;
    s.order.resize(static_cast<size_t>(count));
    std::iota(s.order.begin(), s.order.end(), 0);
    return s;
}

double tour_cost(const Instance& inst, const PickupSequence& seq,
                 const Assignment& asg) {
    const int n1 = inst.size();
    if (seq.size() != n1 || asg.size() != n1) {
        throw input_error("tour_cost: solution dimensions do not match the instance");
    }
    double total = 0.0;
    for (int k = 0; k < n1; ++k) {
        const int i = seq(k);
        const int next = seq((k + 1) % n1);
        const Point& s = inst.placeholder(asg(i));
        total += dist(inst.item(i), s) + dist(s, inst.item(next));
    }
    return total;
}

namespace {

bool is_permutation_of_range(const std::vector<int>& v) {
    std::vector<char> seen(v.size(), 0);
    for (int x : v) {
        if (x < 0 || x >= static_cast<int>(v.size())) return false;
        if (seen[static_cast<size_t>(x)]) return false;
        seen[static_cast<size_t>(x)] = 1;
    }
    return true;
}

}  // namespace

std::vector<std::string> validate_solution(const Instance& inst,
                                           const Solution& sol) {
    std::vector<std::string> report;
    const int n1 = inst.size();

    if (sol.sequence.size() != n1) {
        std::ostringstream os;
        os << "pickup order has " << sol.sequence.size() << " entries, expected " << n1;
        report.push_back(os.str());
    }
    if (sol.assignment.size() != n1) {
        std::ostringstream os;
        os << "assignment has " << sol.assignment.size() << " entries, expected " << n1;
        report.push_back(os.str());
    }
    if (!report.empty()) return report;

    if (!is_permutation_of_range(sol.sequence.order)) {
        report.emplace_back("pickup order is not a permutation of 0..n");
    } else if (sol.sequence(0) != 0) {
        report.emplace_back("pickup order does not start at item 0");
    }

    if (!is_permutation_of_range(sol.assignment.map)) {
        report.emplace_back("assignment is not a bijection onto 0..n");
    } else if (sol.assignment(0) != 0) {
        report.emplace_back("assignment does not send item 0 to placeholder 0");
    }

    if (report.empty()) {
        const double recomputed = tour_cost(inst, sol.sequence, sol.assignment);
        const double tol = 1e-9 * std::max(1.0, std::abs(recomputed));
        if (std::abs(sol.cost - recomputed) > tol) {
            std::ostringstream os;
            os.precision(17);
            os << "cached cost " << sol.cost << " differs from recomputed " << recomputed;
            report.push_back(os.str());
        }
    }
    return report;
}

}  // namespace porter
