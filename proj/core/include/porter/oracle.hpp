#pragma once

#include "porter/model.hpp"

namespace porter {

// Largest n brute_force accepts.
inline constexpr int kBruteForceMaxItems = 7;

// Exact optimum by enumerating every feasible (sequence, assignment)
// pair in lexicographic order; strict improvement keeps the
// lexicographically smallest minimizer.  n > kBruteForceMaxItems
// throws guard_error.
Solution brute_force(const Instance& inst);

}  // namespace porter
