#include "porter/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "porter/errors.hpp"

namespace porter {

Solution brute_force(const Instance& inst) {
    const int n = inst.n();
    if (n > kBruteForceMaxItems) {
        std::ostringstream os;
        os << "brute_force handles at most " << kBruteForceMaxItems
           << " items, got " << n;
        throw guard_error(os.str());
    }
    const int n1 = inst.size();

    // Leg lookups: dps[i][j] = item i to placeholder j, dsp[j][i] back.
    std::vector<double> dps(static_cast<size_t>(n1) * n1);
    std::vector<double> dsp(static_cast<size_t>(n1) * n1);
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) {
            dps[static_cast<size_t>(i) * n1 + j] = dist(inst.item(i), inst.placeholder(j));
            dsp[static_cast<size_t>(j) * n1 + i] = dist(inst.placeholder(j), inst.item(i));
        }
    }

    std::vector<int> seq(static_cast<size_t>(n1));
    std::iota(seq.begin(), seq.end(), 0);
    std::vector<int> asg(static_cast<size_t>(n1));

    Solution best;
    best.cost = std::numeric_limits<double>::infinity();
    do {
        std::iota(asg.begin(), asg.end(), 0);
        do {
            double cost = 0.0;
            for (int k = 0; k < n1; ++k) {
                const int i = seq[static_cast<size_t>(k)];
                const int j = asg[static_cast<size_t>(i)];
                cost += dps[static_cast<size_t>(i) * n1 + j];
                cost += dsp[static_cast<size_t>(j) * n1 + seq[static_cast<size_t>((k + 1) % n1)]];
            }
            if (cost < best.cost) {
                best.sequence.order = seq;
                best.assignment.map = asg;
                best.cost = cost;
            }
        } while (std::next_permutation(asg.begin() + 1, asg.end()));
    } while (std::next_permutation(seq.begin() + 1, seq.end()));

    return best;
}

}  // namespace porter
