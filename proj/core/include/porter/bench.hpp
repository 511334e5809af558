#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "porter/pipeline.hpp"

namespace porter {

struct BenchRow {
    int exp_no = 0;
    std::string instance_name;
    int n = 0;
    std::optional<double> reference_cost;
    double avg_cost = 0.0;
    double std_cost = 0.0;  // population standard deviation
    double min_cost = 0.0;
    double merge_cost = 0.0;
    double avg_time_s = 0.0;  // mean merge + annealing time per run
    // Percent gaps against the reference, when one exists.
    std::optional<double> avg_gap_pct;
    std::optional<double> min_gap_pct;
    std::optional<double> merge_gap_pct;
};

struct BenchTable {
    std::vector<BenchRow> rows;
    int repeats = 0;
};

// Solve every instance `repeats` times with seeds base, base+1, ...,
// fanning the runs out across `threads` workers.  Each run is
// independent and keyed by its seed, so the table is deterministic no
// matter how the work is scheduled.  threads <= 0 picks the hardware
// count.
BenchTable run_bench(const std::vector<Instance>& instances, int repeats,
                     const ShakeParams& shake_params, const SaParams& sa_params,
                     const std::map<std::string, double>* references = nullptr,
                     int threads = 0);

// Stable CSV rendering: costs to three decimals, gaps to two.  Timing
// columns are off by default so identical inputs produce identical
// bytes.
std::string to_csv(const BenchTable& table, bool include_times = false);

// Fixed-width text table with a closing averages row.
std::string to_text(const BenchTable& table);

}  // namespace porter
