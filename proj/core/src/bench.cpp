#include "porter/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "porter/errors.hpp"

namespace porter {

namespace {

std::string fixed(double v, int prec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
    return buf;
}

std::string opt_fixed(const std::optional<double>& v, int prec) {
    return v ? fixed(*v, prec) : std::string();
}

std::optional<double> gap_pct(double cost, const std::optional<double>& ref) {
    if (!ref || *ref <= 0.0) return std::nullopt;
    return (cost - *ref) / *ref * 100.0;
}

}  // namespace

BenchTable run_bench(const std::vector<Instance>& instances, int repeats,
                     const ShakeParams& shake_params, const SaParams& sa_params,
                     const std::map<std::string, double>* references,
                     int threads) {
    if (repeats < 1) throw input_error("run_bench: repeats must be positive");

    const int total = static_cast<int>(instances.size()) * repeats;
    std::vector<std::vector<SolveReport>> results(instances.size());
    for (auto& row : results) row.resize(static_cast<size_t>(repeats));

    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, std::max(total, 1)));

    // Run index r uses seed base + r; every job is a pure function of
    // its inputs, so scheduling order cannot change the results.
    std::atomic<int> next{0};
    auto work = [&]() {
        for (;;) {
            const int job = next.fetch_add(1);
            if (job >= total) break;
            const int ii = job / repeats;
            const int rr = job % repeats;
            SaParams sa = sa_params;
            sa.rng_seed = sa_params.rng_seed + static_cast<std::uint64_t>(rr);
            results[static_cast<size_t>(ii)][static_cast<size_t>(rr)] =
                solve(instances[static_cast<size_t>(ii)], shake_params, sa);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    BenchTable table;
    table.repeats = repeats;
    for (size_t ii = 0; ii < instances.size(); ++ii) {
        const auto& runs = results[ii];
        BenchRow row;
        row.exp_no = static_cast<int>(ii) + 1;
        row.instance_name = instances[ii].name();
        row.n = instances[ii].n();
        if (references) {
            const auto it = references->find(row.instance_name);
            if (it != references->end()) row.reference_cost = it->second;
        }

        double sum = 0.0;
        double sum_sq = 0.0;
        double min_cost = runs[0].final_cost;
        double time_sum = 0.0;
        for (const SolveReport& r : runs) {
            sum += r.final_cost;
            sum_sq += r.final_cost * r.final_cost;
            min_cost = std::min(min_cost, r.final_cost);
            time_sum += r.stage_times.merge_s + r.stage_times.sa_s;
        }
        const double mean = sum / repeats;
        const double var = std::max(0.0, sum_sq / repeats - mean * mean);
        row.avg_cost = mean;
        row.std_cost = std::sqrt(var);
        row.min_cost = min_cost;
        row.merge_cost = runs[0].merge_cost;
        row.avg_time_s = time_sum / repeats;
        row.avg_gap_pct = gap_pct(row.avg_cost, row.reference_cost);
        row.min_gap_pct = gap_pct(row.min_cost, row.reference_cost);
        row.merge_gap_pct = gap_pct(row.merge_cost, row.reference_cost);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string to_csv(const BenchTable& table, bool include_times) {
    std::ostringstream os;
    os << "exp_no,instance,n,reference,avg,std,min,merge,avg_gap_pct,min_gap_pct,merge_gap_pct";
    if (include_times) os << ",avg_time_s";
    os << '\n';
    for (const BenchRow& r : table.rows) {
        os << r.exp_no << ',' << r.instance_name << ',' << r.n << ','
           << opt_fixed(r.reference_cost, 3) << ',' << fixed(r.avg_cost, 3) << ','
           << fixed(r.std_cost, 3) << ',' << fixed(r.min_cost, 3) << ','
           << fixed(r.merge_cost, 3) << ',' << opt_fixed(r.avg_gap_pct, 2) << ','
           << opt_fixed(r.min_gap_pct, 2) << ',' << opt_fixed(r.merge_gap_pct, 2);
        if (include_times) os << ',' << fixed(r.avg_time_s, 3);
        os << '\n';
    }
    return os.str();
}

std::string to_text(const BenchTable& table) {
    auto cell = [](const std::string& s, size_t width) {
        std::string out = s;
        while (out.size() < width) out.insert(out.begin(), ' ');
        return out + "  ";
    };
    auto dash = [](const std::optional<double>& v, int prec) {
        return v ? fixed(*v, prec) : std::string("-");
    };

    std::ostringstream os;
    os << cell("Exp No", 6) << cell("Instance", 20) << cell("n", 5)
       << cell("Reference", 10) << cell("Average +- Std", 18) << cell("(%)", 7)
       << cell("Min", 10) << cell("(%)", 7) << cell("L_M", 10) << cell("(%)", 7)
       << cell("dt_M+dt_SA (s)", 14) << '\n';

    double gap_sum[3] = {0.0, 0.0, 0.0};
    int gap_count = 0;
    double time_sum = 0.0;
    for (const BenchRow& r : table.rows) {
        os << cell(std::to_string(r.exp_no), 6) << cell(r.instance_name, 20)
           << cell(std::to_string(r.n), 5) << cell(dash(r.reference_cost, 3), 10)
           << cell(fixed(r.avg_cost, 3) + " +- " + fixed(r.std_cost, 3), 18)
           << cell(dash(r.avg_gap_pct, 2), 7) << cell(fixed(r.min_cost, 3), 10)
           << cell(dash(r.min_gap_pct, 2), 7) << cell(fixed(r.merge_cost, 3), 10)
           << cell(dash(r.merge_gap_pct, 2), 7) << cell(fixed(r.avg_time_s, 3), 14)
           << '\n';
        if (r.avg_gap_pct) {
            gap_sum[0] += *r.avg_gap_pct;
            gap_sum[1] += *r.min_gap_pct;
            gap_sum[2] += *r.merge_gap_pct;
            ++gap_count;
        }
        time_sum += r.avg_time_s;
    }
    if (!table.rows.empty()) {
        const double rows = static_cast<double>(table.rows.size());
        auto avg_gap = [&](int k) {
            return gap_count ? fixed(gap_sum[k] / gap_count, 2) : std::string("-");
        };
        os << cell("Avg.", 6) << cell("", 20) << cell("", 5) << cell("", 10)
           << cell("", 18) << cell(avg_gap(0), 7) << cell("", 10)
           << cell(avg_gap(1), 7) << cell("", 10) << cell(avg_gap(2), 7)
           << cell(fixed(time_sum / rows, 3), 14) << '\n';
    }
    return os.str();
}

}  // namespace porter
