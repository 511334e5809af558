#include "porter/lap.hpp"

#include <cmath>
#include <limits>

#include "porter/errors.hpp"

namespace porter {

CostMatrix::CostMatrix(int dim) : dim_(dim) {
    if (dim <= 0) throw input_error("cost matrix dimension must be positive");
    cost_.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0.0);
    mask_.assign(cost_.size(), 0);
}

CostMatrix::CostMatrix(const std::vector<std::vector<double>>& rows)
    : CostMatrix(static_cast<int>(rows.size())) {
    for (int r = 0; r < dim_; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != dim_) {
            throw input_error("cost matrix rows must form a square");
        }
        for (int c = 0; c < dim_; ++c) {
            at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        }
    }
}

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : CostMatrix(static_cast<int>(rows.size())) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_) {
            throw input_error("cost matrix rows must form a square");
        }
        int c = 0;
        for (const double v : row) at(r, c++) = v;
        ++r;
    }
}

LapResult solve_lap(const CostMatrix& m) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const int n = m.dim();

    double max_entry = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (m.forbidden(r, c)) continue;
            const double v = m.at(r, c);
            if (!std::isfinite(v) || v < 0.0) {
                throw input_error("cost matrix entries must be finite and non-negative");
            }
            if (v > max_entry) max_entry = v;
        }
    }
    const double big = (n + 1) * (max_entry + 1.0);

    // Effective costs with forbidden cells priced out.
    std::vector<double> a(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            a[static_cast<size_t>(r) * n + c] = m.forbidden(r, c) ? big : m.at(r, c);
        }
    }

    // Shortest augmenting path over rows, 1-based with column 0 as the
    // virtual root.  u, v are the dual potentials; p[j] is the row
    // matched to column j.
    std::vector<double> u(static_cast<size_t>(n) + 1, 0.0);
    std::vector<double> v(static_cast<size_t>(n) + 1, 0.0);
    std::vector<int> p(static_cast<size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<size_t>(n) + 1, 0);
    std::vector<double> minv(static_cast<size_t>(n) + 1);
    std::vector<char> used(static_cast<size_t>(n) + 1);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[static_cast<size_t>(j0)] = 1;
            const int i0 = p[static_cast<size_t>(j0)];
            double delta = kInf;
            int j1 = 0;
            const double* row = &a[static_cast<size_t>(i0 - 1) * n];
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<size_t>(j)]) continue;
                const double cur = row[j - 1] - u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
                if (cur < minv[static_cast<size_t>(j)]) {
                    minv[static_cast<size_t>(j)] = cur;
                    way[static_cast<size_t>(j)] = j0;
                }
                if (minv[static_cast<size_t>(j)] < delta) {
                    delta = minv[static_cast<size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<size_t>(j)]) {
                    u[static_cast<size_t>(p[static_cast<size_t>(j)])] += delta;
                    v[static_cast<size_t>(j)] -= delta;
                } else {
                    minv[static_cast<size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<size_t>(j0)];
            p[static_cast<size_t>(j0)] = p[static_cast<size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    LapResult result;
    result.col_of_row.assign(static_cast<size_t>(n), -1);
    for (int j = 1; j <= n; ++j) {
        result.col_of_row[static_cast<size_t>(p[static_cast<size_t>(j)] - 1)] = j - 1;
    }
    for (int r = 0; r < n; ++r) {
        const int c = result.col_of_row[static_cast<size_t>(r)];
        if (m.forbidden(r, c)) {
            throw infeasible_error("no perfect matching avoids the forbidden cells");
        }
        result.total += m.at(r, c);
    }
    return result;
}

}  // namespace porter
