#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace porter {

// Dense square cost matrix with per-cell forbidden flags.
class CostMatrix {
public:
    explicit CostMatrix(int dim);
    explicit CostMatrix(const std::vector<std::vector<double>>& rows);
    CostMatrix(std::initializer_list<std::initializer_list<double>> rows);

    int dim() const { return dim_; }

    double& at(int r, int c) { return cost_[index(r, c)]; }
    double at(int r, int c) const { return cost_[index(r, c)]; }

    void forbid(int r, int c) { mask_[index(r, c)] = 1; }
    bool forbidden(int r, int c) const { return mask_[index(r, c)] != 0; }

private:
    size_t index(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(dim_) +
               static_cast<size_t>(c);
    }

    int dim_ = 0;
    std::vector<double> cost_;
    std::vector<std::uint8_t> mask_;
};

struct LapResult {
    std::vector<int> col_of_row;  // col_of_row[r] is the column matched to row r
    double total = 0.0;           // sum of the matched true entries
};

// Minimum-cost perfect matching on a square matrix (shortest augmenting
// path, O(dim^3), deterministic).  Forbidden cells are priced at a
// big-M of (dim + 1) * (max unmasked entry + 1); if the optimum still
// uses one, no feasible matching avoids the forbidden set and
// infeasible_error is thrown.  Unmasked entries must be finite and
// non-negative (input_error otherwise).
LapResult solve_lap(const CostMatrix& m);

}  // namespace porter
