#include "moplex/subproblem.hpp"

#include <cmath>
#include <utility>

#include "moplex/errors.hpp"

namespace moplex {

LinearRow objective_upper_row(const Problem& p, int k, double bound) {
    if (k < 0 || k >= p.num_objectives()) {
        throw BadIndex("objective_upper_row: objective index out of range");
    }
    LinearRow row;
    const auto& grad = p.objective().matrix[k];
    for (std::size_t j = 0; j < grad.size(); ++j) {
        if (grad[j] != 0.0) row.coefficients[static_cast<int>(j)] = grad[j];
    }
    row.sense = RowSense::LessEqual;
    row.rhs = bound - p.objective().offsets[k];
    return row;
}

LinearRow weighted_objective_row(const Problem& p, const std::vector<double>& weights,
                                 double bound) {
    if (static_cast<int>(weights.size()) != p.num_objectives()) {
        throw DimensionMismatch("weighted_objective_row: weight length mismatch");
    }
    LinearRow row;
    double offset = 0.0;
    for (int k = 0; k < p.num_objectives(); ++k) {
        if (weights[k] == 0.0) continue;
        offset += weights[k] * p.objective().offsets[k];
        const auto& grad = p.objective().matrix[k];
        for (std::size_t j = 0; j < grad.size(); ++j) {
            if (grad[j] != 0.0) row.coefficients[static_cast<int>(j)] += weights[k] * grad[j];
        }
    }
    for (auto it = row.coefficients.begin(); it != row.coefficients.end();) {
        it = (it->second == 0.0) ? row.coefficients.erase(it) : std::next(it);
    }
    row.sense = RowSense::LessEqual;
    row.rhs = bound - offset;
    return row;
}

ScalarSubproblem build_subproblem(const Problem& p, std::vector<double> weights,
                                  std::vector<double> objective_upper,
                                  std::vector<LinearRow> extra_rows) {
    if (p.sense() != ObjectiveSense::Min) {
        throw ValidationError("build_subproblem requires a MIN-sense problem");
    }
    const int o = p.num_objectives();
    const int n = p.num_variables();
    if (static_cast<int>(weights.size()) != o || static_cast<int>(objective_upper.size()) != o) {
        throw DimensionMismatch("build_subproblem: weights/upper length must equal objective count");
    }
    bool any_nonzero = false;
    for (double w : weights) {
        if (std::isnan(w)) throw BadConfig("build_subproblem: NaN weight");
        if (w != 0.0) any_nonzero = true;
    }
    if (!any_nonzero) throw AllZeroWeights("build_subproblem: all weights are zero");
    for (const auto& row : extra_rows) {
        for (const auto& [idx, c] : row.coefficients) {
            (void)c;
            if (idx < 0 || idx >= n) throw BadIndex("build_subproblem: extra row index out of range");
        }
    }

    ScalarSubproblem sub{p, std::move(weights), std::move(objective_upper), std::move(extra_rows),
                         std::vector<double>(n, 0.0), 0.0};
    const auto& obj = p.objective();
    for (int k = 0; k < o; ++k) {
        if (sub.weights[k] == 0.0) continue;
        sub.scalar_offset += sub.weights[k] * obj.offsets[k];
        for (int j = 0; j < n; ++j) sub.scalar_cost[j] += sub.weights[k] * obj.matrix[k][j];
    }
    return sub;
}

std::vector<LinearRow> ScalarSubproblem::all_rows() const {
    std::vector<LinearRow> rows = base.rows();
    for (int k = 0; k < base.num_objectives(); ++k) {
        if (objective_upper[k] < kInfinity) {
            rows.push_back(objective_upper_row(base, k, objective_upper[k]));
        }
    }
    rows.insert(rows.end(), extra_rows.begin(), extra_rows.end());
    return rows;
}

} // namespace moplex
