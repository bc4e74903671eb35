#ifndef MOPLEX_SUBPROBLEM_HPP
#define MOPLEX_SUBPROBLEM_HPP

#include <vector>

#include "moplex/model.hpp"

namespace moplex {

/// One scalarized single-objective subproblem:
///
///   min  weights^T (matrix x + offsets)
///   s.t. base rows,  f_k(x) <= objective_upper[k] for finite entries,
///        extra_rows, variable bounds and integrality.
///
/// The base problem must be MIN sense. Upper bounds are in objective-value
/// space; strictness emulation (u - epsilon) is the caller's job.
struct ScalarSubproblem {
    Problem base;
    std::vector<double> weights;
    std::vector<double> objective_upper;
    std::vector<LinearRow> extra_rows;

    std::vector<double> scalar_cost; // weights^T * matrix
    double scalar_offset = 0.0;      // weights^T * offsets

    /// base rows + rows induced by finite objective_upper entries + extra_rows.
    std::vector<LinearRow> all_rows() const;
};

ScalarSubproblem build_subproblem(const Problem& p, std::vector<double> weights,
                                  std::vector<double> objective_upper,
                                  std::vector<LinearRow> extra_rows = {});

/// Constraint row expressing objective k <= bound (offset folded into rhs).
LinearRow objective_upper_row(const Problem& p, int k, double bound);

/// Constraint row expressing weights^T f(x) <= bound.
LinearRow weighted_objective_row(const Problem& p, const std::vector<double>& weights, double bound);

} // namespace moplex

#endif
