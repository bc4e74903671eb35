#ifndef MOPLEX_SOLVER_HPP
#define MOPLEX_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "moplex/subproblem.hpp"

namespace moplex {

enum class SolveStatus { Optimal, Infeasible, Unbounded, TimeLimit, OtherError };

std::string to_string(SolveStatus status);

/// Outcome of one single-objective solve. x and value are meaningful only
/// when status is Optimal; value is the full weighted objective including the
/// weighted offset term.
struct ScalarResult {
    SolveStatus status = SolveStatus::OtherError;
    std::vector<double> x;
    double value = 0.0;
};

/// Solver contract: solve one ScalarSubproblem to global optimality.
/// Implementations are stateless between calls; a single instance is owned by
/// one solve call at a time.
class Solver {
public:
    virtual ~Solver() = default;
    virtual ScalarResult solve(const ScalarSubproblem& sub,
                               std::optional<double> time_limit = std::nullopt) = 0;
};

/// Continuous relaxation (integrality ignored) via a dense-tableau two-phase
/// simplex with Bland's rule. Returns an extreme-point optimum.
ScalarResult solve_lp(const ScalarSubproblem& sub, std::optional<double> time_limit = std::nullopt);

/// Exact MILP solve: best-first branch-and-bound over solve_lp relaxations,
/// branching on the most fractional variable (ties to the lowest index).
ScalarResult solve_milp(const ScalarSubproblem& sub,
                        std::optional<double> time_limit = std::nullopt);

/// Bundled solver: dispatches to solve_milp when the base problem has integer
/// variables, solve_lp otherwise.
class BundledSolver : public Solver {
public:
    ScalarResult solve(const ScalarSubproblem& sub,
                       std::optional<double> time_limit = std::nullopt) override;
};

namespace detail {
/// solve_lp with per-variable bound overrides (used by branch-and-bound).
ScalarResult solve_lp_bounds(const ScalarSubproblem& sub, const std::vector<double>& lower,
                             const std::vector<double>& upper,
                             std::optional<double> time_limit);
} // namespace detail

} // namespace moplex

#endif
