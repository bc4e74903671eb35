#ifndef MOPLEX_ALGORITHMS_HPP
#define MOPLEX_ALGORITHMS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "moplex/dominance.hpp"
#include "moplex/model.hpp"
#include "moplex/solver.hpp"

namespace moplex {

struct AlgorithmConfig {
    /// Slack used to emulate strict objective inequalities (f < u becomes
    /// f <= u - epsilon). Exact for integer-valued objective data.
    double epsilon = 1.0;
    std::optional<double> time_limit;       // seconds, enforced across subproblem solves
    std::optional<long long> solution_limit;
    std::uint64_t seed = 0;                 // random-weighting generator seed
    std::optional<std::vector<double>> weights;           // hierarchical
    std::optional<std::vector<int>> priorities;           // hierarchical
    std::optional<std::vector<double>> relative_tolerances;
    bool all_permutations = true;           // lexicographic
    double sandwich_gap = 1e-6;
};

/// Axis-aligned region of objective space still to be searched by the
/// decomposition algorithms. defining_points records, per objective index,
/// the found point that fixed that upper bound.
struct SearchRegion {
    std::vector<double> lower;
    std::vector<double> upper;
    std::map<int, SolutionPoint> defining_points;
};

/// Common outcome of the scalarization algorithms: a termination status and
/// the points found (feasible, mutually nondominated, MIN convention).
struct AlgorithmResult {
    SolveStatus status = SolveStatus::OtherError;
    std::vector<SolutionPoint> points;
};

struct IdealPointResult {
    SolveStatus status = SolveStatus::OtherError;
    std::vector<double> values;
};

/// Per-objective minima (component k solves the unit-weight subproblem e_k).
IdealPointResult compute_ideal_point(const Problem& p, Solver& solver);

// The ten algorithms. All require a validated MIN-sense problem; bi-objective
// methods (dichotomy, epsilon_constraint, chalmet) throw UnsupportedDimension
// for o != 2.
AlgorithmResult lexicographic(const Problem& p, const AlgorithmConfig& cfg, Solver& solver);
AlgorithmResult hierarchical(const Problem& p, const AlgorithmConfig& cfg, Solver& solver);
AlgorithmResult dichotomy(const Problem& p, const AlgorithmConfig& cfg, Solver& solver);
AlgorithmResult epsilon_constraint(const Problem& p, const AlgorithmConfig& cfg, Solver& solver);
AlgorithmResult chalmet(const Problem& p, const AlgorithmConfig& cfg, Solver& solver);
AlgorithmResult kirlik_sayin(const Problem& p, const AlgorithmConfig& cfg, Solver& solver);
AlgorithmResult tamby_vanderpooten(const Problem& p, const AlgorithmConfig& cfg, Solver& solver);
AlgorithmResult dominguez_rios(const Problem& p, const AlgorithmConfig& cfg, Solver& solver);
AlgorithmResult random_weighting(const Problem& p, const AlgorithmConfig& cfg, Solver& solver);
AlgorithmResult sandwiching(const Problem& p, const AlgorithmConfig& cfg, Solver& solver);

} // namespace moplex

#endif
