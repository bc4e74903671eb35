#ifndef MOPLEX_DRIVER_HPP
#define MOPLEX_DRIVER_HPP

#include <functional>
#include <string>
#include <vector>

#include "moplex/algorithms.hpp"
#include "moplex/model.hpp"
#include "moplex/solver.hpp"

namespace moplex {

using AlgorithmFn =
    std::function<AlgorithmResult(const Problem&, const AlgorithmConfig&, Solver&)>;

struct SolveStats {
    long long subproblem_count = 0;
    double wall_time = 0.0; // seconds
};

/// Meta-solver outcome: points carry y in the user's original sense, ordered
/// ascending lexicographically in MIN convention.
struct ResultSet {
    SolveStatus status = SolveStatus::OtherError;
    std::vector<SolutionPoint> points;
    SolveStats stats;
    std::vector<std::string> variable_names;
    int objective_count = 0;
};

/// Makes `identifier` dispatchable from optimize and the CLI. Registration is
/// write-once-then-read-only: register everything before the first solve.
void register_algorithm(const std::string& identifier, AlgorithmFn implementation);

/// Sorted identifiers of all registered algorithms (the ten built-ins plus
/// any extensions).
std::vector<std::string> registered_algorithms();

bool is_algorithm_registered(const std::string& identifier);

/// Full orchestration: validates, converts MAX to MIN, dispatches, enforces
/// the time limit across subproblem solves, filters defensively, converts the
/// result back to the user's sense.
ResultSet optimize(const Problem& p, const std::string& algorithm, const AlgorithmConfig& cfg,
                   Solver& solver);

} // namespace moplex

#endif
