#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "moplex/errors.hpp"
#include "detail.hpp"

namespace moplex {

using namespace algo_detail;

IdealPointResult compute_ideal_point(const Problem& p, Solver& solver) {
    const int o = p.num_objectives();
    IdealPointResult out;
    out.values.assign(o, 0.0);
    for (int k = 0; k < o; ++k) {
        ScalarResult res = solve_weighted(p, solver, unit_weights(o, k), infinities(o));
        if (res.status != SolveStatus::Optimal) {
            out.status = res.status;
            out.values.clear();
            return out;
        }
        out.values[k] = res.value;
    }
    out.status = SolveStatus::Optimal;
    return out;
}

namespace {

std::vector<double> resolved_rtol(const AlgorithmConfig& cfg, int o) {
    if (!cfg.relative_tolerances) return std::vector<double>(o, 0.0);
    if (static_cast<int>(cfg.relative_tolerances->size()) != o) {
        throw BadConfig("relative_tolerances length must equal the objective count");
    }
    return *cfg.relative_tolerances;
}

} // namespace

AlgorithmResult lexicographic(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    const int o = p.num_objectives();
    const std::vector<double> rtol = resolved_rtol(cfg, o);

    std::vector<int> order(o);
    std::iota(order.begin(), order.end(), 0);
    std::vector<SolutionPoint> points;
    Frontier partial_frontier;
    do {
        std::vector<double> upper = infinities(o);
        SolutionPoint point;
        for (int stage = 0; stage < o; ++stage) {
            const int k = order[stage];
            ScalarResult res = solve_weighted(p, solver, unit_weights(o, k), upper);
            if (res.status == SolveStatus::TimeLimit) {
                return partial(SolveStatus::TimeLimit, partial_frontier);
            }
            if (res.status != SolveStatus::Optimal) return {res.status, {}};
            upper[k] = res.value + rtol[k] * std::abs(res.value);
            if (stage == o - 1) point = make_point(p, res.x);
        }
        points.push_back(point);
        partial_frontier.merge(point);
        if (!cfg.all_permutations) break;
    } while (std::next_permutation(order.begin(), order.end()));
    return finalize(SolveStatus::Optimal, points);
}

AlgorithmResult hierarchical(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    const int o = p.num_objectives();
    if (!cfg.weights) throw MissingConfig("hierarchical requires config weights");
    if (!cfg.priorities) throw MissingConfig("hierarchical requires config priorities");
    const std::vector<double>& weights = *cfg.weights;
    const std::vector<int>& priorities = *cfg.priorities;
    if (static_cast<int>(weights.size()) != o || static_cast<int>(priorities.size()) != o) {
        throw BadConfig("hierarchical weights/priorities length must equal the objective count");
    }
    for (double w : weights) {
        if (!(w > 0.0)) throw BadConfig("hierarchical weights must be strictly positive");
    }
    const std::vector<double> rtol = resolved_rtol(cfg, o);

    // Objective groups by descending priority.
    std::map<int, std::vector<int>, std::greater<int>> groups;
    for (int k = 0; k < o; ++k) groups[priorities[k]].push_back(k);

    std::vector<LinearRow> level_rows;
    for (const auto& [prio, members] : groups) {
        (void)prio;
        std::vector<double> w(o, 0.0);
        double group_rtol = 0.0;
        for (int k : members) {
            w[k] = weights[k];
            group_rtol = std::max(group_rtol, rtol[k]);
        }
        ScalarResult res = solve_weighted(p, solver, w, infinities(o), level_rows);
        if (res.status == SolveStatus::TimeLimit) return {SolveStatus::TimeLimit, {}};
        if (res.status != SolveStatus::Optimal) return {res.status, {}};
        const double bound = res.value + group_rtol * std::abs(res.value);
        level_rows.push_back(weighted_objective_row(p, w, bound));
    }
    // Tie-break so the single reported point is efficient, not just optimal
    // for the hierarchy.
    ScalarResult res = solve_weighted(p, solver, ones(o), infinities(o), level_rows);
    if (res.status == SolveStatus::TimeLimit) return {SolveStatus::TimeLimit, {}};
    if (res.status != SolveStatus::Optimal) return {res.status, {}};
    return {SolveStatus::Optimal, {make_point(p, res.x)}};
}

AlgorithmResult random_weighting(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    const int o = p.num_objectives();
    const long long iterations = cfg.solution_limit.value_or(10LL * o);
    if (iterations <= 0) return {SolveStatus::OtherError, {}};

    Frontier frontier;
    for (long long it = 0; it < iterations; ++it) {
        const std::vector<double> w = sample_simplex(cfg.seed, static_cast<std::uint64_t>(it), o);
        ScalarResult res = solve_weighted(p, solver, w, infinities(o));
        if (res.status == SolveStatus::TimeLimit) return partial(SolveStatus::TimeLimit, frontier);
        if (res.status != SolveStatus::Optimal) return {res.status, {}};
        frontier.merge(make_point(p, res.x));
    }
    return partial(SolveStatus::Optimal, frontier);
}

} // namespace moplex
