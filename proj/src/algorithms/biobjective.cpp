#include <cmath>
#include <deque>

#include "moplex/errors.hpp"
#include "detail.hpp"

namespace moplex {

using namespace algo_detail;

namespace {

void require_biobjective(const Problem& p, const char* name) {
    if (p.num_objectives() != 2) {
        throw UnsupportedDimension(std::string(name) + " supports exactly 2 objectives, got " +
                                   std::to_string(p.num_objectives()));
    }
}

} // namespace

AlgorithmResult dichotomy(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    (void)cfg;
    require_biobjective(p, "dichotomy");
    const std::vector<double> inf = infinities(2);

    TwoStageResult left = two_stage_min(p, solver, 0, inf); // lexmin (f1, f2)
    if (left.status != SolveStatus::Optimal) return {left.status, {}};
    TwoStageResult right = two_stage_min(p, solver, 1, inf); // lexmin (f2, f1)
    if (right.status != SolveStatus::Optimal) return {right.status, {}};

    Frontier frontier;
    frontier.merge(left.point);
    frontier.merge(right.point);
    if (same_y(left.point.y, right.point.y)) {
        return partial(SolveStatus::Optimal, frontier);
    }

    // Each pending segment joins an upper-left point a and a lower-right
    // point b; the weighted solve with w normal to the segment either proves
    // the segment is a facet or reveals a supported point strictly below it.
    std::deque<std::pair<std::vector<double>, std::vector<double>>> segments;
    segments.push_back({left.point.y, right.point.y});
    while (!segments.empty()) {
        auto [a, b] = segments.front();
        segments.pop_front();
        const std::vector<double> w = {a[1] - b[1], b[0] - a[0]};
        if (w[0] <= 1e-12 || w[1] <= 1e-12) continue;
        ScalarResult res = solve_weighted(p, solver, w, inf);
        if (res.status == SolveStatus::TimeLimit) return partial(SolveStatus::TimeLimit, frontier);
        if (res.status != SolveStatus::Optimal) return {res.status, {}};
        const double level = w[0] * a[0] + w[1] * a[1];
        if (res.value < level - 1e-9) {
            SolutionPoint found = make_point(p, res.x);
            frontier.merge(found);
            segments.push_back({a, found.y});
            segments.push_back({found.y, b});
        }
    }
    // A weighted solve may have handed back a point interior to a hull face;
    // only the extreme points belong to the minimum supported set.
    return {SolveStatus::Optimal, hull_vertices_only(frontier.points())};
}

AlgorithmResult epsilon_constraint(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    require_biobjective(p, "epsilon-constraint");
    const std::vector<double> inf = infinities(2);

    TwoStageResult best_f1 = two_stage_min(p, solver, 0, inf);
    if (best_f1.status != SolveStatus::Optimal) return {best_f1.status, {}};
    TwoStageResult best_f2 = two_stage_min(p, solver, 1, inf);
    if (best_f2.status != SolveStatus::Optimal) return {best_f2.status, {}};

    Frontier frontier;
    double bound = std::max(best_f1.point.y[0], best_f2.point.y[0]);
    while (true) {
        if (cfg.solution_limit && static_cast<long long>(frontier.size()) >= *cfg.solution_limit) {
            break;
        }
        ScalarResult stage1 = solve_weighted(p, solver, unit_weights(2, 1), {bound, kInfinity});
        if (stage1.status == SolveStatus::Infeasible) break; // range exhausted
        if (stage1.status == SolveStatus::TimeLimit) {
            return partial(SolveStatus::TimeLimit, frontier);
        }
        if (stage1.status != SolveStatus::Optimal) return {stage1.status, {}};
        ScalarResult stage2 = solve_weighted(p, solver, unit_weights(2, 0), {bound, stage1.value});
        if (stage2.status == SolveStatus::TimeLimit) {
            return partial(SolveStatus::TimeLimit, frontier);
        }
        SolutionPoint point =
            make_point(p, stage2.status == SolveStatus::Optimal ? stage2.x : stage1.x);
        frontier.merge(point);
        bound = point.y[0] - cfg.epsilon;
    }
    return partial(SolveStatus::Optimal, frontier);
}

AlgorithmResult chalmet(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    require_biobjective(p, "chalmet");
    const double eps = cfg.epsilon;

    Frontier frontier;
    std::vector<std::pair<double, double>> worklist = {{kInfinity, kInfinity}};
    bool root = true;
    while (!worklist.empty()) {
        const auto [u1, u2] = worklist.back();
        worklist.pop_back();
        const std::vector<double> upper = {u1 < kInfinity ? u1 - eps : kInfinity,
                                           u2 < kInfinity ? u2 - eps : kInfinity};
        ScalarResult res = solve_weighted(p, solver, ones(2), upper);
        if (res.status == SolveStatus::Infeasible) {
            if (root) return {SolveStatus::Infeasible, {}};
            continue;
        }
        if (res.status == SolveStatus::Unbounded) return {SolveStatus::Unbounded, {}};
        if (res.status == SolveStatus::TimeLimit) return partial(SolveStatus::TimeLimit, frontier);
        if (res.status != SolveStatus::Optimal) return {res.status, {}};
        root = false;
        SolutionPoint point = make_point(p, res.x);
        frontier.merge(point);
        worklist.push_back({point.y[0], u2});
        worklist.push_back({u1, point.y[1]});
    }
    return partial(SolveStatus::Optimal, frontier);
}

} // namespace moplex
