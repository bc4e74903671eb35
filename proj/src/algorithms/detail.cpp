#include "detail.hpp"

#include <cmath>
#include <string>

namespace moplex::algo_detail {

namespace {

std::vector<SolutionPoint> hull_sweep_2d(const std::vector<SolutionPoint>& pts) {
    if (pts.size() <= 2) return pts;
    auto cross = [](const SolutionPoint& o, const SolutionPoint& a, const SolutionPoint& b) {
        return (a.y[0] - o.y[0]) * (b.y[1] - o.y[1]) - (a.y[1] - o.y[1]) * (b.y[0] - o.y[0]);
    };
    std::vector<SolutionPoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 1e-9) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    return hull;
}

// y_i is a hull vertex iff some strictly positive weighting separates it from
// every other point: max d s.t. w (y_j - y_i) >= d, w_k >= d, sum w = 1 has a
// strictly positive optimum.
bool is_hull_vertex(const std::vector<SolutionPoint>& pts, std::size_t i) {
    const int o = static_cast<int>(pts[i].y.size());
    std::vector<VariableSpec> vars;
    for (int k = 0; k < o; ++k) {
        vars.push_back({"w" + std::to_string(k), 0.0, 1.0, VarKind::Continuous});
    }
    vars.push_back({"d", -1.0, 1.0, VarKind::Continuous});
    std::vector<LinearRow> rows;
    LinearRow sum_one;
    for (int k = 0; k < o; ++k) sum_one.coefficients[k] = 1.0;
    sum_one.sense = RowSense::Equal;
    sum_one.rhs = 1.0;
    rows.push_back(std::move(sum_one));
    for (int k = 0; k < o; ++k) {
        LinearRow r;
        r.coefficients[k] = 1.0;
        r.coefficients[o] = -1.0;
        r.sense = RowSense::GreaterEqual;
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j == i) continue;
        LinearRow r;
        for (int k = 0; k < o; ++k) {
            const double diff = pts[j].y[k] - pts[i].y[k];
            if (diff != 0.0) r.coefficients[k] = diff;
        }
        r.coefficients[o] = -1.0;
        r.sense = RowSense::GreaterEqual;
        rows.push_back(std::move(r));
    }
    VectorObjective obj;
    obj.sense = ObjectiveSense::Min;
    std::vector<double> minus_d(o + 1, 0.0);
    minus_d[o] = -1.0;
    obj.matrix = {minus_d, minus_d};
    obj.offsets = {0.0, 0.0};
    Problem lp(std::move(vars), std::move(rows), std::move(obj));
    ScalarResult res = solve_lp(build_subproblem(lp, {1.0, 0.0},
                                                 {kInfinity, kInfinity}));
    return res.status == SolveStatus::Optimal && -res.value > 1e-7;
}

} // namespace

std::vector<SolutionPoint> hull_vertices_only(const std::vector<SolutionPoint>& points) {
    if (points.size() <= 1) return points;
    if (points.front().y.size() == 2) return hull_sweep_2d(points);
    std::vector<SolutionPoint> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (is_hull_vertex(points, i)) out.push_back(points[i]);
    }
    return out;
}

std::vector<double> unit_weights(int o, int k) {
    std::vector<double> w(o, 0.0);
    w[k] = 1.0;
    return w;
}

std::vector<double> ones(int o) { return std::vector<double>(o, 1.0); }

std::vector<double> infinities(int o) { return std::vector<double>(o, kInfinity); }

SolutionPoint make_point(const Problem& p, const std::vector<double>& x) {
    return {x, evaluate_objective(p, x)};
}

ScalarResult solve_weighted(const Problem& p, Solver& solver, const std::vector<double>& w,
                            const std::vector<double>& upper,
                            const std::vector<LinearRow>& extra) {
    return solver.solve(build_subproblem(p, w, upper, extra));
}

TwoStageResult two_stage_min(const Problem& p, Solver& solver, int k,
                             const std::vector<double>& upper) {
    const int o = p.num_objectives();
    TwoStageResult out;
    ScalarResult first = solve_weighted(p, solver, unit_weights(o, k), upper);
    out.status = first.status;
    if (first.status != SolveStatus::Optimal) return out;
    out.stage1_value = first.value;

    std::vector<double> pinned = upper;
    pinned[k] = std::min(pinned[k], first.value);
    ScalarResult second = solve_weighted(p, solver, ones(o), pinned);
    if (second.status == SolveStatus::TimeLimit) {
        out.status = SolveStatus::TimeLimit;
        return out;
    }
    // Stage 2 is feasible by construction; on a numerical hiccup keep the
    // stage-1 point, which is feasible though possibly only weakly efficient.
    out.point = make_point(p, second.status == SolveStatus::Optimal ? second.x : first.x);
    out.status = SolveStatus::Optimal;
    return out;
}

IdealPointResult compute_anti_ideal_point(const Problem& p, Solver& solver) {
    const int o = p.num_objectives();
    IdealPointResult out;
    out.values.assign(o, 0.0);
    for (int k = 0; k < o; ++k) {
        std::vector<double> w(o, 0.0);
        w[k] = -1.0; // maximize f_k
        ScalarResult res = solve_weighted(p, solver, w, infinities(o));
        if (res.status != SolveStatus::Optimal) {
            out.status = res.status;
            out.values.clear();
            return out;
        }
        out.values[k] = -res.value;
    }
    out.status = SolveStatus::Optimal;
    return out;
}

AlgorithmResult finalize(SolveStatus status, const std::vector<SolutionPoint>& points) {
    Frontier f = filter_nondominated(points);
    return {status, f.points()};
}

AlgorithmResult partial(SolveStatus status, const Frontier& frontier) {
    return {status, frontier.points()};
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t bits = mix64(mix64(mix64(seed) ^ a) ^ b);
    // strictly inside (0, 1) so -log stays finite and positive
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

std::vector<double> sample_simplex(std::uint64_t seed, std::uint64_t iteration, int o) {
    std::vector<double> w(o);
    double total = 0.0;
    for (int j = 0; j < o; ++j) {
        w[j] = -std::log(uniform01(seed, iteration, static_cast<std::uint64_t>(j)));
        total += w[j];
    }
    for (double& v : w) v /= total;
    return w;
}

} // namespace moplex::algo_detail
