#include <algorithm>
#include <cmath>

#include "moplex/errors.hpp"
#include "detail.hpp"

namespace moplex {

using namespace algo_detail;

namespace {

// Solves the (o+1)x(o+1) system  w . y_i = b (i = 1..o),  sum w = 1  for the
// hyperplane through o points. Returns false when the points are affinely
// dependent.
bool hyperplane_through(const std::vector<const SolutionPoint*>& pts, std::vector<double>& w,
                        double& b) {
    const int o = static_cast<int>(pts.size());
    const int dim = o + 1;
    std::vector<std::vector<double>> a(dim, std::vector<double>(dim + 1, 0.0));
    for (int i = 0; i < o; ++i) {
        for (int j = 0; j < o; ++j) a[i][j] = pts[i]->y[j];
        a[i][o] = -1.0; // coefficient of b
        a[i][dim] = 0.0;
    }
    for (int j = 0; j < o; ++j) a[o][j] = 1.0;
    a[o][dim] = 1.0;
    for (int col = 0; col < dim; ++col) {
        int piv = col;
        for (int r = col + 1; r < dim; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (std::abs(a[piv][col]) < 1e-9) return false;
        std::swap(a[col], a[piv]);
        for (int r = 0; r < dim; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (int c = col; c <= dim; ++c) a[r][c] -= f * a[col][c];
        }
    }
    w.assign(o, 0.0);
    for (int j = 0; j < o; ++j) w[j] = a[j][dim] / a[j][j];
    b = a[o][dim] / a[o][o];
    return true;
}

struct Facet {
    std::vector<double> w; // normalized, componentwise >= 0
    double level = 0.0;    // min over found points of w . y
};

void push_facet(std::vector<Facet>& facets, const std::vector<SolutionPoint>& pts,
                std::vector<double> w) {
    double total = 0.0;
    for (double& v : w) {
        if (v < 0.0) v = 0.0;
        total += v;
    }
    if (total < 1e-9) return;
    for (double& v : w) v /= total;
    for (const auto& f : facets) {
        if (same_y(f.w, w)) return;
    }
    Facet facet;
    facet.level = kInfinity;
    for (const auto& p : pts) {
        double dot = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j) dot += w[j] * p.y[j];
        facet.level = std::min(facet.level, dot);
    }
    facet.w = std::move(w);
    facets.push_back(std::move(facet));
}

// Candidate inner facets: supporting hyperplanes through o-subsets of the
// found points (consecutive pairs suffice in the bi-objective case), normals
// clamped to >= 0 and renormalized to sum 1.
std::vector<Facet> enumerate_facets(const std::vector<SolutionPoint>& pts) {
    const int o = static_cast<int>(pts.front().y.size());
    std::vector<Facet> facets;
    if (static_cast<int>(pts.size()) < o) return facets;
    if (o == 2) {
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const auto& a = pts[i].y;
            const auto& b = pts[i + 1].y;
            push_facet(facets, pts, {a[1] - b[1], b[0] - a[0]});
        }
        return facets;
    }
    std::vector<int> idx(o);
    for (int i = 0; i < o; ++i) idx[i] = i;
    auto advance = [&]() {
        const int n = static_cast<int>(pts.size());
        int i = o - 1;
        while (i >= 0 && idx[i] == n - o + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < o; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    do {
        std::vector<const SolutionPoint*> sel;
        for (int i : idx) sel.push_back(&pts[i]);
        std::vector<double> w;
        double b = 0.0;
        if (hyperplane_through(sel, w, b)) push_facet(facets, pts, std::move(w));
    } while (advance());
    return facets;
}

// Lower bound on min w . y over the true feasible image, from the halfspaces
// w_s . y >= opt_s of previously solved weights.
double outer_bound(const std::vector<std::pair<std::vector<double>, double>>& solved,
                   const std::vector<double>& w) {
    const int o = static_cast<int>(w.size());
    std::vector<VariableSpec> vars;
    for (int j = 0; j < o; ++j) {
        vars.push_back({"y" + std::to_string(j), -kInfinity, kInfinity, VarKind::Continuous});
    }
    std::vector<LinearRow> rows;
    for (const auto& [ws, opt] : solved) {
        LinearRow r;
        for (int j = 0; j < o; ++j) {
            if (ws[j] != 0.0) r.coefficients[j] = ws[j];
        }
        r.sense = RowSense::GreaterEqual;
        r.rhs = opt;
        rows.push_back(std::move(r));
    }
    VectorObjective obj;
    obj.sense = ObjectiveSense::Min;
    obj.matrix = {w, w};
    obj.offsets = {0.0, 0.0};
    Problem lp(std::move(vars), std::move(rows), std::move(obj));
    ScalarResult res = solve_lp(build_subproblem(lp, {1.0, 0.0}, {kInfinity, kInfinity}));
    if (res.status != SolveStatus::Optimal) return -kInfinity;
    return res.value;
}

} // namespace

AlgorithmResult sandwiching(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    const int o = p.num_objectives();
    const std::vector<double> inf = infinities(o);

    Frontier frontier;
    std::vector<std::pair<std::vector<double>, double>> solved; // (normalized w, optimum)
    auto already_solved = [&](const std::vector<double>& w) {
        for (const auto& [ws, opt] : solved) {
            (void)opt;
            if (same_y(ws, w)) return true;
        }
        return false;
    };

    for (int k = 0; k < o; ++k) {
        TwoStageResult anchor = two_stage_min(p, solver, k, inf);
        if (anchor.status != SolveStatus::Optimal) return {anchor.status, {}};
        frontier.merge(anchor.point);
        solved.push_back({unit_weights(o, k), anchor.stage1_value});
    }

    const long max_rounds = 10000;
    for (long round = 0; round < max_rounds; ++round) {
        if (static_cast<int>(frontier.size()) < o) break; // anchors coincide
        std::vector<Facet> facets = enumerate_facets(frontier.points());
        const Facet* widest = nullptr;
        double widest_gap = cfg.sandwich_gap;
        for (const auto& facet : facets) {
            // A solved direction is as closed as it can get: the direct
            // optimum leaves at most 1e-9 between inner and outer.
            if (already_solved(facet.w)) continue;
            const double gap = facet.level - outer_bound(solved, facet.w);
            if (gap > widest_gap + 1e-15) {
                widest_gap = gap;
                widest = &facet;
            }
        }
        if (widest == nullptr) break;

        ScalarResult res = solve_weighted(p, solver, widest->w, inf);
        if (res.status == SolveStatus::TimeLimit) return partial(SolveStatus::TimeLimit, frontier);
        if (res.status != SolveStatus::Optimal) return {res.status, {}};
        solved.push_back({widest->w, res.value});
        if (res.value < widest->level - 1e-9) {
            frontier.merge(make_point(p, res.x));
        }
    }
    return {SolveStatus::Optimal, hull_vertices_only(frontier.points())};
}

} // namespace moplex
