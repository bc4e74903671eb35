#include <algorithm>
#include <cmath>

#include "moplex/errors.hpp"
#include "detail.hpp"

namespace moplex {

using namespace algo_detail;

namespace {

struct BoundsResult {
    SolveStatus status = SolveStatus::OtherError;
    std::vector<double> ideal;
    std::vector<double> upper; // anti-ideal + epsilon padding
};

// Ideal point and a padded enclosing upper corner; the epsilon padding makes
// the initial "f_j <= upper_j - epsilon" region contain every feasible point.
BoundsResult objective_bounds(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    BoundsResult out;
    IdealPointResult ideal = compute_ideal_point(p, solver);
    if (ideal.status != SolveStatus::Optimal) {
        out.status = ideal.status;
        return out;
    }
    IdealPointResult anti = compute_anti_ideal_point(p, solver);
    if (anti.status != SolveStatus::Optimal) {
        out.status = anti.status;
        return out;
    }
    out.status = SolveStatus::Optimal;
    out.ideal = ideal.values;
    out.upper = anti.values;
    for (double& u : out.upper) u += cfg.epsilon;
    return out;
}

// Disjoint staircase decomposition of [lower, upper) minus [max(lower, y), upper):
// child j keeps axis-j values below y[j] and raises axes < j to at least y.
std::vector<SearchRegion> staircase_split(const SearchRegion& region,
                                          const std::vector<double>& y) {
    const int d = static_cast<int>(region.upper.size());
    std::vector<SearchRegion> children;
    for (int j = 0; j < d; ++j) {
        if (!(y[j] > region.lower[j] + 1e-9)) continue;
        SearchRegion child = region;
        child.upper[j] = y[j];
        for (int i = 0; i < j; ++i) child.lower[i] = std::max(child.lower[i], y[i]);
        children.push_back(std::move(child));
    }
    return children;
}

double region_volume(const SearchRegion& r) {
    double v = 1.0;
    for (std::size_t j = 0; j < r.upper.size(); ++j) v *= r.upper[j] - r.lower[j];
    return v;
}

std::size_t pick_max_volume(const std::vector<SearchRegion>& regions) {
    std::size_t best = 0;
    double best_vol = region_volume(regions[0]);
    for (std::size_t i = 1; i < regions.size(); ++i) {
        const double v = region_volume(regions[i]);
        if (v > best_vol + 1e-12) {
            best_vol = v;
            best = i;
        }
    }
    return best;
}

} // namespace

AlgorithmResult kirlik_sayin(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    const int o = p.num_objectives();
    const double eps = cfg.epsilon;
    BoundsResult bounds = objective_bounds(p, cfg, solver);
    if (bounds.status != SolveStatus::Optimal) return {bounds.status, {}};

    // Rectangles live in the projection onto objectives 2..o.
    SearchRegion root;
    root.lower.assign(bounds.ideal.begin() + 1, bounds.ideal.end());
    root.upper.assign(bounds.upper.begin() + 1, bounds.upper.end());
    std::vector<SearchRegion> rects = {root};

    Frontier frontier;
    while (!rects.empty()) {
        const std::size_t pick = pick_max_volume(rects);
        const SearchRegion rect = rects[pick];
        std::vector<double> upper(o, kInfinity);
        for (int j = 1; j < o; ++j) upper[j] = rect.upper[j - 1] - eps;

        ScalarResult stage1 = solve_weighted(p, solver, unit_weights(o, 0), upper);
        if (stage1.status == SolveStatus::Infeasible) {
            rects.erase(rects.begin() + static_cast<long>(pick));
            continue;
        }
        if (stage1.status == SolveStatus::TimeLimit) {
            return partial(SolveStatus::TimeLimit, frontier);
        }
        if (stage1.status != SolveStatus::Optimal) return {stage1.status, {}};

        std::vector<double> pinned = upper;
        pinned[0] = stage1.value;
        ScalarResult stage2 = solve_weighted(p, solver, ones(o), pinned);
        if (stage2.status == SolveStatus::TimeLimit) {
            return partial(SolveStatus::TimeLimit, frontier);
        }
        SolutionPoint point =
            make_point(p, stage2.status == SolveStatus::Optimal ? stage2.x : stage1.x);
        frontier.merge(point);

        // No unfound nondominated point projects into [max(l,t), u): anything
        // there is componentwise >= the found point, hence dominated by it.
        const std::vector<double> t(point.y.begin() + 1, point.y.end());
        std::vector<SearchRegion> children = staircase_split(rect, t);
        rects.erase(rects.begin() + static_cast<long>(pick));
        for (auto& c : children) rects.push_back(std::move(c));
    }
    return partial(SolveStatus::Optimal, frontier);
}

AlgorithmResult tamby_vanderpooten(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    const int o = p.num_objectives();
    const double eps = cfg.epsilon;
    BoundsResult bounds = objective_bounds(p, cfg, solver);
    if (bounds.status != SolveStatus::Optimal) return {bounds.status, {}};

    SearchRegion root;
    root.lower = bounds.ideal;
    root.upper = bounds.upper;
    std::vector<SearchRegion> zones = {root};

    Frontier frontier;
    while (!zones.empty()) {
        // Select the (zone, objective) pair with the largest projected volume
        // of the zone onto the objectives other than k.
        std::size_t zi = 0;
        int sel_k = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < zones.size(); ++i) {
            for (int k = 0; k < o; ++k) {
                double vol = 1.0;
                for (int j = 0; j < o; ++j) {
                    if (j != k) vol *= zones[i].upper[j] - bounds.ideal[j];
                }
                if (vol > best + 1e-12) {
                    best = vol;
                    zi = i;
                    sel_k = k;
                }
            }
        }
        const SearchRegion zone = zones[zi];

        std::vector<double> upper(o, kInfinity);
        for (int j = 0; j < o; ++j) {
            if (j != sel_k) upper[j] = zone.upper[j] - eps;
        }
        ScalarResult stage1 = solve_weighted(p, solver, unit_weights(o, sel_k), upper);
        if (stage1.status == SolveStatus::Infeasible ||
            (stage1.status == SolveStatus::Optimal &&
             stage1.value > zone.upper[sel_k] - eps + 1e-9)) {
            // The zone contains no feasible point.
            zones.erase(zones.begin() + static_cast<long>(zi));
            continue;
        }
        if (stage1.status == SolveStatus::TimeLimit) {
            return partial(SolveStatus::TimeLimit, frontier);
        }
        if (stage1.status != SolveStatus::Optimal) return {stage1.status, {}};

        std::vector<double> pinned = upper;
        pinned[sel_k] = stage1.value;
        ScalarResult stage2 = solve_weighted(p, solver, ones(o), pinned);
        if (stage2.status == SolveStatus::TimeLimit) {
            return partial(SolveStatus::TimeLimit, frontier);
        }
        SolutionPoint point =
            make_point(p, stage2.status == SolveStatus::Optimal ? stage2.x : stage1.x);
        frontier.merge(point);

        // Split every zone whose search region contains the new point; the
        // child on axis j lowers that upper bound to y_j and records the
        // point as its defining point.
        std::vector<SearchRegion> next;
        for (const auto& q : zones) {
            bool inside = true;
            for (int j = 0; j < o; ++j) {
                if (!(point.y[j] <= q.upper[j] - eps)) { inside = false; break; }
            }
            if (!inside) {
                next.push_back(q);
                continue;
            }
            for (int j = 0; j < o; ++j) {
                if (!(point.y[j] > bounds.ideal[j] + 1e-9)) continue; // empty child
                SearchRegion child = q;
                child.upper[j] = point.y[j];
                child.defining_points[j] = point;
                for (auto it = child.defining_points.begin(); it != child.defining_points.end();) {
                    const bool still_defining =
                        it->first == j || it->second.y[j] < child.upper[j] - 1e-12;
                    it = still_defining ? std::next(it) : child.defining_points.erase(it);
                }
                next.push_back(std::move(child));
            }
        }
        // Drop duplicates and zones contained in another zone.
        std::vector<SearchRegion> pruned;
        for (std::size_t i = 0; i < next.size(); ++i) {
            bool keep = true;
            for (std::size_t j = 0; j < next.size() && keep; ++j) {
                if (i == j) continue;
                bool contained = true;
                bool equal = true;
                for (int k = 0; k < o; ++k) {
                    if (next[i].upper[k] > next[j].upper[k] + 1e-12) contained = false;
                    if (std::abs(next[i].upper[k] - next[j].upper[k]) > 1e-12) equal = false;
                }
                if (equal) {
                    if (j < i) keep = false;
                } else if (contained) {
                    keep = false;
                }
            }
            if (keep) pruned.push_back(next[i]);
        }
        zones = std::move(pruned);
    }
    return partial(SolveStatus::Optimal, frontier);
}

AlgorithmResult dominguez_rios(const Problem& p, const AlgorithmConfig& cfg, Solver& solver) {
    const int o = p.num_objectives();
    const int n = p.num_variables();
    const double eps = cfg.epsilon;
    const double rho = 1e-4;
    BoundsResult bounds = objective_bounds(p, cfg, solver);
    if (bounds.status != SolveStatus::Optimal) return {bounds.status, {}};

    std::vector<double> lambda(o);
    for (int j = 0; j < o; ++j) lambda[j] = 1.0 / (bounds.upper[j] - bounds.ideal[j]);

    SearchRegion root;
    root.lower = bounds.ideal;
    root.upper = bounds.upper;
    std::vector<SearchRegion> boxes = {root};

    // Augmented problem with the Tchebychev scalar variable appended. Over
    // the initial box lambda_j (f_j - l_j) >= -1, so t >= -1 is safe.
    std::vector<VariableSpec> aug_vars = p.variables();
    aug_vars.push_back({"_tchebychev", -1.0, kInfinity, VarKind::Continuous});
    VectorObjective aug_obj;
    aug_obj.sense = ObjectiveSense::Min;
    for (int k = 0; k < o; ++k) {
        std::vector<double> row = p.objective().matrix[k];
        row.push_back(0.0);
        aug_obj.matrix.push_back(std::move(row));
    }
    std::vector<double> t_row(n + 1, 0.0);
    t_row[n] = 1.0;
    aug_obj.matrix.push_back(std::move(t_row));
    aug_obj.offsets = p.objective().offsets;
    aug_obj.offsets.push_back(0.0);
    const Problem aug(std::move(aug_vars), p.rows(), std::move(aug_obj));

    std::vector<double> weights(o + 1, rho);
    weights[o] = 1.0;

    Frontier frontier;
    while (!boxes.empty()) {
        std::size_t pick = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            double v = 1.0;
            for (int j = 0; j < o; ++j) v *= lambda[j] * (boxes[i].upper[j] - boxes[i].lower[j]);
            if (v > best + 1e-14) {
                best = v;
                pick = i;
            }
        }
        const SearchRegion box = boxes[pick];

        // min t + rho * sum f_j  s.t.  t >= lambda_j (f_j - l_j),  f <= u - eps.
        std::vector<double> upper(o + 1, kInfinity);
        for (int j = 0; j < o; ++j) upper[j] = box.upper[j] - eps;
        std::vector<LinearRow> extra;
        for (int j = 0; j < o; ++j) {
            LinearRow r;
            for (int c = 0; c < n; ++c) {
                const double v = lambda[j] * p.objective().matrix[j][c];
                if (v != 0.0) r.coefficients[c] = v;
            }
            r.coefficients[n] = -1.0;
            r.sense = RowSense::LessEqual;
            r.rhs = lambda[j] * (box.lower[j] - p.objective().offsets[j]);
            extra.push_back(std::move(r));
        }
        ScalarResult res = solver.solve(build_subproblem(aug, weights, upper, extra));
        if (res.status == SolveStatus::Infeasible) {
            boxes.erase(boxes.begin() + static_cast<long>(pick));
            continue;
        }
        if (res.status == SolveStatus::TimeLimit) return partial(SolveStatus::TimeLimit, frontier);
        if (res.status != SolveStatus::Optimal) return {res.status, {}};

        std::vector<double> x(res.x.begin(), res.x.begin() + n);
        SolutionPoint point = make_point(p, x);
        frontier.merge(point);

        // p-split every box whose search region contains the new point.
        std::vector<SearchRegion> next;
        for (const auto& q : boxes) {
            bool inside = true;
            for (int j = 0; j < o; ++j) {
                if (!(point.y[j] <= q.upper[j] - eps)) { inside = false; break; }
            }
            if (!inside) {
                next.push_back(q);
                continue;
            }
            for (auto& child : staircase_split(q, point.y)) next.push_back(std::move(child));
        }
        boxes = std::move(next);
    }
    return partial(SolveStatus::Optimal, frontier);
}

} // namespace moplex
