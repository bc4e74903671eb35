#include "moplex/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "moplex/errors.hpp"
#include "moplex/solver.hpp"
#include "moplex/subproblem.hpp"

namespace moplex::oracle {

namespace {

constexpr double kRowTol = 1e-9;
constexpr long long kMaxLattice = 1LL << 22;

bool row_satisfied(const LinearRow& row, const std::vector<double>& x) {
    double lhs = 0.0;
    for (const auto& [idx, c] : row.coefficients) lhs += c * x[idx];
    switch (row.sense) {
        case RowSense::LessEqual: return lhs <= row.rhs + kRowTol;
        case RowSense::GreaterEqual: return lhs >= row.rhs - kRowTol;
        case RowSense::Equal: return std::abs(lhs - row.rhs) <= kRowTol;
    }
    return false;
}

} // namespace

Frontier enumerate_frontier(const Problem& p) {
    const Problem q = (p.sense() == ObjectiveSense::Max) ? negate_objective(p) : p;
    const int n = q.num_variables();
    std::vector<long long> lo(n), width(n);
    long long total = 1;
    for (int j = 0; j < n; ++j) {
        const auto& v = q.variables()[j];
        if (v.kind == VarKind::Continuous) {
            throw ContinuousUnsupported("enumerate_frontier: variable '" + v.name +
                                        "' is continuous");
        }
        if (!(v.lower > -kInfinity) || !(v.upper < kInfinity)) {
            throw ContinuousUnsupported("enumerate_frontier: variable '" + v.name +
                                        "' has infinite bounds");
        }
        lo[j] = static_cast<long long>(std::ceil(v.lower - kRowTol));
        const long long hi = static_cast<long long>(std::floor(v.upper + kRowTol));
        width[j] = hi - lo[j] + 1;
        if (width[j] <= 0) return Frontier{};
        if (total > kMaxLattice / width[j]) {
            throw TooLarge("enumerate_frontier: lattice exceeds 2^22 points");
        }
        total *= width[j];
    }

    Frontier frontier;
    std::vector<long long> digits(n, 0);
    std::vector<double> x(n, 0.0);
    for (long long it = 0; it < total; ++it) {
        for (int j = 0; j < n; ++j) x[j] = static_cast<double>(lo[j] + digits[j]);
        bool ok = true;
        for (const auto& row : q.rows()) {
            if (!row_satisfied(row, x)) { ok = false; break; }
        }
        if (ok) frontier.merge({x, evaluate_objective(q, x)});
        for (int j = n - 1; j >= 0; --j) {
            if (++digits[j] < width[j]) break;
            digits[j] = 0;
        }
    }
    return frontier;
}

namespace detail {

std::vector<SolutionPoint> supported_by_hull_sweep(const std::vector<SolutionPoint>& frontier) {
    // frontier is lex-sorted: y1 strictly ascending, y2 strictly descending.
    if (frontier.size() <= 2) return frontier;
    auto cross = [](const SolutionPoint& o, const SolutionPoint& a, const SolutionPoint& b) {
        return (a.y[0] - o.y[0]) * (b.y[1] - o.y[1]) - (a.y[1] - o.y[1]) * (b.y[0] - o.y[0]);
    };
    std::vector<SolutionPoint> hull;
    for (const auto& pt : frontier) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 1e-9) {
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    return hull;
}

std::vector<SolutionPoint> supported_by_certification(const std::vector<SolutionPoint>& frontier) {
    if (frontier.size() <= 1) return frontier;
    const int o = static_cast<int>(frontier.front().y.size());
    std::vector<SolutionPoint> out;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        // max d s.t. w^T (y_j - y_i) >= d for all j != i, w_k >= d, sum w = 1.
        // y_i is a hull vertex iff the optimum d is strictly positive.
        std::vector<VariableSpec> vars;
        for (int k = 0; k < o; ++k) vars.push_back({"w" + std::to_string(k), 0.0, 1.0, VarKind::Continuous});
        vars.push_back({"d", -1.0, 1.0, VarKind::Continuous});
        std::vector<LinearRow> rows;
        {
            LinearRow sum_one;
            for (int k = 0; k < o; ++k) sum_one.coefficients[k] = 1.0;
            sum_one.sense = RowSense::Equal;
            sum_one.rhs = 1.0;
            rows.push_back(sum_one);
        }
        for (int k = 0; k < o; ++k) {
            LinearRow r;
            r.coefficients[k] = 1.0;
            r.coefficients[o] = -1.0;
            r.sense = RowSense::GreaterEqual;
            r.rhs = 0.0;
            rows.push_back(r);
        }
        for (std::size_t j = 0; j < frontier.size(); ++j) {
            if (j == i) continue;
            LinearRow r;
            for (int k = 0; k < o; ++k) {
                const double diff = frontier[j].y[k] - frontier[i].y[k];
                if (diff != 0.0) r.coefficients[k] = diff;
            }
            r.coefficients[o] = -1.0;
            r.sense = RowSense::GreaterEqual;
            r.rhs = 0.0;
            rows.push_back(r);
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
        if (res.status == SolveStatus::Optimal && -res.value > 1e-7) {
            out.push_back(frontier[i]);
        }
    }
    return out;
}

} // namespace detail

Frontier enumerate_supported(const Problem& p) {
    Frontier frontier = enumerate_frontier(p);
    if (frontier.size() <= 1) return frontier;
    const int o = static_cast<int>(frontier.points().front().y.size());
    const auto kept = (o == 2) ? detail::supported_by_hull_sweep(frontier.points())
                               : detail::supported_by_certification(frontier.points());
    return filter_nondominated(kept);
}

namespace {

Problem knapsack_max(const std::vector<std::vector<double>>& costs,
                     const std::vector<double>& item_weights, double capacity) {
    const int n = static_cast<int>(item_weights.size());
    std::vector<VariableSpec> vars;
    for (int j = 0; j < n; ++j) {
        vars.push_back({"x" + std::to_string(j + 1), 0.0, 1.0, VarKind::Binary});
    }
    LinearRow cap;
    for (int j = 0; j < n; ++j) cap.coefficients[j] = item_weights[j];
    cap.sense = RowSense::LessEqual;
    cap.rhs = capacity;
    VectorObjective obj;
    obj.matrix = costs;
    obj.offsets.assign(costs.size(), 0.0);
    obj.sense = ObjectiveSense::Max;
    return Problem(std::move(vars), {cap}, std::move(obj));
}

Problem pick_one_min(const std::vector<std::vector<double>>& costs) {
    const int n = static_cast<int>(costs.front().size());
    std::vector<VariableSpec> vars;
    for (int j = 0; j < n; ++j) {
        vars.push_back({"x" + std::to_string(j + 1), 0.0, 1.0, VarKind::Binary});
    }
    LinearRow one;
    for (int j = 0; j < n; ++j) one.coefficients[j] = 1.0;
    one.sense = RowSense::Equal;
    one.rhs = 1.0;
    VectorObjective obj;
    obj.matrix = costs;
    obj.offsets.assign(costs.size(), 0.0);
    obj.sense = ObjectiveSense::Min;
    return Problem(std::move(vars), {one}, std::move(obj));
}

Fixture make_fixture(std::string name, Problem p) {
    Fixture f{std::move(name), std::move(p), {}, {}};
    for (const auto& pt : enumerate_frontier(f.problem).points()) f.expected_frontier.push_back(pt.y);
    for (const auto& pt : enumerate_supported(f.problem).points()) f.expected_supported.push_back(pt.y);
    return f;
}

} // namespace

Fixture k1() {
    return make_fixture("k1", knapsack_max({{5, 4, 3}, {3, 4, 5}}, {3, 4, 5}, 8));
}

Fixture k2() {
    return make_fixture("k2", knapsack_max({{1}, {1}}, {1}, 0));
}

Fixture k3() {
    std::vector<VariableSpec> vars;
    for (int j = 0; j < 3; ++j) {
        vars.push_back({"x" + std::to_string(j + 1), 0.0, 1.0, VarKind::Binary});
    }
    LinearRow at_most_one;
    for (int j = 0; j < 3; ++j) at_most_one.coefficients[j] = 1.0;
    at_most_one.sense = RowSense::LessEqual;
    at_most_one.rhs = 1.0;
    VectorObjective obj;
    obj.matrix = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    obj.offsets = {0.0, 0.0, 0.0};
    obj.sense = ObjectiveSense::Max;
    return make_fixture("k3", Problem(std::move(vars), {at_most_one}, std::move(obj)));
}

Fixture k4() {
    return make_fixture("k4", pick_one_min({{0, 3, 4}, {4, 3, 0}}));
}

Fixture k4_supported_middle() {
    return make_fixture("k4_supported_middle", pick_one_min({{0, 1, 4}, {4, 1, 0}}));
}

} // namespace moplex::oracle
