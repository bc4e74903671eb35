#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <queue>
#include <vector>

#include "moplex/solver.hpp"

namespace moplex {

namespace {

constexpr double kIntTol = 1e-6;
constexpr double kImproveTol = 1e-9;

using Clock = std::chrono::steady_clock;

struct Node {
    double bound = 0.0;
    long id = 0;
    std::vector<double> lower, upper;
    std::vector<double> x;
};

struct NodeOrder {
    // Best-first: lowest relaxation bound, ties by creation order.
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound > b.bound;
        return a.id > b.id;
    }
};

bool is_integral(const std::vector<double>& x, const std::vector<int>& int_vars) {
    for (int j : int_vars) {
        if (std::abs(x[j] - std::round(x[j])) > kIntTol) return false;
    }
    return true;
}

int pick_branch_var(const std::vector<double>& x, const std::vector<int>& int_vars) {
    int best = -1;
    double best_frac = -1.0;
    for (int j : int_vars) {
        const double dist = std::abs(x[j] - std::round(x[j]));
        if (dist <= kIntTol) continue;
        const double frac = x[j] - std::floor(x[j]);
        const double score = std::min(frac, 1.0 - frac);
        if (score > best_frac + 1e-12) {
            best_frac = score;
            best = j;
        }
    }
    return best;
}

} // namespace

ScalarResult solve_milp(const ScalarSubproblem& sub, std::optional<double> time_limit) {
    std::vector<int> int_vars;
    std::vector<double> lb, ub;
    for (int j = 0; j < sub.base.num_variables(); ++j) {
        const auto& v = sub.base.variables()[j];
        lb.push_back(v.lower);
        ub.push_back(v.upper);
        if (v.kind != VarKind::Continuous) int_vars.push_back(j);
    }
    if (int_vars.empty()) return solve_lp(sub, time_limit);

    const std::optional<Clock::time_point> deadline =
        time_limit ? std::optional<Clock::time_point>(
                         Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                            std::chrono::duration<double>(*time_limit)))
                   : std::nullopt;
    auto remaining = [&]() -> std::optional<double> {
        if (!deadline) return std::nullopt;
        return std::chrono::duration<double>(*deadline - Clock::now()).count();
    };
    auto expired = [&]() { return deadline && Clock::now() >= *deadline; };

    bool have_incumbent = false;
    double best_value = kInfinity;
    std::vector<double> best_x;

    auto try_incumbent = [&](const std::vector<double>& x_raw) {
        std::vector<double> x = x_raw;
        for (int j : int_vars) x[j] = std::round(x[j]);
        // Snapping may nudge a row past tolerance; fall back to the raw point.
        bool ok = true;
        for (int j = 0; j < static_cast<int>(x.size()) && ok; ++j) {
            if (x[j] < lb[j] - kIntTol || x[j] > ub[j] + kIntTol) ok = false;
        }
        for (const auto& row : sub.all_rows()) {
            if (!ok) break;
            double lhs = 0.0;
            for (const auto& [idx, c] : row.coefficients) lhs += c * x[idx];
            const double slack = lhs - row.rhs;
            if ((row.sense == RowSense::LessEqual && slack > kIntTol) ||
                (row.sense == RowSense::GreaterEqual && slack < -kIntTol) ||
                (row.sense == RowSense::Equal && std::abs(slack) > kIntTol)) {
                ok = false;
            }
        }
        if (!ok) x = x_raw;
        double value = sub.scalar_offset;
        for (std::size_t j = 0; j < x.size(); ++j) value += sub.scalar_cost[j] * x[j];
        if (!have_incumbent || value < best_value - kImproveTol) {
            have_incumbent = true;
            best_value = value;
            best_x = std::move(x);
        }
    };

    std::priority_queue<Node, std::vector<Node>, NodeOrder> queue;
    long next_id = 0;

    // Solves a node relaxation and either prunes, records an incumbent, or
    // enqueues. Returns a terminal status for unbounded/timeout, else Optimal.
    auto process = [&](std::vector<double> nlb, std::vector<double> nub) -> SolveStatus {
        ScalarResult rel = detail::solve_lp_bounds(sub, nlb, nub, remaining());
        switch (rel.status) {
            case SolveStatus::Infeasible: return SolveStatus::Optimal;
            case SolveStatus::Unbounded: return SolveStatus::Unbounded;
            case SolveStatus::TimeLimit: return SolveStatus::TimeLimit;
            case SolveStatus::OtherError: return SolveStatus::OtherError;
            case SolveStatus::Optimal: break;
        }
        if (have_incumbent && rel.value >= best_value - kImproveTol) return SolveStatus::Optimal;
        if (is_integral(rel.x, int_vars)) {
            try_incumbent(rel.x);
            return SolveStatus::Optimal;
        }
        Node node;
        node.bound = rel.value;
        node.id = next_id++;
        node.lower = std::move(nlb);
        node.upper = std::move(nub);
        node.x = std::move(rel.x);
        queue.push(std::move(node));
        return SolveStatus::Optimal;
    };

    SolveStatus st = process(lb, ub);
    if (st != SolveStatus::Optimal) return {st, {}, 0.0};

    while (!queue.empty()) {
        if (expired()) return {SolveStatus::TimeLimit, {}, 0.0};
        Node node = queue.top();
        queue.pop();
        if (have_incumbent && node.bound >= best_value - kImproveTol) break;
        const int j = pick_branch_var(node.x, int_vars);
        if (j < 0) { // integral within tolerance after all
            try_incumbent(node.x);
            continue;
        }
        const double v = node.x[j];
        {
            std::vector<double> nub = node.upper;
            nub[j] = std::floor(v);
            st = process(node.lower, nub);
            if (st != SolveStatus::Optimal) return {st, {}, 0.0};
        }
        {
            std::vector<double> nlb = node.lower;
            nlb[j] = std::ceil(v);
            st = process(nlb, node.upper);
            if (st != SolveStatus::Optimal) return {st, {}, 0.0};
        }
    }

    if (!have_incumbent) return {SolveStatus::Infeasible, {}, 0.0};
    return {SolveStatus::Optimal, best_x, best_value};
}

} // namespace moplex
