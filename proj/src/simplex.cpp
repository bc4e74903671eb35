#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <vector>

#include "moplex/solver.hpp"

namespace moplex {

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Optimal: return "OPTIMAL";
        case SolveStatus::Infeasible: return "INFEASIBLE";
        case SolveStatus::Unbounded: return "UNBOUNDED";
        case SolveStatus::TimeLimit: return "TIME_LIMIT";
        case SolveStatus::OtherError: return "OTHER_ERROR";
    }
    return "OTHER_ERROR";
}

namespace {

constexpr double kFeasTol = 1e-7;   // phase-1 infeasibility threshold
constexpr double kCostTol = 1e-9;   // reduced-cost optimality threshold
constexpr double kPivotTol = 1e-9;
constexpr double kCheckTol = 1e-6;  // post-solve feasibility verification

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::optional<Clock::time_point> at;

    static Deadline from_limit(std::optional<double> seconds) {
        Deadline d;
        if (seconds) {
            d.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*seconds));
        }
        return d;
    }
    bool expired() const { return at && Clock::now() >= *at; }
};

// How an original variable maps onto nonnegative tableau columns.
struct VarMap {
    enum class Kind { Shift, Flip, Free } kind = Kind::Shift;
    int col = -1;
    int neg_col = -1; // Free only
    double base = 0.0;
};

struct Tableau {
    int m = 0;
    int ncols = 0; // all columns excluding rhs
    std::vector<std::vector<double>> rows; // m x (ncols + 1), last entry rhs
    std::vector<int> basis;                // basis[i] = column basic in row i
    std::vector<double> cost;              // reduced-cost row, ncols + 1 (last = -z)

    void pivot(int pr, int pc) {
        auto& prow = rows[pr];
        const double pv = prow[pc];
        for (double& v : prow) v /= pv;
        prow[pc] = 1.0;
        for (int i = 0; i < m; ++i) {
            if (i == pr) continue;
            const double f = rows[i][pc];
            if (f == 0.0) continue;
            auto& r = rows[i];
            for (int j = 0; j <= ncols; ++j) r[j] -= f * prow[j];
            r[pc] = 0.0;
        }
        const double f = cost[pc];
        if (f != 0.0) {
            for (int j = 0; j <= ncols; ++j) cost[j] -= f * prow[j];
            cost[pc] = 0.0;
        }
        basis[pr] = pc;
    }

    // Builds the reduced-cost row for objective c over current basis.
    void canonicalize(const std::vector<double>& c) {
        cost.assign(ncols + 1, 0.0);
        for (int j = 0; j < ncols && j < static_cast<int>(c.size()); ++j) cost[j] = c[j];
        for (int i = 0; i < m; ++i) {
            const int b = basis[i];
            const double cb = (b < static_cast<int>(c.size())) ? c[b] : 0.0;
            if (cb == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) cost[j] -= cb * rows[i][j];
        }
    }

    // Bland's rule iteration until optimal/unbounded. banned_from marks the
    // first column index that may never enter (artificials in phase 2).
    enum class LoopResult { Optimal, Unbounded, TimeLimit, IterLimit };
    LoopResult iterate(int banned_from, const Deadline& deadline) {
        const long max_iters = 10000L + 200L * (m + ncols);
        for (long iter = 0; iter < max_iters; ++iter) {
            if ((iter & 63) == 0 && deadline.expired()) return LoopResult::TimeLimit;
            int enter = -1;
            for (int j = 0; j < ncols; ++j) {
                if (j >= banned_from) break;
                if (cost[j] < -kCostTol) { enter = j; break; }
            }
            if (enter < 0) return LoopResult::Optimal;
            int leave = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < m; ++i) {
                const double a = rows[i][enter];
                if (a <= kPivotTol) continue;
                const double ratio = rows[i][ncols] / a;
                if (leave < 0 || ratio < best_ratio - 1e-12 ||
                    (std::abs(ratio - best_ratio) <= 1e-12 && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return LoopResult::Unbounded;
            pivot(leave, enter);
        }
        return LoopResult::IterLimit;
    }
};

struct StdRow {
    std::vector<double> a;
    double rhs = 0.0;
    RowSense sense = RowSense::LessEqual;
};

} // namespace

namespace detail {

ScalarResult solve_lp_bounds(const ScalarSubproblem& sub, const std::vector<double>& lower,
                             const std::vector<double>& upper, std::optional<double> time_limit) {
    const Deadline deadline = Deadline::from_limit(time_limit);
    const int n = sub.base.num_variables();

    std::vector<VarMap> vmap(n);
    int nstruct = 0;
    std::vector<std::pair<int, double>> range_caps; // (column, upper - lower)
    for (int i = 0; i < n; ++i) {
        const double lb = lower[i], ub = upper[i];
        if (lb > ub + 1e-9) return {SolveStatus::Infeasible, {}, 0.0};
        if (lb > -kInfinity) {
            vmap[i] = {VarMap::Kind::Shift, nstruct++, -1, lb};
            if (ub < kInfinity) range_caps.emplace_back(vmap[i].col, ub - lb);
        } else if (ub < kInfinity) {
            vmap[i] = {VarMap::Kind::Flip, nstruct++, -1, ub};
        } else {
            vmap[i] = {VarMap::Kind::Free, nstruct, nstruct + 1, 0.0};
            nstruct += 2;
        }
    }

    std::vector<StdRow> srows;
    for (const auto& row : sub.all_rows()) {
        StdRow sr;
        sr.a.assign(nstruct, 0.0);
        sr.rhs = row.rhs;
        sr.sense = row.sense;
        for (const auto& [idx, c] : row.coefficients) {
            const VarMap& vm = vmap[idx];
            switch (vm.kind) {
                case VarMap::Kind::Shift:
                    sr.a[vm.col] += c;
                    sr.rhs -= c * vm.base;
                    break;
                case VarMap::Kind::Flip:
                    sr.a[vm.col] -= c;
                    sr.rhs -= c * vm.base;
                    break;
                case VarMap::Kind::Free:
                    sr.a[vm.col] += c;
                    sr.a[vm.neg_col] -= c;
                    break;
            }
        }
        srows.push_back(std::move(sr));
    }
    for (const auto& [col, cap] : range_caps) {
        StdRow sr;
        sr.a.assign(nstruct, 0.0);
        sr.a[col] = 1.0;
        sr.rhs = cap;
        sr.sense = RowSense::LessEqual;
        srows.push_back(std::move(sr));
    }
    for (auto& sr : srows) {
        if (sr.rhs < 0.0) {
            for (double& v : sr.a) v = (v == 0.0) ? 0.0 : -v;
            sr.rhs = -sr.rhs;
            if (sr.sense == RowSense::LessEqual) sr.sense = RowSense::GreaterEqual;
            else if (sr.sense == RowSense::GreaterEqual) sr.sense = RowSense::LessEqual;
        }
    }

    const int m = static_cast<int>(srows.size());
    int nslack = 0, nart = 0;
    for (const auto& sr : srows) {
        if (sr.sense != RowSense::Equal) ++nslack;
        if (sr.sense != RowSense::LessEqual) ++nart;
    }

    Tableau t;
    t.m = m;
    t.ncols = nstruct + nslack + nart;
    t.rows.assign(m, std::vector<double>(t.ncols + 1, 0.0));
    t.basis.assign(m, -1);
    const int art_from = nstruct + nslack;
    int slack_at = nstruct, art_at = art_from;
    for (int i = 0; i < m; ++i) {
        auto& r = t.rows[i];
        for (int j = 0; j < nstruct; ++j) r[j] = srows[i].a[j];
        r[t.ncols] = srows[i].rhs;
        switch (srows[i].sense) {
            case RowSense::LessEqual:
                r[slack_at] = 1.0;
                t.basis[i] = slack_at++;
                break;
            case RowSense::GreaterEqual:
                r[slack_at] = -1.0;
                ++slack_at;
                r[art_at] = 1.0;
                t.basis[i] = art_at++;
                break;
            case RowSense::Equal:
                r[art_at] = 1.0;
                t.basis[i] = art_at++;
                break;
        }
    }

    if (nart > 0) {
        std::vector<double> phase1(t.ncols, 0.0);
        for (int j = art_from; j < t.ncols; ++j) phase1[j] = 1.0;
        t.canonicalize(phase1);
        switch (t.iterate(t.ncols, deadline)) {
            case Tableau::LoopResult::TimeLimit: return {SolveStatus::TimeLimit, {}, 0.0};
            case Tableau::LoopResult::IterLimit: return {SolveStatus::OtherError, {}, 0.0};
            case Tableau::LoopResult::Unbounded: return {SolveStatus::OtherError, {}, 0.0};
            case Tableau::LoopResult::Optimal: break;
        }
        if (-t.cost[t.ncols] > kFeasTol) return {SolveStatus::Infeasible, {}, 0.0};
        // Drive leftover artificials out of the basis where a real pivot exists.
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < art_from) continue;
            int pc = -1;
            for (int j = 0; j < art_from; ++j) {
                if (std::abs(t.rows[i][j]) > kPivotTol) { pc = j; break; }
            }
            if (pc >= 0) t.pivot(i, pc);
        }
    }

    std::vector<double> phase2(t.ncols, 0.0);
    for (int i = 0; i < n; ++i) {
        const double c = sub.scalar_cost[i];
        if (c == 0.0) continue;
        const VarMap& vm = vmap[i];
        switch (vm.kind) {
            case VarMap::Kind::Shift: phase2[vm.col] += c; break;
            case VarMap::Kind::Flip: phase2[vm.col] -= c; break;
            case VarMap::Kind::Free:
                phase2[vm.col] += c;
                phase2[vm.neg_col] -= c;
                break;
        }
    }
    t.canonicalize(phase2);
    switch (t.iterate(art_from, deadline)) {
        case Tableau::LoopResult::TimeLimit: return {SolveStatus::TimeLimit, {}, 0.0};
        case Tableau::LoopResult::IterLimit: return {SolveStatus::OtherError, {}, 0.0};
        case Tableau::LoopResult::Unbounded: return {SolveStatus::Unbounded, {}, 0.0};
        case Tableau::LoopResult::Optimal: break;
    }

    std::vector<double> tvals(t.ncols, 0.0);
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] >= 0) tvals[t.basis[i]] = t.rows[i][t.ncols];
    }
    ScalarResult res;
    res.status = SolveStatus::Optimal;
    res.x.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const VarMap& vm = vmap[i];
        switch (vm.kind) {
            case VarMap::Kind::Shift: res.x[i] = vm.base + tvals[vm.col]; break;
            case VarMap::Kind::Flip: res.x[i] = vm.base - tvals[vm.col]; break;
            case VarMap::Kind::Free: res.x[i] = tvals[vm.col] - tvals[vm.neg_col]; break;
        }
        if (std::abs(res.x[i]) < 1e-12) res.x[i] = 0.0;
    }
    res.value = sub.scalar_offset;
    for (int i = 0; i < n; ++i) res.value += sub.scalar_cost[i] * res.x[i];

    // Verify the claimed optimum against the original rows and bounds; a
    // violation means numerical failure, reported honestly.
    for (int i = 0; i < n; ++i) {
        if (res.x[i] < lower[i] - kCheckTol || res.x[i] > upper[i] + kCheckTol) {
            return {SolveStatus::OtherError, {}, 0.0};
        }
    }
    for (const auto& row : sub.all_rows()) {
        double lhs = 0.0;
        for (const auto& [idx, c] : row.coefficients) lhs += c * res.x[idx];
        const double slack = lhs - row.rhs;
        if ((row.sense == RowSense::LessEqual && slack > kCheckTol) ||
            (row.sense == RowSense::GreaterEqual && slack < -kCheckTol) ||
            (row.sense == RowSense::Equal && std::abs(slack) > kCheckTol)) {
            return {SolveStatus::OtherError, {}, 0.0};
        }
    }
    return res;
}

} // namespace detail

ScalarResult solve_lp(const ScalarSubproblem& sub, std::optional<double> time_limit) {
    std::vector<double> lb, ub;
    lb.reserve(sub.base.num_variables());
    ub.reserve(sub.base.num_variables());
    for (const auto& v : sub.base.variables()) {
        lb.push_back(v.lower);
        ub.push_back(v.upper);
    }
    return detail::solve_lp_bounds(sub, lb, ub, time_limit);
}

ScalarResult BundledSolver::solve(const ScalarSubproblem& sub, std::optional<double> time_limit) {
    return sub.base.has_integer_variables() ? solve_milp(sub, time_limit)
                                            : solve_lp(sub, time_limit);
}

} // namespace moplex
