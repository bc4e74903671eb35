#ifndef MOPLEX_TESTS_SUPPORT_RANDOM_INSTANCES_HPP
#define MOPLEX_TESTS_SUPPORT_RANDOM_INSTANCES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "moplex/model.hpp"

namespace moplex::testing {

inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(mix(seed)) {}
    std::uint64_t next() { return state = mix(state); }
    // uniform integer in [lo, hi]
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Random MAX knapsack in the shape of the didactic example: o objectives with
// integer costs in 1..20, integer item weights in 1..20, capacity half the
// total weight.
inline Problem random_knapsack(std::uint64_t seed, int num_objectives, int max_items) {
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform(std::max(4, max_items - 4), max_items));
    std::vector<VariableSpec> vars;
    for (int j = 0; j < n; ++j) {
        vars.push_back({"x" + std::to_string(j + 1), 0.0, 1.0, VarKind::Binary});
    }
    LinearRow cap;
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        const double w = static_cast<double>(rng.uniform(1, 20));
        cap.coefficients[j] = w;
        total += w;
    }
    cap.sense = RowSense::LessEqual;
    cap.rhs = std::floor(total / 2.0);
    VectorObjective obj;
    obj.sense = ObjectiveSense::Max;
    for (int k = 0; k < num_objectives; ++k) {
        std::vector<double> row(n);
        for (int j = 0; j < n; ++j) row[j] = static_cast<double>(rng.uniform(1, 20));
        obj.matrix.push_back(std::move(row));
    }
    obj.offsets.assign(num_objectives, 0.0);
    return Problem(std::move(vars), {cap}, std::move(obj));
}

// Random pure-binary scalarized subproblem data: a MIN problem with one to
// three knapsack-style rows and integer objective coefficients in -20..20.
inline Problem random_binary_program(std::uint64_t seed, int max_items) {
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform(4, max_items));
    const int m = static_cast<int>(rng.uniform(1, 3));
    std::vector<VariableSpec> vars;
    for (int j = 0; j < n; ++j) {
        vars.push_back({"x" + std::to_string(j + 1), 0.0, 1.0, VarKind::Binary});
    }
    std::vector<LinearRow> rows;
    for (int r = 0; r < m; ++r) {
        LinearRow row;
        double total = 0.0;
        for (int j = 0; j < n; ++j) {
            const double a = static_cast<double>(rng.uniform(0, 20));
            if (a != 0.0) row.coefficients[j] = a;
            total += a;
        }
        row.sense = (rng.uniform(0, 3) == 0) ? RowSense::GreaterEqual : RowSense::LessEqual;
        // A high >= threshold now and then produces infeasible instances.
        const long long denominator = (rng.uniform(0, 9) == 0) ? 1 : 2;
        row.rhs = std::floor(total / static_cast<double>(denominator));
        if (row.sense == RowSense::GreaterEqual && denominator == 1 && rng.uniform(0, 1) == 0) {
            row.rhs = total + 1.0;
        }
        rows.push_back(std::move(row));
    }
    VectorObjective obj;
    obj.sense = ObjectiveSense::Min;
    for (int k = 0; k < 2; ++k) {
        std::vector<double> row(n);
        for (int j = 0; j < n; ++j) row[j] = static_cast<double>(rng.uniform(-20, 20));
        obj.matrix.push_back(std::move(row));
    }
    obj.offsets = {0.0, 0.0};
    return Problem(std::move(vars), std::move(rows), std::move(obj));
}

} // namespace moplex::testing

#endif
