#ifndef MOPLEX_TESTS_SUPPORT_TEST_PROBLEMS_HPP
#define MOPLEX_TESTS_SUPPORT_TEST_PROBLEMS_HPP

#include <vector>

#include "moplex/model.hpp"

namespace moplex::testing {

// min (x1, x2) s.t. x1 + x2 >= 1, 0 <= x <= 1 (continuous). Supported
// extremes are (0,1) and (1,0); the whole segment between them is efficient.
inline Problem l1() {
    std::vector<VariableSpec> vars = {{"x1", 0.0, 1.0, VarKind::Continuous},
                                      {"x2", 0.0, 1.0, VarKind::Continuous}};
    LinearRow cover;
    cover.coefficients = {{0, 1.0}, {1, 1.0}};
    cover.sense = RowSense::GreaterEqual;
    cover.rhs = 1.0;
    VectorObjective obj;
    obj.matrix = {{1.0, 0.0}, {0.0, 1.0}};
    obj.offsets = {0.0, 0.0};
    obj.sense = ObjectiveSense::Min;
    return Problem(std::move(vars), {cover}, std::move(obj));
}

// x1 in [0,1] with x1 >= 2: no feasible point.
inline Problem infeasible_fixture() {
    std::vector<VariableSpec> vars = {{"x1", 0.0, 1.0, VarKind::Binary}};
    LinearRow row;
    row.coefficients = {{0, 1.0}};
    row.sense = RowSense::GreaterEqual;
    row.rhs = 2.0;
    VectorObjective obj;
    obj.matrix = {{1.0}, {1.0}};
    obj.offsets = {0.0, 0.0};
    obj.sense = ObjectiveSense::Min;
    return Problem(std::move(vars), {row}, std::move(obj));
}

// min (-x1, -x2) with x unbounded above: every anchor subproblem diverges.
inline Problem unbounded_fixture() {
    std::vector<VariableSpec> vars = {{"x1", 0.0, kInfinity, VarKind::Continuous},
                                      {"x2", 0.0, kInfinity, VarKind::Continuous}};
    VectorObjective obj;
    obj.matrix = {{-1.0, 0.0}, {0.0, -1.0}};
    obj.offsets = {0.0, 0.0};
    obj.sense = ObjectiveSense::Min;
    return Problem(std::move(vars), {}, std::move(obj));
}

} // namespace moplex::testing

#endif
