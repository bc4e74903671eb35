#include "moplex/model.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "moplex/errors.hpp"

namespace moplex {

Problem::Problem(std::vector<VariableSpec> variables, std::vector<LinearRow> rows,
                 VectorObjective objective)
    : variables_(std::move(variables)), rows_(std::move(rows)), objective_(std::move(objective)) {
    for (auto& v : variables_) {
        if (v.kind == VarKind::Binary) {
            v.lower = 0.0;
            v.upper = 1.0;
        }
    }
    for (auto& row : rows_) {
        for (auto it = row.coefficients.begin(); it != row.coefficients.end();) {
            if (it->second == 0.0) {
                it = row.coefficients.erase(it);
            } else {
                ++it;
            }
        }
    }
    validate_problem(*this);
}

bool Problem::has_integer_variables() const {
    for (const auto& v : variables_) {
        if (v.kind != VarKind::Continuous) return true;
    }
    return false;
}

void validate_problem(const Problem& p) {
    const int n = p.num_variables();
    const int o = p.num_objectives();
    if (o < 2) {
        throw DimensionMismatch("objective must have at least 2 rows, got " + std::to_string(o));
    }
    if (static_cast<int>(p.objective().offsets.size()) != o) {
        throw DimensionMismatch("objective offsets length does not match objective count");
    }
    for (const auto& row : p.objective().matrix) {
        if (static_cast<int>(row.size()) != n) {
            throw DimensionMismatch("objective matrix width does not match variable count");
        }
    }
    for (const auto& v : p.variables()) {
        if (std::isnan(v.lower) || std::isnan(v.upper)) {
            throw BadBounds("variable '" + v.name + "' has NaN bound");
        }
        if (v.lower > v.upper) {
            throw BadBounds("variable '" + v.name + "' has lower > upper");
        }
    }
    for (std::size_t r = 0; r < p.rows().size(); ++r) {
        for (const auto& [idx, coef] : p.rows()[r].coefficients) {
            (void)coef;
            if (idx < 0 || idx >= n) {
                throw BadIndex("row " + std::to_string(r) + " references variable index " +
                               std::to_string(idx));
            }
        }
    }
}

Problem negate_objective(const Problem& p) {
    if (p.sense() != ObjectiveSense::Max) {
        throw AlreadyMin("negate_objective requires a MAX problem");
    }
    VectorObjective obj = p.objective();
    obj.sense = ObjectiveSense::Min;
    for (auto& row : obj.matrix) {
        for (auto& c : row) c = (c == 0.0) ? 0.0 : -c;
    }
    for (auto& c : obj.offsets) c = (c == 0.0) ? 0.0 : -c;
    return Problem(p.variables(), p.rows(), std::move(obj));
}

std::vector<double> evaluate_objective(const Problem& p, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != p.num_variables()) {
        throw DimensionMismatch("evaluate_objective: x has length " + std::to_string(x.size()) +
                                ", expected " + std::to_string(p.num_variables()));
    }
    const auto& obj = p.objective();
    std::vector<double> y(obj.matrix.size(), 0.0);
    for (std::size_t k = 0; k < obj.matrix.size(); ++k) {
        double acc = obj.offsets[k];
        const auto& row = obj.matrix[k];
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
        y[k] = acc;
    }
    return y;
}

} // namespace moplex
