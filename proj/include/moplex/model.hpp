#ifndef MOPLEX_MODEL_HPP
#define MOPLEX_MODEL_HPP

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace moplex {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class VarKind { Continuous, Integer, Binary };
enum class RowSense { LessEqual, Equal, GreaterEqual };
enum class ObjectiveSense { Min, Max };

struct VariableSpec {
    std::string name;
    double lower = 0.0;
    double upper = kInfinity;
    VarKind kind = VarKind::Continuous;
};

/// Sparse affine constraint: sum_j coefficients[j] * x_j (sense) rhs.
struct LinearRow {
    std::map<int, double> coefficients;
    RowSense sense = RowSense::LessEqual;
    double rhs = 0.0;
};

/// Vector-valued affine objective y = matrix * x + offsets, optimized in a
/// single sense. Row k of the matrix is the gradient of objective k.
struct VectorObjective {
    std::vector<std::vector<double>> matrix;
    std::vector<double> offsets;
    ObjectiveSense sense = ObjectiveSense::Min;
};

/// Immutable multi-objective linear/integer program. Construction normalizes
/// (binary bounds forced to [0,1], exact-zero row coefficients dropped) and
/// validates; instances are safe to share read-only across threads.
class Problem {
public:
    Problem(std::vector<VariableSpec> variables, std::vector<LinearRow> rows,
            VectorObjective objective);

    const std::vector<VariableSpec>& variables() const { return variables_; }
    const std::vector<LinearRow>& rows() const { return rows_; }
    const VectorObjective& objective() const { return objective_; }

    int num_variables() const { return static_cast<int>(variables_.size()); }
    int num_objectives() const { return static_cast<int>(objective_.matrix.size()); }
    ObjectiveSense sense() const { return objective_.sense; }
    bool has_integer_variables() const;

private:
    std::vector<VariableSpec> variables_;
    std::vector<LinearRow> rows_;
    VectorObjective objective_;
};

/// Returns normally iff every type invariant holds and all row/matrix indices
/// are in range. Pure: never mutates `p`.
void validate_problem(const Problem& p);

/// Converts a MAX problem to the equivalent MIN problem (matrix and offsets
/// elementwise negated). Throws AlreadyMin when the sense is already MIN.
Problem negate_objective(const Problem& p);

/// y = matrix * x + offsets.
std::vector<double> evaluate_objective(const Problem& p, const std::vector<double>& x);

} // namespace moplex

#endif
