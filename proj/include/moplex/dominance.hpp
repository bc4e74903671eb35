#ifndef MOPLEX_DOMINANCE_HPP
#define MOPLEX_DOMINANCE_HPP

#include <utility>
#include <vector>

namespace moplex {

/// An efficient solution candidate: decision vector x with its objective
/// vector y. All dominance machinery works on y in MIN convention.
struct SolutionPoint {
    std::vector<double> x;
    std::vector<double> y;
};

/// Componentwise tolerance used to decide two objective vectors are the same
/// point. Dominance itself compares exactly.
inline constexpr double kSameYTol = 1e-9;

/// true iff a <= b componentwise and a != b (exact comparisons).
bool dominates(const std::vector<double>& a, const std::vector<double>& b);

bool lex_less(const std::vector<double>& a, const std::vector<double>& b);
bool same_y(const std::vector<double>& a, const std::vector<double>& b, double tol = kSameYTol);

/// Ordered (ascending lexicographic by y), mutually nondominated, deduplicated
/// point set in MIN convention.
class Frontier {
public:
    Frontier() = default;

    const std::vector<SolutionPoint>& points() const& { return points_; }
    std::vector<SolutionPoint> points() && { return std::move(points_); }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    /// Inserts p unless its y is dominated by or equal to an existing y;
    /// removes any points p dominates. Returns true when the frontier changed.
    bool merge(const SolutionPoint& p);

private:
    friend Frontier filter_nondominated(const std::vector<SolutionPoint>& points);
    std::vector<SolutionPoint> points_;
};

/// Keeps exactly the points whose y is not dominated by any other input y;
/// among points with identical y the first by input order wins.
Frontier filter_nondominated(const std::vector<SolutionPoint>& points);

/// Spec-shaped convenience wrapper around Frontier::merge.
std::pair<Frontier, bool> merge_into(Frontier f, const SolutionPoint& p);

} // namespace moplex

#endif
