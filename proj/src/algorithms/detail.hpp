#ifndef MOPLEX_ALGORITHMS_DETAIL_HPP
#define MOPLEX_ALGORITHMS_DETAIL_HPP

#include <cstdint>
#include <vector>

#include "moplex/algorithms.hpp"
#include "moplex/subproblem.hpp"

namespace moplex::algo_detail {

std::vector<double> unit_weights(int o, int k);
std::vector<double> ones(int o);
std::vector<double> infinities(int o);

SolutionPoint make_point(const Problem& p, const std::vector<double>& x);

ScalarResult solve_weighted(const Problem& p, Solver& solver, const std::vector<double>& w,
                            const std::vector<double>& upper,
                            const std::vector<LinearRow>& extra = {});

/// Two-stage lexicographic solve: min f_k under the given objective upper
/// bounds, then min sum_j f_j with f_k pinned at the stage-1 optimum. The
/// second stage guarantees the returned point is efficient.
struct TwoStageResult {
    SolveStatus status = SolveStatus::OtherError;
    SolutionPoint point;
    double stage1_value = 0.0;
};
TwoStageResult two_stage_min(const Problem& p, Solver& solver, int k,
                             const std::vector<double>& upper);

/// Per-objective maxima (anti-ideal), used to close search boxes from above.
IdealPointResult compute_anti_ideal_point(const Problem& p, Solver& solver);

AlgorithmResult finalize(SolveStatus status, const std::vector<SolutionPoint>& points);
AlgorithmResult partial(SolveStatus status, const Frontier& frontier);

/// Restricts a mutually nondominated, lex-sorted point set to the vertices of
/// conv({y} + R^o_+). Weighted-sum solvers may return points interior to a
/// hull face when the optimum is not unique; the supported-set algorithms
/// must not report those.
std::vector<SolutionPoint> hull_vertices_only(const std::vector<SolutionPoint>& points);

/// Counter-based deterministic generator (splitmix64 finalizer); identical
/// output across platforms for a given (seed, counter...) tuple.
std::uint64_t mix64(std::uint64_t x);
double uniform01(std::uint64_t seed, std::uint64_t a, std::uint64_t b);
/// Uniform sample on the unit simplex via exponential spacings; all
/// components strictly positive.
std::vector<double> sample_simplex(std::uint64_t seed, std::uint64_t iteration, int o);

} // namespace moplex::algo_detail

#endif
