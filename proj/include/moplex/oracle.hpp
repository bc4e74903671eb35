#ifndef MOPLEX_ORACLE_HPP
#define MOPLEX_ORACLE_HPP

#include <string>
#include <vector>

#include "moplex/dominance.hpp"
#include "moplex/model.hpp"

namespace moplex::oracle {

/// A named test problem together with ground-truth sets computed by this
/// module's own enumeration (never hand-entered).
struct Fixture {
    std::string name;
    Problem problem;
    std::vector<std::vector<double>> expected_frontier;  // MIN convention
    std::vector<std::vector<double>> expected_supported; // MIN convention
};

/// Exact nondominated set by direct lattice enumeration. Requires all
/// variables integer with finite bounds and a lattice of at most 2^22 points.
/// MAX problems are converted internally; output is MIN convention.
Frontier enumerate_frontier(const Problem& p);

/// The subset of enumerate_frontier lying on vertices of conv({y} + R^o_+).
/// Bi-objective problems use a convex-hull sweep; three or more objectives
/// use per-point weighted-sum certification with a small LP.
Frontier enumerate_supported(const Problem& p);

namespace detail {
/// o == 2 lower-hull sweep over a lex-sorted frontier (hull vertices only).
std::vector<SolutionPoint> supported_by_hull_sweep(const std::vector<SolutionPoint>& frontier);
/// General-o certification: y is supported-extreme iff some strictly positive
/// weighting uniquely minimizes it over the frontier (LP feasibility check).
std::vector<SolutionPoint> supported_by_certification(const std::vector<SolutionPoint>& frontier);
} // namespace detail

// Shared fixtures. K1: 3-item bi-objective MAX knapsack. K2: one item,
// capacity 0. K3: tri-objective pick-at-most-one MAX. K4: bi-objective MIN
// with an unsupported middle point [3,3]. k4_supported_middle: the variant
// whose middle point [1,1] is a hull vertex.
Fixture k1();
Fixture k2();
Fixture k3();
Fixture k4();
Fixture k4_supported_middle();

} // namespace moplex::oracle

#endif
