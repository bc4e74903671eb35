#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "moplex/algorithms.hpp"
#include "moplex/errors.hpp"
#include "moplex/oracle.hpp"
#include "support/enumeration_solver.hpp"
#include "support/random_instances.hpp"
#include "support/test_problems.hpp"

using namespace moplex;

namespace {

std::vector<std::vector<double>> ys(const std::vector<SolutionPoint>& pts) {
    std::vector<std::vector<double>> out;
    for (const auto& p : pts) out.push_back(p.y);
    return out;
}

Problem k1_min() { return negate_objective(oracle::k1().problem); }
Problem k2_min() { return negate_objective(oracle::k2().problem); }
Problem k3_min() { return negate_objective(oracle::k3().problem); }

const std::vector<std::vector<double>> kK1Frontier = {{-9, -7}, {-8, -8}};

using AlgoFn = AlgorithmResult (*)(const Problem&, const AlgorithmConfig&, Solver&);

const std::vector<std::pair<const char*, AlgoFn>> kCompleteSet = {
    {"chalmet", chalmet},
    {"epsilon-constraint", epsilon_constraint},
    {"kirlik-sayin", kirlik_sayin},
    {"tamby-vanderpooten", tamby_vanderpooten},
    {"dominguez-rios", dominguez_rios},
};

const std::vector<std::pair<const char*, AlgoFn>> kAnyDimension = {
    {"kirlik-sayin", kirlik_sayin},
    {"tamby-vanderpooten", tamby_vanderpooten},
    {"dominguez-rios", dominguez_rios},
    {"lexicographic", lexicographic},
    {"random-weighting", random_weighting},
    {"sandwiching", sandwiching},
};

} // namespace

TEST_CASE("compute_ideal_point on k1 and edge fixtures") {
    BundledSolver solver;
    auto ideal = compute_ideal_point(k1_min(), solver);
    REQUIRE(ideal.status == SolveStatus::Optimal);
    CHECK(ideal.values == std::vector<double>{-9, -8});

    auto single = compute_ideal_point(k2_min(), solver);
    REQUIRE(single.status == SolveStatus::Optimal);
    CHECK(single.values == std::vector<double>{0, 0});

    CHECK(compute_ideal_point(testing::infeasible_fixture(), solver).status ==
          SolveStatus::Infeasible);
    CHECK(compute_ideal_point(testing::unbounded_fixture(), solver).status ==
          SolveStatus::Unbounded);
}

TEST_CASE("minimum-complete-set algorithms reproduce the oracle frontier on k1") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    for (const auto& [name, fn] : kCompleteSet) {
        CAPTURE(name);
        auto res = fn(k1_min(), cfg, solver);
        REQUIRE(res.status == SolveStatus::Optimal);
        CHECK(ys(res.points) == kK1Frontier);
    }
}

TEST_CASE("three-objective algorithms reproduce the oracle frontier on k3") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    const auto expected = oracle::k3().expected_frontier;
    for (AlgoFn fn : {kirlik_sayin, tamby_vanderpooten, dominguez_rios}) {
        auto res = fn(k3_min(), cfg, solver);
        REQUIRE(res.status == SolveStatus::Optimal);
        CHECK(ys(res.points) == expected);
    }
}

TEST_CASE("every algorithm reports INFEASIBLE with an empty set on the infeasible fixture") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    cfg.weights = std::vector<double>{1.0, 1.0};
    cfg.priorities = std::vector<int>{2, 1};
    for (AlgoFn fn : {lexicographic, hierarchical, dichotomy, epsilon_constraint, chalmet,
                      kirlik_sayin, tamby_vanderpooten, dominguez_rios, random_weighting,
                      sandwiching}) {
        auto res = fn(testing::infeasible_fixture(), cfg, solver);
        CHECK(res.status == SolveStatus::Infeasible);
        CHECK(res.points.empty());
    }
}

TEST_CASE("unbounded anchors give UNBOUNDED with an empty set") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    cfg.weights = std::vector<double>{1.0, 1.0};
    cfg.priorities = std::vector<int>{2, 1};
    for (AlgoFn fn : {lexicographic, hierarchical, dichotomy, epsilon_constraint, chalmet,
                      kirlik_sayin, tamby_vanderpooten, dominguez_rios, random_weighting,
                      sandwiching}) {
        auto res = fn(testing::unbounded_fixture(), cfg, solver);
        CHECK(res.status == SolveStatus::Unbounded);
        CHECK(res.points.empty());
    }
}

TEST_CASE("lexicographic permutations on k1") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    auto res = lexicographic(k1_min(), cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(ys(res.points) == kK1Frontier); // lexmin(1,2) and lexmin(2,1)

    cfg.all_permutations = false;
    auto single = lexicographic(k1_min(), cfg, solver);
    REQUIRE(single.status == SolveStatus::Optimal);
    CHECK(ys(single.points) == std::vector<std::vector<double>>{{-9, -7}});
}

TEST_CASE("lexicographic collapses duplicate objectives to one point") {
    std::vector<VariableSpec> vars = {{"x1", 0.0, 1.0, VarKind::Binary},
                                      {"x2", 0.0, 1.0, VarKind::Binary}};
    VectorObjective obj;
    obj.matrix = {{-1.0, -2.0}, {-1.0, -2.0}};
    obj.offsets = {0.0, 0.0};
    Problem p(std::move(vars), {}, std::move(obj));
    BundledSolver solver;
    AlgorithmConfig cfg;
    auto res = lexicographic(p, cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(res.points.size() == 1);
    CHECK(res.points[0].y == std::vector<double>{-3, -3});
}

TEST_CASE("hierarchical follows the priority order") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    cfg.weights = std::vector<double>{1.0, 1.0};
    cfg.priorities = std::vector<int>{2, 1};
    auto res = hierarchical(k1_min(), cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(ys(res.points) == std::vector<std::vector<double>>{{-9, -7}});
}

TEST_CASE("hierarchical with equal priorities returns a min-sum point") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    cfg.weights = std::vector<double>{1.0, 1.0};
    cfg.priorities = std::vector<int>{1, 1};
    auto res = hierarchical(k1_min(), cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    REQUIRE(res.points.size() == 1);
    const auto& y = res.points[0].y;
    CHECK(y[0] + y[1] == doctest::Approx(-16.0)); // both frontier points tie
    CHECK((y == kK1Frontier[0] || y == kK1Frontier[1]));
    // deterministic tie-break: two runs agree
    auto again = hierarchical(k1_min(), cfg, solver);
    CHECK(ys(again.points) == ys(res.points));
}

TEST_CASE("hierarchical requires weights and priorities") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    CHECK_THROWS_AS(hierarchical(k1_min(), cfg, solver), MissingConfig);
    cfg.weights = std::vector<double>{1.0, 1.0};
    CHECK_THROWS_AS(hierarchical(k1_min(), cfg, solver), MissingConfig);
}

TEST_CASE("dichotomy on the continuous L1 fixture") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    auto res = dichotomy(testing::l1(), cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(ys(res.points) == std::vector<std::vector<double>>{{0, 1}, {1, 0}});
}

TEST_CASE("dichotomy returns the supported extremes of k1") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    auto res = dichotomy(k1_min(), cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(ys(res.points) == kK1Frontier);
}

TEST_CASE("bi-objective algorithms reject other dimensions") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    CHECK_THROWS_AS(dichotomy(k3_min(), cfg, solver), UnsupportedDimension);
    CHECK_THROWS_AS(epsilon_constraint(k3_min(), cfg, solver), UnsupportedDimension);
    CHECK_THROWS_AS(chalmet(k3_min(), cfg, solver), UnsupportedDimension);
}

TEST_CASE("epsilon-constraint sweep on k1 and k2") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    auto res = epsilon_constraint(k1_min(), cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(ys(res.points) == kK1Frontier);

    auto empty = epsilon_constraint(k2_min(), cfg, solver);
    REQUIRE(empty.status == SolveStatus::Optimal);
    CHECK(ys(empty.points) == std::vector<std::vector<double>>{{0, 0}});
}

TEST_CASE("epsilon-constraint honors the solution limit and stays monotone") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    cfg.solution_limit = 1;
    auto limited = epsilon_constraint(k1_min(), cfg, solver);
    REQUIRE(limited.points.size() == 1);
    CHECK((ys(limited.points)[0] == kK1Frontier[0] || ys(limited.points)[0] == kK1Frontier[1]));

    std::vector<std::vector<double>> previous;
    for (long long limit = 1; limit <= 3; ++limit) {
        cfg.solution_limit = limit;
        auto res = epsilon_constraint(k1_min(), cfg, solver);
        for (const auto& y : previous) {
            CHECK(std::find(ys(res.points).begin(), ys(res.points).end(), y) !=
                  ys(res.points).end());
        }
        previous = ys(res.points);
    }
}

TEST_CASE("chalmet solves the k1 frontier and exhausts single-point problems in 3 solves") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    auto res = chalmet(k1_min(), cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(ys(res.points) == kK1Frontier);
    // The 3-solve count is pinned through driver stats in test_driver.
}

TEST_CASE("decomposition algorithms handle single-point frontiers") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    for (AlgoFn fn : {kirlik_sayin, tamby_vanderpooten, dominguez_rios}) {
        auto res = fn(k2_min(), cfg, solver);
        REQUIRE(res.status == SolveStatus::Optimal);
        CHECK(ys(res.points) == std::vector<std::vector<double>>{{0, 0}});
    }
}

TEST_CASE("random weighting stays on the supported frontier and is deterministic") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    cfg.seed = 42;
    auto res = random_weighting(k1_min(), cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    for (const auto& y : ys(res.points)) {
        CHECK((y == kK1Frontier[0] || y == kK1Frontier[1]));
    }
    auto replay = random_weighting(k1_min(), cfg, solver);
    CHECK(ys(replay.points) == ys(res.points));

    cfg.seed = 43;
    auto other_seed = random_weighting(k1_min(), cfg, solver);
    for (const auto& y : ys(other_seed.points)) {
        CHECK((y == kK1Frontier[0] || y == kK1Frontier[1]));
    }

    cfg.solution_limit = 0;
    auto no_work = random_weighting(k1_min(), cfg, solver);
    CHECK(no_work.status == SolveStatus::OtherError);
    CHECK(no_work.points.empty());
}

TEST_CASE("sandwiching closes the gap on L1 after the (1,1) solve") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    auto res = sandwiching(testing::l1(), cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(ys(res.points) == std::vector<std::vector<double>>{{0, 1}, {1, 0}});
}

TEST_CASE("sandwiching returns the supported extremes of k1") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    auto res = sandwiching(k1_min(), cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(ys(res.points) == kK1Frontier);
}

TEST_CASE("sandwiching collapses duplicated objectives to a single point") {
    std::vector<VariableSpec> vars = {{"x1", 0.0, 1.0, VarKind::Binary},
                                      {"x2", 0.0, 1.0, VarKind::Binary}};
    LinearRow cap;
    cap.coefficients = {{0, 1.0}, {1, 1.0}};
    cap.sense = RowSense::LessEqual;
    cap.rhs = 1.0;
    VectorObjective obj;
    obj.matrix = {{-2.0, -1.0}, {-2.0, -1.0}};
    obj.offsets = {0.0, 0.0};
    Problem p(std::move(vars), {cap}, std::move(obj));
    BundledSolver solver;
    AlgorithmConfig cfg;
    auto res = sandwiching(p, cfg, solver);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(res.points.size() == 1);
    CHECK(res.points[0].y == std::vector<double>{-2, -2});
}

TEST_CASE("universal contract: outputs are feasible, consistent, and nondominated") {
    BundledSolver solver;
    AlgorithmConfig cfg;
    for (const auto& [name, fn] : kAnyDimension) {
        CAPTURE(name);
        for (const Problem& p : {k1_min(), k2_min(), k3_min()}) {
            auto res = fn(p, cfg, solver);
            REQUIRE(res.status == SolveStatus::Optimal);
            for (const auto& pt : res.points) {
                const auto y = evaluate_objective(p, pt.x);
                for (std::size_t k = 0; k < y.size(); ++k) {
                    CHECK(std::abs(y[k] - pt.y[k]) <= 1e-6);
                }
                for (int j = 0; j < p.num_variables(); ++j) {
                    const auto& v = p.variables()[j];
                    CHECK(pt.x[j] >= v.lower - 1e-6);
                    CHECK(pt.x[j] <= v.upper + 1e-6);
                    if (v.kind != VarKind::Continuous) {
                        CHECK(std::abs(pt.x[j] - std::round(pt.x[j])) <= 1e-6);
                    }
                }
            }
            auto filtered = filter_nondominated(res.points);
            CHECK(ys(filtered.points()) == ys(res.points));
        }
    }
}

TEST_CASE("supported-set methods drop points interior to a hull face") {
    // All size-m picks share c1 + c2 = 21m, so hull faces carry many colinear
    // frontier points; the weighted solves are free to return any of them.
    std::vector<VariableSpec> vars;
    for (int j = 0; j < 6; ++j) {
        vars.push_back({"x" + std::to_string(j + 1), 0.0, 1.0, VarKind::Binary});
    }
    LinearRow cap;
    const std::vector<double> weights = {4, 9, 2, 11, 7, 5};
    for (int j = 0; j < 6; ++j) cap.coefficients[j] = weights[j];
    cap.sense = RowSense::LessEqual;
    cap.rhs = 19.0;
    VectorObjective obj;
    obj.sense = ObjectiveSense::Max;
    obj.matrix.push_back({3, 12, 7, 18, 9, 2});
    obj.matrix.push_back({18, 9, 14, 3, 12, 19});
    obj.offsets = {0.0, 0.0};
    Problem p = negate_objective(Problem(std::move(vars), {cap}, std::move(obj)));

    const Frontier supported = oracle::enumerate_supported(p);
    std::vector<std::vector<double>> expected;
    for (const auto& pt : supported.points()) expected.push_back(pt.y);
    BundledSolver solver;
    AlgorithmConfig cfg;
    for (AlgoFn fn : {dichotomy, sandwiching}) {
        auto res = fn(p, cfg, solver);
        REQUIRE(res.status == SolveStatus::Optimal);
        CHECK(ys(res.points) == expected);
    }
}

TEST_CASE("anti-correlated knapsacks: exact sets across a small batch") {
    // c2 = 21 - c1 makes every size-m pick hit the line y1 + y2 = -21m, the
    // worst case for colinearity handling.
    BundledSolver solver;
    AlgorithmConfig cfg;
    for (std::uint64_t seed = 50; seed < 60; ++seed) {
        testing::Rng rng(seed);
        const int n = 10;
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
        obj.sense = ObjectiveSense::Min;
        std::vector<double> c1(n), c2(n);
        for (int j = 0; j < n; ++j) {
            c1[j] = -static_cast<double>(rng.uniform(1, 20));
            c2[j] = -21.0 - c1[j];
        }
        obj.matrix = {c1, c2};
        obj.offsets = {0.0, 0.0};
        Problem p(std::move(vars), {cap}, std::move(obj));

        const Frontier frontier = oracle::enumerate_frontier(p);
        std::vector<std::vector<double>> expected;
        for (const auto& pt : frontier.points()) expected.push_back(pt.y);
        for (const auto& [name, fn] : kCompleteSet) {
            CAPTURE(name);
            CAPTURE(seed);
            auto res = fn(p, cfg, solver);
            CHECK(ys(res.points) == expected);
        }
        const Frontier supported = oracle::enumerate_supported(p);
        std::vector<std::vector<double>> expected_supported;
        for (const auto& pt : supported.points()) expected_supported.push_back(pt.y);
        for (AlgoFn fn : {dichotomy, sandwiching}) {
            CAPTURE(seed);
            auto res = fn(p, cfg, solver);
            CHECK(ys(res.points) == expected_supported);
        }
    }
}

TEST_CASE("raising the random-weighting limit never loses a point") {
    BundledSolver solver;
    std::vector<std::vector<double>> previous;
    for (long long limit = 3; limit <= 12; limit += 3) {
        AlgorithmConfig cfg;
        cfg.seed = 5;
        cfg.solution_limit = limit;
        auto res = random_weighting(k1_min(), cfg, solver);
        const auto current = ys(res.points);
        for (const auto& y : previous) {
            CHECK(std::find(current.begin(), current.end(), y) != current.end());
        }
        previous = current;
    }
}

TEST_CASE("general integer variables and objective offsets flow through the stack") {
    // min (3x1 - 2x2 + 10, x2 - x1 - 4) over 0 <= x1 <= 3, 0 <= x2 <= 4,
    // x1 + x2 <= 5, integers.
    std::vector<VariableSpec> vars = {{"x1", 0.0, 3.0, VarKind::Integer},
                                      {"x2", 0.0, 4.0, VarKind::Integer}};
    LinearRow cap;
    cap.coefficients = {{0, 1.0}, {1, 1.0}};
    cap.sense = RowSense::LessEqual;
    cap.rhs = 5.0;
    VectorObjective obj;
    obj.matrix = {{3.0, -2.0}, {-1.0, 1.0}};
    obj.offsets = {10.0, -4.0};
    obj.sense = ObjectiveSense::Min;
    Problem p(std::move(vars), {cap}, std::move(obj));

    const Frontier frontier = oracle::enumerate_frontier(p);
    std::vector<std::vector<double>> expected;
    for (const auto& pt : frontier.points()) expected.push_back(pt.y);
    REQUIRE(expected.size() >= 3);

    BundledSolver solver;
    AlgorithmConfig cfg;
    for (const auto& [name, fn] : kCompleteSet) {
        CAPTURE(name);
        auto res = fn(p, cfg, solver);
        REQUIRE(res.status == SolveStatus::Optimal);
        CHECK(ys(res.points) == expected);
    }
    const Frontier supported = oracle::enumerate_supported(p);
    std::vector<std::vector<double>> expected_supported;
    for (const auto& pt : supported.points()) expected_supported.push_back(pt.y);
    for (AlgoFn fn : {dichotomy, sandwiching}) {
        auto res = fn(p, cfg, solver);
        REQUIRE(res.status == SolveStatus::Optimal);
        CHECK(ys(res.points) == expected_supported);
    }
}

TEST_CASE("the enumeration solver yields the same frontiers as the bundled solver") {
    testing::EnumerationSolver enumeration;
    BundledSolver bundled;
    AlgorithmConfig cfg;
    cfg.weights = std::vector<double>{1.0, 1.0};
    cfg.priorities = std::vector<int>{2, 1};
    for (AlgoFn fn : {lexicographic, hierarchical, dichotomy, epsilon_constraint, chalmet,
                      kirlik_sayin, tamby_vanderpooten, dominguez_rios, random_weighting,
                      sandwiching}) {
        auto a = fn(k1_min(), cfg, bundled);
        auto b = fn(k1_min(), cfg, enumeration);
        CHECK(ys(a.points) == ys(b.points));
    }
    for (AlgoFn fn : {kirlik_sayin, tamby_vanderpooten, dominguez_rios, sandwiching}) {
        auto a = fn(k3_min(), cfg, bundled);
        auto b = fn(k3_min(), cfg, enumeration);
        CHECK(ys(a.points) == ys(b.points));
    }
}
