#include "moplex/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "moplex/errors.hpp"

namespace moplex {

namespace {

using Clock = std::chrono::steady_clock;

std::map<std::string, AlgorithmFn>& registry() {
    static std::map<std::string, AlgorithmFn> algorithms = {
        {"chalmet", chalmet},
        {"dichotomy", dichotomy},
        {"dominguez-rios", dominguez_rios},
        {"epsilon-constraint", epsilon_constraint},
        {"hierarchical", hierarchical},
        {"kirlik-sayin", kirlik_sayin},
        {"lexicographic", lexicographic},
        {"random-weighting", random_weighting},
        {"sandwiching", sandwiching},
        {"tamby-vanderpooten", tamby_vanderpooten},
    };
    return algorithms;
}

// Counts every solver-contract invocation and enforces the global deadline by
// shrinking each per-solve budget to the time remaining.
class CountingSolver final : public Solver {
public:
    CountingSolver(Solver& inner, std::optional<double> time_limit) : inner_(inner) {
        if (time_limit) {
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(*time_limit));
        }
    }

    ScalarResult solve(const ScalarSubproblem& sub, std::optional<double> time_limit) override {
        std::optional<double> budget = time_limit;
        if (deadline_) {
            const double remaining =
                std::chrono::duration<double>(*deadline_ - Clock::now()).count();
            if (remaining <= 0.0) return {SolveStatus::TimeLimit, {}, 0.0};
            budget = budget ? std::min(*budget, remaining) : remaining;
        }
        ++count_;
        return inner_.solve(sub, budget);
    }

    long long count() const { return count_; }

private:
    Solver& inner_;
    std::optional<Clock::time_point> deadline_;
    long long count_ = 0;
};

void validate_config(const AlgorithmConfig& cfg, int o) {
    if (!(cfg.epsilon > 0.0)) throw BadConfig("epsilon must be strictly positive");
    if (!(cfg.sandwich_gap > 0.0)) throw BadConfig("sandwich_gap must be strictly positive");
    if (cfg.weights) {
        if (static_cast<int>(cfg.weights->size()) != o) {
            throw BadConfig("weights length must equal the objective count");
        }
        for (double w : *cfg.weights) {
            if (!(w > 0.0)) throw BadConfig("weights must be strictly positive");
        }
    }
    if (cfg.priorities && static_cast<int>(cfg.priorities->size()) != o) {
        throw BadConfig("priorities length must equal the objective count");
    }
}

} // namespace

void register_algorithm(const std::string& identifier, AlgorithmFn implementation) {
    auto [it, inserted] = registry().emplace(identifier, std::move(implementation));
    (void)it;
    if (!inserted) {
        throw DuplicateIdentifier("algorithm '" + identifier + "' is already registered");
    }
}

std::vector<std::string> registered_algorithms() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) {
        (void)fn;
        names.push_back(name);
    }
    return names;
}

bool is_algorithm_registered(const std::string& identifier) {
    return registry().count(identifier) > 0;
}

ResultSet optimize(const Problem& p, const std::string& algorithm, const AlgorithmConfig& cfg,
                   Solver& solver) {
    validate_problem(p);
    validate_config(cfg, p.num_objectives());
    const auto it = registry().find(algorithm);
    if (it == registry().end()) {
        throw UnknownAlgorithm("unknown algorithm '" + algorithm + "'");
    }

    const bool maximization = p.sense() == ObjectiveSense::Max;
    const Problem min_problem = maximization ? negate_objective(p) : p;

    CountingSolver counting(solver, cfg.time_limit);
    const auto start = Clock::now();
    AlgorithmResult raw = it->second(min_problem, cfg, counting);
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();

    Frontier frontier = filter_nondominated(raw.points);
    ResultSet out;
    out.status = raw.status;
    out.points = frontier.points();
    if (maximization) {
        for (auto& pt : out.points) {
            for (double& v : pt.y) v = (v == 0.0) ? 0.0 : -v;
        }
    }
    out.stats.subproblem_count = counting.count();
    out.stats.wall_time = elapsed;
    for (const auto& v : p.variables()) out.variable_names.push_back(v.name);
    out.objective_count = p.num_objectives();
    return out;
}

} // namespace moplex
