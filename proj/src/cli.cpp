#include "moplex/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "moplex/errors.hpp"
#include "moplex/io.hpp"

namespace moplex::cli {

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

const std::vector<std::string> kEpsilonAlgorithms = {
    "chalmet", "dominguez-rios", "epsilon-constraint", "kirlik-sayin", "tamby-vanderpooten"};

bool objective_data_integral(const Problem& p) {
    auto integral = [](double v) { return std::floor(v) == v; };
    for (const auto& row : p.objective().matrix) {
        for (double c : row) {
            if (!integral(c)) return false;
        }
    }
    for (double c : p.objective().offsets) {
        if (!integral(c)) return false;
    }
    return true;
}

template <typename T>
std::vector<T> parse_csv_list(const std::string& text, const std::string& flag) {
    std::vector<T> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(static_cast<T>(v));
        } catch (const std::exception&) {
            throw BadConfig(flag + ": cannot parse '" + item + "'");
        }
    }
    if (values.empty()) throw BadConfig(flag + ": empty list");
    return values;
}

std::string joined_algorithm_names() {
    std::string names;
    for (const auto& name : registered_algorithms()) {
        if (!names.empty()) names += ", ";
        names += name;
    }
    return names;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"moplex - multi-objective linear and integer programming meta-solver"};
    std::string instance_path, algorithm, weights_csv, priorities_csv, output_path;
    std::string format = "json";
    std::optional<double> epsilon, time_limit;
    std::optional<long long> solution_limit;
    std::uint64_t seed = 0;
    bool list_algorithms = false;

    app.add_option("--instance", instance_path, "Path to the instance JSON file");
    app.add_option("--algorithm", algorithm, "Algorithm identifier (see --list-algorithms)");
    app.add_option("--epsilon", epsilon, "Strict-inequality slack (default 1; required for non-integer objective data)");
    app.add_option("--time-limit", time_limit, "Wall-clock limit in seconds");
    app.add_option("--solution-limit", solution_limit, "Maximum number of solutions");
    app.add_option("--seed", seed, "Seed for random-weighting");
    app.add_option("--weights", weights_csv, "Comma-separated objective weights (hierarchical)");
    app.add_option("--priorities", priorities_csv, "Comma-separated objective priorities (hierarchical)");
    app.add_option("--output", output_path, "Output path (default: stdout)");
    app.add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--list-algorithms", list_algorithms, "List registered algorithms and exit");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend()); // CLI11 convention
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (list_algorithms) {
        for (const auto& name : registered_algorithms()) out << name << "\n";
        return 0;
    }
    if (instance_path.empty() || algorithm.empty()) {
        err << "error: --instance and --algorithm are required\n";
        return kExitUsage;
    }
    if (!is_algorithm_registered(algorithm)) {
        err << "error: unknown algorithm '" << algorithm
            << "'; valid algorithms: " << joined_algorithm_names() << "\n";
        return kExitUsage;
    }

    std::ifstream in(instance_path);
    if (!in) {
        err << "error: cannot open instance file '" << instance_path << "'\n";
        return kExitInput;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    ResultSet result;
    try {
        const Problem problem = parse_instance(buffer.str());

        AlgorithmConfig cfg;
        if (epsilon) {
            cfg.epsilon = *epsilon;
        } else if (!objective_data_integral(problem)) {
            for (const auto& name : kEpsilonAlgorithms) {
                if (name == algorithm) {
                    err << "error: objective data is not integer-valued; '" << algorithm
                        << "' requires an explicit --epsilon\n";
                    return kExitUsage;
                }
            }
        }
        cfg.time_limit = time_limit;
        cfg.solution_limit = solution_limit;
        cfg.seed = seed;
        if (!weights_csv.empty()) cfg.weights = parse_csv_list<double>(weights_csv, "--weights");
        if (!priorities_csv.empty()) {
            cfg.priorities = parse_csv_list<int>(priorities_csv, "--priorities");
        }

        BundledSolver solver;
        result = optimize(problem, algorithm, cfg, solver);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const MissingConfig& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadConfig& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedDimension& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    const std::string text =
        write_results(result, format == "csv" ? ResultFormat::Csv : ResultFormat::Json);
    if (output_path.empty()) {
        out << text;
    } else {
        std::ofstream f(output_path, std::ios::binary);
        if (!f) {
            err << "error: cannot open output file '" << output_path << "'\n";
            return kExitInput;
        }
        f << text;
    }

    switch (result.status) {
        case SolveStatus::Optimal: return 0;
        case SolveStatus::Infeasible: return 2;
        case SolveStatus::Unbounded: return 3;
        case SolveStatus::TimeLimit: return 4;
        case SolveStatus::OtherError: return 1;
    }
    return 1;
}

} // namespace moplex::cli
