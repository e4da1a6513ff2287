#include "moderato/harness.hpp"
#include "moderato/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace moderato;

std::vector<PolicyKind> parse_policies(const std::string& name) {
    if (name == "all")
        return {PolicyKind::Neutral, PolicyKind::BalancingHard, PolicyKind::BalancingSoft,
                PolicyKind::CommunityHard, PolicyKind::CommunitySoft};
    return {policy_from_string(name)};
}

void print_table(const ExperimentResults& results) {
    std::cout << std::fixed << std::setprecision(2);
    std::cout << std::setw(10) << "policy" << std::setw(16) << "time_err_s" << std::setw(16)
              << "word_err" << std::setw(16) << "n_comm" << '\n';
    for (const PolicySummary& row : results.table) {
        std::cout << std::setw(10) << to_string(row.policy);
        const double cells[][2] = {{row.time_err_mean, row.time_err_std},
                                   {row.word_err_mean, row.word_err_std},
                                   {row.n_comm_mean, row.n_comm_std}};
        for (const auto& cell : cells) {
            std::ostringstream fmt;
            fmt << std::fixed << std::setprecision(2) << cell[0] << " (" << cell[1] << ")";
            std::cout << std::setw(16) << fmt.str();
        }
        std::cout << '\n';
    }
}

struct RunOptions {
    std::string policy = "all";
    int groups = 15;
    int participants = 4;
    double duration = 900.0;
    double window = 300.0;
    double gamma1 = 0.5;
    double gamma2 = 0.5;
    std::string preset = "dominant-one";
    std::uint64_t seed = kDefaultBaseSeed;
    std::string out_dir = "out";
};

int do_run(const RunOptions& opt) {
    ExperimentSpec spec;
    spec.policies = parse_policies(opt.policy);
    spec.groups_per_policy = opt.groups;
    spec.base_seed = opt.seed;
    spec.template_config = preset_config(opt.preset, opt.participants);
    spec.template_config.session_duration_s = opt.duration;
    spec.template_config.window_m_s = opt.window;
    spec.template_config.weights = DominanceWeights(opt.gamma1, opt.gamma2);

    const ExperimentResults results = run_experiments(spec);
    summarize_to_files(results, opt.out_dir);
    print_table(results);
    std::cout << "wrote " << results.records.size() << " conversation logs to " << opt.out_dir
              << '\n';
    return 0;
}

struct StatsOptions {
    std::string file_a;
    std::string column_a;
    std::string file_b; // empty = same file as a
    std::string column_b;
};

int do_test_stats(const StatsOptions& opt) {
    const std::string file_b = opt.file_b.empty() ? opt.file_a : opt.file_b;
    const std::vector<double> a = read_csv_column(opt.file_a, opt.column_a);
    const std::vector<double> b = read_csv_column(file_b, opt.column_b);
    const MannWhitneyResult result = mann_whitney_u(a, b);
    std::cout << "n_a=" << a.size() << " n_b=" << b.size() << " U_a=" << result.u_a
              << " U_b=" << result.u_b << " U=" << result.u << " p=" << std::setprecision(6)
              << result.p << (result.exact ? " (exact)" : " (normal approximation)") << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"moderato: seeded multi-party conversation simulations with a moderating robot"};
    app.set_config("--config", "", "INI-style key=value file; command-line flags override it");
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "Run an experiment sweep and write CSV/JSONL outputs");
    run->add_option("--policy", run_opt.policy, "Policy to run, or 'all'")
        ->check(CLI::IsMember({"N", "BH", "BS", "CH", "CS", "all"}))
        ->capture_default_str();
    run->add_option("--groups", run_opt.groups, "Conversations per policy")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run->add_option("--participants", run_opt.participants, "Group size")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    run->add_option("--duration", run_opt.duration, "Session duration in seconds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run->add_option("--window", run_opt.window, "Moving-window capacity M in seconds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run->add_option("--gamma1", run_opt.gamma1, "Dominance weight on speaking-time share")
        ->capture_default_str();
    run->add_option("--gamma2", run_opt.gamma2, "Dominance weight on word share")
        ->capture_default_str();
    run->add_option("--preset", run_opt.preset, "Group archetype")
        ->check(CLI::IsMember({"dominant-one", "two-cliques"}))
        ->capture_default_str();
    run->add_option("--seed", run_opt.seed, "Base seed for the sweep")->capture_default_str();
    run->add_option("--out", run_opt.out_dir, "Output directory")->capture_default_str();

    StatsOptions stats_opt;
    CLI::App* stats =
        app.add_subcommand("test-stats", "Mann-Whitney U test between two CSV columns");
    stats->add_option("--file-a", stats_opt.file_a, "CSV file for sample a")->required();
    stats->add_option("--column-a", stats_opt.column_a, "Column name for sample a")->required();
    stats->add_option("--file-b", stats_opt.file_b, "CSV file for sample b (default: file-a)");
    stats->add_option("--column-b", stats_opt.column_b, "Column name for sample b")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return do_run(run_opt);
        return do_test_stats(stats_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
