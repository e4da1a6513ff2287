#include "moderato/harness.hpp"

#include "moderato/io.hpp"
#include "moderato/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace moderato {

namespace {

double mean_of(const std::vector<double>& values) {
    if (values.empty())
        return 0.0;
    double sum = 0.0;
    for (double v : values)
        sum += v;
    return sum / static_cast<double>(values.size());
}

double sample_std(const std::vector<double>& values) {
    if (values.size() < 2)
        return 0.0;
    const double mean = mean_of(values);
    double sq = 0.0;
    for (double v : values)
        sq += (v - mean) * (v - mean);
    return std::sqrt(sq / static_cast<double>(values.size() - 1));
}

std::string run_tag(PolicyKind policy, int group_index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s_g%02d", to_string(policy).c_str(), group_index);
    return buf;
}

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    out.precision(17);
    return out;
}

} // namespace

std::string to_string(Metric metric) {
    switch (metric) {
    case Metric::TimeError: return "time_err_s";
    case Metric::WordError: return "word_err";
    case Metric::Communities: return "n_comm";
    }
    throw std::invalid_argument("to_string: bad Metric");
}

std::uint64_t conversation_seed(std::uint64_t base_seed, PolicyKind policy, int group_index) {
    std::uint64_t s = splitmix64(base_seed);
    s = splitmix64(s + static_cast<std::uint64_t>(policy) + 1);
    s = splitmix64(s + static_cast<std::uint64_t>(group_index) + 1);
    return s;
}

ExperimentResults run_experiments(const ExperimentSpec& spec) {
    if (spec.groups_per_policy < 0)
        throw std::invalid_argument("run_experiments: negative groups_per_policy");
    ExperimentResults results;
    for (PolicyKind policy : spec.policies) {
        std::vector<double> time_means, word_means, comm_means;
        for (int g = 0; g < spec.groups_per_policy; ++g) {
            GroupConfig config = spec.template_config;
            config.policy = policy;
            config.seed = conversation_seed(spec.base_seed, policy, g);
            validate(config);

            ConversationRecord record;
            record.policy = policy;
            record.group_index = g;
            record.seed = config.seed;
            record.log = run_conversation(config);

            double time_sum = 0.0, word_sum = 0.0, comm_sum = 0.0;
            for (const TurnLogEntry& entry : record.log) {
                time_sum += entry.time_err_s;
                word_sum += entry.word_err;
                comm_sum += entry.n_comm;
            }
            const double n_turns = static_cast<double>(std::max<std::size_t>(record.log.size(), 1));
            record.mean_time_err_s = time_sum / n_turns;
            record.mean_word_err = word_sum / n_turns;
            record.mean_n_comm = comm_sum / n_turns;

            time_means.push_back(record.mean_time_err_s);
            word_means.push_back(record.mean_word_err);
            comm_means.push_back(record.mean_n_comm);
            results.records.push_back(std::move(record));
        }
        PolicySummary row;
        row.policy = policy;
        row.n_groups = spec.groups_per_policy;
        row.time_err_mean = mean_of(time_means);
        row.time_err_std = sample_std(time_means);
        row.word_err_mean = mean_of(word_means);
        row.word_err_std = sample_std(word_means);
        row.n_comm_mean = mean_of(comm_means);
        row.n_comm_std = sample_std(comm_means);
        results.table.push_back(row);
    }
    return results;
}

std::vector<double> metric_samples(const ExperimentResults& results, PolicyKind policy,
                                   Metric metric) {
    std::vector<double> samples;
    for (const ConversationRecord& record : results.records) {
        if (record.policy != policy)
            continue;
        switch (metric) {
        case Metric::TimeError: samples.push_back(record.mean_time_err_s); break;
        case Metric::WordError: samples.push_back(record.mean_word_err); break;
        case Metric::Communities: samples.push_back(record.mean_n_comm); break;
        }
    }
    return samples;
}

MannWhitneyResult compare_policies(const ExperimentResults& results, PolicyKind a, PolicyKind b,
                                   Metric metric) {
    return mann_whitney_u(metric_samples(results, a, metric), metric_samples(results, b, metric));
}

void summarize_to_files(const ExperimentResults& results, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::filesystem::create_directories(out_dir / "logs");
    std::filesystem::create_directories(out_dir / "series");

    const Metric metrics[] = {Metric::TimeError, Metric::WordError, Metric::Communities};

    {
        std::ofstream out = open_csv(out_dir / "results.csv");
        out << "metric";
        for (const PolicySummary& row : results.table)
            out << ',' << to_string(row.policy) << "_mean," << to_string(row.policy) << "_std";
        out << '\n';
        if (!results.table.empty()) {
            for (Metric metric : metrics) {
                out << to_string(metric);
                for (const PolicySummary& row : results.table) {
                    switch (metric) {
                    case Metric::TimeError:
                        out << ',' << row.time_err_mean << ',' << row.time_err_std;
                        break;
                    case Metric::WordError:
                        out << ',' << row.word_err_mean << ',' << row.word_err_std;
                        break;
                    case Metric::Communities:
                        out << ',' << row.n_comm_mean << ',' << row.n_comm_std;
                        break;
                    }
                }
                out << '\n';
            }
        }
    }

    {
        std::ofstream out = open_csv(out_dir / "pairwise_tests.csv");
        out << "metric,policy_a,policy_b,u,p,exact\n";
        for (Metric metric : metrics)
            for (std::size_t i = 0; i < results.table.size(); ++i)
                for (std::size_t j = i + 1; j < results.table.size(); ++j) {
                    const PolicyKind a = results.table[i].policy;
                    const PolicyKind b = results.table[j].policy;
                    const MannWhitneyResult test = compare_policies(results, a, b, metric);
                    out << to_string(metric) << ',' << to_string(a) << ',' << to_string(b) << ','
                        << test.u << ',' << test.p << ',' << (test.exact ? 1 : 0) << '\n';
                }
    }

    {
        std::ofstream out = open_csv(out_dir / "conversation_means.csv");
        out << "group";
        for (const PolicySummary& row : results.table)
            for (Metric metric : metrics)
                out << ',' << to_string(row.policy) << '_' << to_string(metric);
        out << '\n';
        int max_groups = 0;
        for (const PolicySummary& row : results.table)
            max_groups = std::max(max_groups, row.n_groups);
        for (int g = 0; g < max_groups; ++g) {
            out << g;
            for (const PolicySummary& row : results.table) {
                const ConversationRecord* record = nullptr;
                for (const ConversationRecord& candidate : results.records)
                    if (candidate.policy == row.policy && candidate.group_index == g)
                        record = &candidate;
                for (Metric metric : metrics) {
                    out << ',';
                    if (!record)
                        continue;
                    switch (metric) {
                    case Metric::TimeError: out << record->mean_time_err_s; break;
                    case Metric::WordError: out << record->mean_word_err; break;
                    case Metric::Communities: out << record->mean_n_comm; break;
                    }
                }
            }
            out << '\n';
        }
    }

    for (const ConversationRecord& record : results.records) {
        const std::string tag = run_tag(record.policy, record.group_index);
        write_turn_log_jsonl(record.log, out_dir / "logs" / (tag + ".jsonl"));
        int n_speakers = 0;
        for (const TurnLogEntry& entry : record.log)
            n_speakers = std::max(n_speakers, static_cast<int>(entry.window_time_s.size()));
        write_series_csv(record.log, std::max(n_speakers, 1), out_dir / "series" / (tag + ".csv"));
    }
}

} // namespace moderato
