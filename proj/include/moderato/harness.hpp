#pragma once

#include "moderato/policy.hpp"
#include "moderato/sim.hpp"
#include "moderato/stats.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace moderato {

// Default base seed shared by the CLI and the shipped experiment defaults.
inline constexpr std::uint64_t kDefaultBaseSeed = 8;

// A batch of seeded conversations: a group of policies, each run
// groups_per_policy times from per-conversation seeds derived from base_seed.
struct ExperimentSpec {
    std::vector<PolicyKind> policies;
    int groups_per_policy = 15;
    std::uint64_t base_seed = 0;
    GroupConfig template_config; // policy and seed fields are overwritten per run
};

struct ConversationRecord {
    PolicyKind policy = PolicyKind::Neutral;
    int group_index = 0;
    std::uint64_t seed = 0;
    TurnLog log;
    // Per-turn metrics averaged within the conversation; the unit of
    // analysis for all cross-policy statistics.
    double mean_time_err_s = 0.0;
    double mean_word_err = 0.0;
    double mean_n_comm = 0.0;
};

// One row per policy: mean and sample std (over conversations) of the three
// per-conversation metric means.
struct PolicySummary {
    PolicyKind policy = PolicyKind::Neutral;
    int n_groups = 0;
    double time_err_mean = 0.0, time_err_std = 0.0;
    double word_err_mean = 0.0, word_err_std = 0.0;
    double n_comm_mean = 0.0, n_comm_std = 0.0;
};

struct ExperimentResults {
    std::vector<PolicySummary> table;
    std::vector<ConversationRecord> records;
};

enum class Metric { TimeError, WordError, Communities };
std::string to_string(Metric metric);

// Deterministic per-conversation seed.
std::uint64_t conversation_seed(std::uint64_t base_seed, PolicyKind policy, int group_index);

ExperimentResults run_experiments(const ExperimentSpec& spec);

// Per-conversation metric means for one policy, in group order.
std::vector<double> metric_samples(const ExperimentResults& results, PolicyKind policy,
                                   Metric metric);

// Mann-Whitney on the per-conversation means of two policies.
MannWhitneyResult compare_policies(const ExperimentResults& results, PolicyKind a, PolicyKind b,
                                   Metric metric);

// Writes results.csv (metric rows x per-policy mean/std columns),
// pairwise_tests.csv (U and p for every policy pair and metric),
// conversation_means.csv (one column per policy x metric, one row per
// group), per-conversation JSONL logs under logs/, and per-conversation
// per-turn series CSVs under series/. Throws std::runtime_error with the
// offending path on I/O failure.
void summarize_to_files(const ExperimentResults& results, const std::filesystem::path& out_dir);

} // namespace moderato
