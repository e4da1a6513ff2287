#include "moderato/sim.hpp"

#include "moderato/dialogue_state.hpp"
#include "moderato/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moderato {

namespace {

constexpr double kMinTurnSeconds = 0.5;
constexpr double kMaxTurnSeconds = 60.0;
constexpr std::uint64_t kMetricsStreamSalt = 0x6d657472696373ULL; // "metrics"

} // namespace

void validate(const GroupConfig& config) {
    const int n = config.n();
    if (n < 2)
        throw std::invalid_argument("GroupConfig: need at least 2 participants");
    if (!(config.session_duration_s > 0.0))
        throw std::invalid_argument("GroupConfig: session duration must be positive");
    if (!(config.window_m_s > 0.0))
        throw std::invalid_argument("GroupConfig: window capacity must be positive");
    if (!(config.robot_overhead_s >= 0.0))
        throw std::invalid_argument("GroupConfig: robot overhead must be non-negative");
    if (config.max_repeats < 1)
        throw std::invalid_argument("GroupConfig: max_repeats must be positive");
    for (int i = 0; i < n; ++i) {
        const AgentProfile& p = config.profiles[i];
        if (!(p.extroversion > 0.0) || !(p.mean_turn_duration > 0.0) ||
            !(p.duration_shape > 0.0) || !(p.words_per_second > 0.0))
            throw std::invalid_argument("AgentProfile: parameters must be positive");
        if (p.compliance < 0.0 || p.compliance > 1.0)
            throw std::invalid_argument("AgentProfile: compliance must be in [0,1]");
        if (p.affinity.size() != n)
            throw std::invalid_argument("AgentProfile: affinity vector length mismatch");
        if ((p.affinity.array() < 0.0).any())
            throw std::invalid_argument("AgentProfile: affinity must be non-negative");
        if (p.affinity[i] != 0.0)
            throw std::invalid_argument("AgentProfile: self-affinity must be zero");
    }
}

SpeakerId sample_next_speaker(const std::vector<AgentProfile>& profiles,
                              std::optional<SpeakerId> last_speaker,
                              const Directive& directive, Rng& rng) {
    if (profiles.empty())
        throw std::invalid_argument("sample_next_speaker: no profiles");
    const int n = static_cast<int>(profiles.size());

    std::optional<SpeakerId> excluded;
    if (directive.directed()) {
        const SpeakerId intended = directive.addressee;
        if (std::bernoulli_distribution(profiles[intended].compliance)(rng))
            return intended;
        excluded = intended; // someone else grabs the floor
    }

    std::vector<double> weights(n, 0.0);
    for (int i = 0; i < n; ++i) {
        if (excluded && i == *excluded)
            continue;
        double w = profiles[i].extroversion;
        if (last_speaker)
            w *= 1.0 + profiles[i].affinity[*last_speaker];
        weights[i] = w;
    }
    std::discrete_distribution<int> pick(weights.begin(), weights.end());
    return pick(rng);
}

std::pair<double, long> sample_turn(const AgentProfile& profile, Rng& rng) {
    std::gamma_distribution<double> dist(profile.duration_shape,
                                         profile.mean_turn_duration / profile.duration_shape);
    const double duration = std::clamp(dist(rng), kMinTurnSeconds, kMaxTurnSeconds);
    const long words = std::max(1L, std::lround(duration * profile.words_per_second));
    return {duration, words};
}

TurnLog run_conversation(const GroupConfig& config) {
    validate(config);
    const int n = config.n();
    Rng rng(config.seed);
    // Metric bookkeeping draws from its own stream so that computing the
    // per-turn community count cannot perturb policy or agent behavior.
    Rng metrics_rng(splitmix64(config.seed ^ kMetricsStreamSalt));

    DialogueState state(n, config.window_m_s);
    ModeratorState moderator{{}, 0, config.max_repeats};
    std::optional<Directive> pending; // repeat/readdress to deliver next cycle

    TurnLog log;
    double clock_s = 0.0;
    long index = 0;
    while (clock_s < config.session_duration_s) {
        Directive out;
        if (pending) {
            out = *pending;
            pending.reset();
        } else {
            out = next_addressee(config.policy, state, config.weights, rng);
            moderator.intended =
                out.directed() ? std::optional<SpeakerId>(out.addressee) : std::nullopt;
            moderator.repeat_count = 0;
        }
        clock_s += config.robot_overhead_s; // the robot speaks

        const SpeakerId actual =
            sample_next_speaker(config.profiles, state.last_speaker(), out, rng);
        const auto [duration, words] = sample_turn(config.profiles[actual], rng);
        const Turn turn{actual, duration, words, index++};
        state.record(turn);
        clock_s += duration;

        auto [reaction, next_moderator] = on_turn(config.policy, moderator, actual);
        moderator = next_moderator;
        if (reaction.kind == DirectiveKind::Repeat ||
            reaction.kind == DirectiveKind::ReplyThenReaddress)
            pending = reaction;

        TurnLogEntry entry;
        entry.turn = turn;
        entry.directive = out.kind;
        entry.addressee = out.directed() ? out.addressee : -1;
        entry.window_time_s = state.window().time_totals(n);
        entry.time_err_s = range_error(entry.window_time_s);
        entry.word_err = range_error(state.window().word_totals(n));
        entry.n_comm = community_count(
            louvain(transition_graph(state.transition_counts()), metrics_rng));
        log.push_back(std::move(entry));
    }
    return log;
}

GroupConfig preset_config(const std::string& name, int participants) {
    if (participants < 2)
        throw std::invalid_argument("preset_config: need at least 2 participants");
    const int n = participants;
    AgentProfile base;
    base.affinity = Eigen::VectorXd::Zero(n);

    GroupConfig config;
    config.profiles.assign(n, base);
    if (name == "dominant-one") {
        // One strong extrovert with double-length turns; under the neutral
        // policy this reliably produces a runaway speaker.
        config.profiles[0].extroversion = 4.0;
        config.profiles[0].mean_turn_duration = base.mean_turn_duration * 2.0;
    } else if (name == "two-cliques") {
        // Affinity blocks across the two halves of the group. The affinity
        // is deliberately extreme: left alone, a clique holds the floor for
        // long stretches and the transition graph stays fragmented.
        const int half = (n + 1) / 2;
        const double block_affinity = 220.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                const bool same_block = (i < half) == (j < half);
                if (same_block)
                    config.profiles[i].affinity[j] = block_affinity;
            }
    } else {
        throw std::invalid_argument("unknown preset '" + name +
                                    "' (expected dominant-one or two-cliques)");
    }
    return config;
}

} // namespace moderato
