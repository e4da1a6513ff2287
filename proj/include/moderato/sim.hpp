#pragma once

#include "moderato/dominance.hpp"
#include "moderato/policy.hpp"
#include "moderato/rng.hpp"
#include "moderato/turn.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace moderato {

// Behavioral parameters of one simulated participant. These are synthetic
// stand-ins for real speakers, not claims about human behavior.
struct AgentProfile {
    double extroversion = 1.0;       // relative propensity to self-select on open floor
    double compliance = 0.8;         // probability of answering when directly addressed
    double mean_turn_duration = 8.0; // seconds
    double duration_shape = 4.0;     // gamma shape; larger = less variable turns
    double words_per_second = 2.0;
    Eigen::VectorXd affinity;        // length n, affinity[self] = 0; tendency to follow each speaker
};

struct GroupConfig {
    std::vector<AgentProfile> profiles;
    double session_duration_s = 900.0;
    double window_m_s = 300.0;
    double robot_overhead_s = 8.0; // clock cost of each robot utterance
    int max_repeats = 3;
    PolicyKind policy = PolicyKind::Neutral;
    DominanceWeights weights;
    std::uint64_t seed = 0;

    int n() const { return static_cast<int>(profiles.size()); }
};

// Throws std::invalid_argument if the config violates its invariants.
void validate(const GroupConfig& config);

// One logged conversation cycle: the robot's outgoing directive, the turn it
// elicited, and the per-turn metrics behind the plotted series.
struct TurnLogEntry {
    Turn turn;
    DirectiveKind directive = DirectiveKind::OpenFloor; // robot utterance that prompted the turn
    SpeakerId addressee = -1;                           // intended addressee, -1 for open floor
    double time_err_s = 0.0;                            // max-min window speaking time
    double word_err = 0.0;                              // max-min window word count
    int n_comm = 0;                                     // communities in the transition graph
    Eigen::VectorXd window_time_s;                      // per-speaker window seconds
};

using TurnLog = std::vector<TurnLogEntry>;

// Samples who takes the next turn. A directed question goes to its addressee
// with their compliance probability; otherwise (and on an open floor) speaker
// i is drawn with weight extroversion_i * (1 + affinity_i[last_speaker]).
SpeakerId sample_next_speaker(const std::vector<AgentProfile>& profiles,
                              std::optional<SpeakerId> last_speaker,
                              const Directive& directive, Rng& rng);

// Draws (duration, words): duration ~ Gamma(shape, mean/shape) clamped to
// [0.5 s, 60 s]; words = round(duration * words_per_second), at least 1.
std::pair<double, long> sample_turn(const AgentProfile& profile, Rng& rng);

// Runs one seeded conversation to completion. Deterministic: identical
// configs (including seed) produce identical logs.
TurnLog run_conversation(const GroupConfig& config);

// Named group archetypes:
//  - "dominant-one": one strong extrovert with double-length turns.
//  - "two-cliques": affinity blocks splitting the group into two halves.
GroupConfig preset_config(const std::string& name, int participants = 4);

} // namespace moderato
