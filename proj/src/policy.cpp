#include "moderato/policy.hpp"

#include "moderato/graph.hpp"

#include <stdexcept>
#include <vector>

namespace moderato {

PolicyKind policy_from_string(std::string_view name) {
    if (name == "N")
        return PolicyKind::Neutral;
    if (name == "BH")
        return PolicyKind::BalancingHard;
    if (name == "BS")
        return PolicyKind::BalancingSoft;
    if (name == "CH")
        return PolicyKind::CommunityHard;
    if (name == "CS")
        return PolicyKind::CommunitySoft;
    throw std::invalid_argument("unknown policy '" + std::string(name) +
                                "' (expected N, BH, BS, CH or CS)");
}

std::string to_string(PolicyKind kind) {
    switch (kind) {
    case PolicyKind::Neutral: return "N";
    case PolicyKind::BalancingHard: return "BH";
    case PolicyKind::BalancingSoft: return "BS";
    case PolicyKind::CommunityHard: return "CH";
    case PolicyKind::CommunitySoft: return "CS";
    }
    throw std::logic_error("invalid PolicyKind");
}

bool is_balancing(PolicyKind kind) {
    return kind == PolicyKind::BalancingHard || kind == PolicyKind::BalancingSoft;
}

bool is_community(PolicyKind kind) {
    return kind == PolicyKind::CommunityHard || kind == PolicyKind::CommunitySoft;
}

bool is_hard(PolicyKind kind) {
    return kind == PolicyKind::BalancingHard || kind == PolicyKind::CommunityHard;
}

std::string to_string(DirectiveKind kind) {
    switch (kind) {
    case DirectiveKind::OpenFloor: return "open_floor";
    case DirectiveKind::Address: return "address";
    case DirectiveKind::Repeat: return "repeat";
    case DirectiveKind::ReplyThenReaddress: return "reply_then_readdress";
    case DirectiveKind::Accept: return "accept";
    }
    throw std::logic_error("invalid DirectiveKind");
}

namespace {

SpeakerId pick_uniform(const std::vector<SpeakerId>& candidates, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(rng)];
}

SpeakerId community_addressee(const DialogueState& state, Rng& rng) {
    const Partition partition = louvain(transition_graph(state.transition_counts()), rng);
    const std::optional<SpeakerId> last = state.last_speaker();
    std::vector<SpeakerId> candidates;
    if (last && community_count(partition) > 1) {
        const int last_comm = partition.labels[*last];
        for (SpeakerId s = 0; s < state.n_speakers(); ++s)
            if (partition.labels[s] != last_comm)
                candidates.push_back(s);
    } else {
        // Single community (or nobody has spoken): anyone but the last
        // speaker, which preserves the anti-monopoly intent.
        for (SpeakerId s = 0; s < state.n_speakers(); ++s)
            if (!last || s != *last)
                candidates.push_back(s);
    }
    return pick_uniform(candidates, rng);
}

} // namespace

Directive next_addressee(PolicyKind policy, const DialogueState& state,
                         const DominanceWeights& weights, Rng& rng) {
    switch (policy) {
    case PolicyKind::Neutral:
        return Directive::open_floor();
    case PolicyKind::BalancingHard:
    case PolicyKind::BalancingSoft: {
        const ParticipationShares shares =
            participation_shares(state.window(), state.n_speakers());
        return Directive::address(select_submissive(dominance_scores(shares, weights), rng));
    }
    case PolicyKind::CommunityHard:
    case PolicyKind::CommunitySoft:
        return Directive::address(community_addressee(state, rng));
    }
    throw std::logic_error("invalid PolicyKind");
}

std::pair<Directive, ModeratorState> on_turn(PolicyKind policy, ModeratorState state,
                                             SpeakerId actual) {
    if (!state.intended || *state.intended == actual) {
        state.intended.reset();
        state.repeat_count = 0;
        return {Directive::accept(actual), state};
    }
    if (state.repeat_count + 1 > state.max_repeats) {
        // Give up on the target rather than looping against a non-compliant
        // group forever.
        state.intended.reset();
        state.repeat_count = 0;
        return {Directive::accept(actual), state};
    }
    state.repeat_count += 1;
    const SpeakerId intended = *state.intended;
    if (is_hard(policy))
        return {Directive::repeat(intended), state};
    return {Directive::reply_then_readdress(actual, intended), state};
}

} // namespace moderato
