#pragma once

#include "moderato/dialogue_state.hpp"
#include "moderato/dominance.hpp"
#include "moderato/rng.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace moderato {

// The five addressing policies. Fixed for a whole conversation.
enum class PolicyKind { Neutral, BalancingHard, BalancingSoft, CommunityHard, CommunitySoft };

// Short names used in configs, CLI flags and output files: N, BH, BS, CH, CS.
PolicyKind policy_from_string(std::string_view name);
std::string to_string(PolicyKind kind);

bool is_balancing(PolicyKind kind);
bool is_community(PolicyKind kind);
bool is_hard(PolicyKind kind);

enum class DirectiveKind {
    OpenFloor,          // no directed addressee (Neutral)
    Address,            // fresh question to an addressee
    Repeat,             // hard reaction: ignore responder, repeat to intended
    ReplyThenReaddress, // soft reaction: reply to responder, readdress intended
    Accept,             // response accepted, no pending target
};

std::string to_string(DirectiveKind kind);

struct Directive {
    DirectiveKind kind = DirectiveKind::OpenFloor;
    SpeakerId addressee = -1; // intended/accepted speaker for directed kinds
    SpeakerId responder = -1; // actual responder, ReplyThenReaddress only

    static Directive open_floor() { return {DirectiveKind::OpenFloor, -1, -1}; }
    static Directive address(SpeakerId s) { return {DirectiveKind::Address, s, -1}; }
    static Directive repeat(SpeakerId intended) { return {DirectiveKind::Repeat, intended, -1}; }
    static Directive reply_then_readdress(SpeakerId responder, SpeakerId intended) {
        return {DirectiveKind::ReplyThenReaddress, intended, responder};
    }
    static Directive accept(SpeakerId s) { return {DirectiveKind::Accept, s, -1}; }

    bool directed() const {
        return kind == DirectiveKind::Address || kind == DirectiveKind::Repeat ||
               kind == DirectiveKind::ReplyThenReaddress;
    }
};

// Pending-target bookkeeping for the hard/soft reaction semantics.
struct ModeratorState {
    std::optional<SpeakerId> intended;
    int repeat_count = 0;
    int max_repeats = 3; // give-up bound; unbounded repetition could deadlock
};

// Chooses whom the moderator addresses next.
//  - Neutral: open floor.
//  - Balancing: the speaker minimizing the dominance metric over the window.
//  - Community: a uniformly random speaker from a community other than the
//    last speaker's; when only one community exists (or no one has spoken),
//    uniform over everyone except the last speaker.
Directive next_addressee(PolicyKind policy, const DialogueState& state,
                         const DominanceWeights& weights, Rng& rng);

// Reaction to the actual respondent once their turn has been recorded.
// Compliant (or untargeted) turns are accepted; non-compliant turns trigger
// Repeat (hard) or ReplyThenReaddress (soft) until max_repeats is exhausted,
// after which the responder is accepted and the target dropped.
std::pair<Directive, ModeratorState> on_turn(PolicyKind policy, ModeratorState state,
                                             SpeakerId actual);

} // namespace moderato
