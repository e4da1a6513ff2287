#include "moderato/dialogue_state.hpp"

#include <stdexcept>

namespace moderato {

DialogueState::DialogueState(int n_speakers, double window_capacity_s)
    : n_(n_speakers),
      counts_(Eigen::MatrixXi::Zero(n_speakers, n_speakers)),
      turns_(Eigen::VectorXi::Zero(n_speakers)),
      window_(window_capacity_s) {
    if (n_speakers < 2)
        throw std::invalid_argument("DialogueState: need at least 2 speakers");
}

void DialogueState::record(const Turn& turn) {
    if (turn.speaker < 0 || turn.speaker >= n_)
        throw std::out_of_range("DialogueState: speaker id out of range");
    if (!(turn.duration_s > 0.0))
        throw std::invalid_argument("DialogueState: turn duration must be positive");
    if (turn.words < 0)
        throw std::invalid_argument("DialogueState: negative word count");
    if (last_index_ && turn.index <= *last_index_)
        throw std::invalid_argument("DialogueState: turn index must be increasing");
    last_index_ = turn.index;

    if (last_ && *last_ == turn.speaker) {
        // Same speaker continued: fold into their previous turn, keep counts.
        window_.extend_back(turn.duration_s, turn.words);
        return;
    }
    if (last_)
        counts_(*last_, turn.speaker) += 1;
    turns_[turn.speaker] += 1;
    window_.push(turn);
    last_ = turn.speaker;
}

Eigen::VectorXd DialogueState::prior_speak_prob() const {
    const long total = total_turns();
    if (total == 0)
        return Eigen::VectorXd::Constant(n_, 1.0 / n_);
    return turns_.cast<double>() / static_cast<double>(total);
}

} // namespace moderato
