#pragma once

#include "moderato/turn.hpp"

#include <Eigen/Dense>

#include <optional>

namespace moderato {

/** Per-conversation statistics, updated after every human turn.
 *
 *  Tracks the speaker-transition count matrix (entry (i,j) = number of times
 *  j spoke immediately after i), per-speaker turn counts, the empirical
 *  speaking prior, and the time-bounded moving window of recent turns.
 *
 *  Consecutive events by the same speaker are merged into one turn: durations
 *  and word counts are summed and no transition is recorded, so the diagonal
 *  of the matrix stays zero and the derived graph is loop-free.
 */
class DialogueState {
  public:
    DialogueState(int n_speakers, double window_capacity_s);

    // Records a turn. Throws std::out_of_range for an unknown speaker and
    // std::invalid_argument for a non-positive duration, a negative word
    // count, or a non-increasing turn index.
    void record(const Turn& turn);

    int n_speakers() const { return n_; }
    const Eigen::MatrixXi& transition_counts() const { return counts_; }
    const Eigen::VectorXi& turns_per_speaker() const { return turns_; }
    const MovingWindow& window() const { return window_; }
    std::optional<SpeakerId> last_speaker() const { return last_; }
    long total_turns() const { return turns_.cast<long>().sum(); }

    // Empirical probability that each speaker takes a turn; uniform before
    // any turn has been recorded.
    Eigen::VectorXd prior_speak_prob() const;

  private:
    int n_;
    Eigen::MatrixXi counts_;
    Eigen::VectorXi turns_;
    MovingWindow window_;
    std::optional<SpeakerId> last_;
    std::optional<long> last_index_;
};

} // namespace moderato
