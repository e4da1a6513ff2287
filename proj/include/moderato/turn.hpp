#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <deque>

namespace moderato {

// Index of a human participant, in [0, n_speakers). The moderator itself is
// never a SpeakerId: only participant speech is tracked.
using SpeakerId = int;

// One speaking event.
struct Turn {
    SpeakerId speaker = 0;
    double duration_s = 0.0;
    long words = 0;
    long index = 0; // monotone counter within a conversation
};

/** FIFO of recent turns bounded by total speaking time.
 *
 *  After every mutation either the total duration is <= capacity, or the
 *  window holds exactly one turn (a single turn longer than the capacity is
 *  retained alone so that shares stay defined mid-conversation).
 */
class MovingWindow {
  public:
    explicit MovingWindow(double capacity_s);

    // Appends a turn, then evicts oldest-first while over capacity.
    // Throws std::invalid_argument on non-positive duration.
    void push(const Turn& turn);

    // Merges extra speech into the most recent turn and re-applies eviction.
    void extend_back(double extra_s, long extra_words);

    const std::deque<Turn>& turns() const { return turns_; }
    bool empty() const { return turns_.empty(); }
    std::size_t size() const { return turns_.size(); }
    double capacity_s() const { return capacity_s_; }
    double total_duration_s() const { return total_s_; }
    long total_words() const { return total_words_; }

    // Per-speaker totals over the window, length n.
    Eigen::VectorXd time_totals(int n_speakers) const;
    Eigen::VectorXd word_totals(int n_speakers) const;

  private:
    void evict_over_capacity();

    double capacity_s_;
    double total_s_ = 0.0;
    long total_words_ = 0;
    std::deque<Turn> turns_;
};

} // namespace moderato
