#include "moderato/turn.hpp"

#include <stdexcept>

namespace moderato {

MovingWindow::MovingWindow(double capacity_s) : capacity_s_(capacity_s) {
    if (!(capacity_s > 0.0))
        throw std::invalid_argument("MovingWindow: capacity must be positive");
}

void MovingWindow::push(const Turn& turn) {
    if (!(turn.duration_s > 0.0))
        throw std::invalid_argument("MovingWindow: turn duration must be positive");
    turns_.push_back(turn);
    total_s_ += turn.duration_s;
    total_words_ += turn.words;
    evict_over_capacity();
}

void MovingWindow::extend_back(double extra_s, long extra_words) {
    if (turns_.empty())
        throw std::logic_error("MovingWindow: extend_back on empty window");
    if (!(extra_s > 0.0))
        throw std::invalid_argument("MovingWindow: extension duration must be positive");
    turns_.back().duration_s += extra_s;
    turns_.back().words += extra_words;
    total_s_ += extra_s;
    total_words_ += extra_words;
    evict_over_capacity();
}

void MovingWindow::evict_over_capacity() {
    while (total_s_ > capacity_s_ && turns_.size() > 1) {
        total_s_ -= turns_.front().duration_s;
        total_words_ -= turns_.front().words;
        turns_.pop_front();
    }
}

Eigen::VectorXd MovingWindow::time_totals(int n_speakers) const {
    Eigen::VectorXd totals = Eigen::VectorXd::Zero(n_speakers);
    for (const Turn& t : turns_)
        totals[t.speaker] += t.duration_s;
    return totals;
}

Eigen::VectorXd MovingWindow::word_totals(int n_speakers) const {
    Eigen::VectorXd totals = Eigen::VectorXd::Zero(n_speakers);
    for (const Turn& t : turns_)
        totals[t.speaker] += static_cast<double>(t.words);
    return totals;
}

} // namespace moderato
