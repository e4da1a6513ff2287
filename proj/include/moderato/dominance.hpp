#pragma once

#include "moderato/rng.hpp"
#include "moderato/turn.hpp"

#include <Eigen/Dense>

namespace moderato {

// Fractions of window speaking time (T_i) and word count (W_i) per speaker.
// Each vector sums to 1; uniform 1/n when the window carries no information.
struct ParticipationShares {
    Eigen::VectorXd time_share;
    Eigen::VectorXd word_share;
};

// Relative importance of speaking time vs word count in the dominance
// metric. Normalized so gamma1 + gamma2 = 1 at construction.
class DominanceWeights {
  public:
    DominanceWeights() : DominanceWeights(0.5, 0.5) {}
    DominanceWeights(double gamma1, double gamma2);

    double gamma1() const { return gamma1_; }
    double gamma2() const { return gamma2_; }

  private:
    double gamma1_;
    double gamma2_;
};

// Per-speaker time/word fractions over the moving window. Falls back to
// uniform shares when the window is empty (and for word shares when the
// window holds zero words).
ParticipationShares participation_shares(const MovingWindow& window, int n_speakers);

// D_i = gamma1 * T_i + gamma2 * W_i.
Eigen::VectorXd dominance_scores(const ParticipationShares& shares,
                                 const DominanceWeights& weights);

// Index of the least dominant speaker; exact ties are broken uniformly at
// random so low indices are not systematically favored.
SpeakerId select_submissive(const Eigen::VectorXd& scores, Rng& rng);

// max(values) - min(values); the per-turn balance error when applied to
// absolute window seconds or word counts.
double range_error(const Eigen::VectorXd& values);

} // namespace moderato
