#include "moderato/dominance.hpp"

#include <stdexcept>
#include <vector>

namespace moderato {

DominanceWeights::DominanceWeights(double gamma1, double gamma2) {
    if (gamma1 < 0.0 || gamma2 < 0.0)
        throw std::invalid_argument("DominanceWeights: weights must be non-negative");
    const double sum = gamma1 + gamma2;
    if (!(sum > 0.0))
        throw std::invalid_argument("DominanceWeights: weights must not both be zero");
    gamma1_ = gamma1 / sum;
    gamma2_ = gamma2 / sum;
}

ParticipationShares participation_shares(const MovingWindow& window, int n_speakers) {
    if (n_speakers < 2)
        throw std::invalid_argument("participation_shares: need at least 2 speakers");
    const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(n_speakers, 1.0 / n_speakers);
    if (window.empty())
        return {uniform, uniform};

    ParticipationShares shares;
    shares.time_share = window.time_totals(n_speakers) / window.total_duration_s();
    if (window.total_words() > 0)
        shares.word_share = window.word_totals(n_speakers) /
                            static_cast<double>(window.total_words());
    else
        shares.word_share = uniform;
    return shares;
}

Eigen::VectorXd dominance_scores(const ParticipationShares& shares,
                                 const DominanceWeights& weights) {
    return weights.gamma1() * shares.time_share + weights.gamma2() * shares.word_share;
}

SpeakerId select_submissive(const Eigen::VectorXd& scores, Rng& rng) {
    if (scores.size() == 0)
        throw std::invalid_argument("select_submissive: empty score vector");
    const double min = scores.minCoeff();
    std::vector<int> minimizers;
    for (int i = 0; i < scores.size(); ++i)
        if (scores[i] == min)
            minimizers.push_back(i);
    if (minimizers.size() == 1)
        return minimizers.front();
    std::uniform_int_distribution<std::size_t> pick(0, minimizers.size() - 1);
    return minimizers[pick(rng)];
}

double range_error(const Eigen::VectorXd& values) {
    if (values.size() == 0)
        throw std::invalid_argument("range_error: empty vector");
    return values.maxCoeff() - values.minCoeff();
}

} // namespace moderato
