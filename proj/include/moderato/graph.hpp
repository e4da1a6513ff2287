#pragma once

#include "moderato/rng.hpp"

#include <Eigen/Dense>

#include <vector>

namespace moderato {

// Undirected weighted graph over speakers, stored dense. Weights are
// symmetric, non-negative, with a zero diagonal.
class WeightedGraph {
  public:
    WeightedGraph() = default;

    // Validates symmetry, non-negativity and zero diagonal.
    explicit WeightedGraph(Eigen::MatrixXd weights);

    int n() const { return static_cast<int>(weights_.rows()); }
    const Eigen::MatrixXd& weights() const { return weights_; }
    double total_weight() const { return weights_.sum(); } // = 2m
    Eigen::VectorXd strengths() const { return weights_.rowwise().sum(); }

  private:
    Eigen::MatrixXd weights_;
};

// Assignment of nodes to communities. Labels are contiguous ids starting at
// 0; modularity is the Newman-Girvan Q of the labeling on the source graph.
struct Partition {
    Eigen::VectorXi labels;
    double modularity = 0.0;
};

// Symmetrized empirical transition probabilities:
// w(i,j) = (counts(i,j) + counts(j,i)) / total transitions.
// A zero count matrix yields the all-zero graph.
WeightedGraph transition_graph(const Eigen::MatrixXi& counts);

// Q = (1/2m) * sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j).
// Throws std::domain_error for an all-zero graph.
double modularity(const WeightedGraph& graph, const Eigen::VectorXi& labels);

// Two-phase Louvain: greedy single-node moves (visitation order shuffled by
// rng each pass), then community aggregation, repeated until no gain. For an
// all-zero graph every node becomes a singleton and Q is reported as 0.
// When pass_modularity is given it receives the flat-partition Q after each
// local-moving pass, which is non-decreasing.
Partition louvain(const WeightedGraph& graph, Rng& rng,
                  std::vector<double>* pass_modularity = nullptr);

// Exhaustive search over all set partitions; the test oracle for louvain.
// Refuses n > 10.
Partition brute_force_best_partition(const WeightedGraph& graph);

int community_count(const Partition& partition);

} // namespace moderato
