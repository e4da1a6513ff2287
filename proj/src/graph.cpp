#include "moderato/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace moderato {

namespace {

// Relabels to contiguous ids ordered by first occurrence.
Eigen::VectorXi canonicalize(const std::vector<int>& labels) {
    Eigen::VectorXi out(static_cast<int>(labels.size()));
    std::vector<int> remap(labels.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (remap[labels[i]] < 0)
            remap[labels[i]] = next++;
        out[static_cast<int>(i)] = remap[labels[i]];
    }
    return out;
}

Eigen::VectorXi singleton_labels(int n) {
    Eigen::VectorXi labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return labels;
}

// Q for an arbitrary labeling of an arbitrary symmetric matrix (self-loops
// allowed on aggregated levels). two_m must be positive.
double modularity_of(const Eigen::MatrixXd& w, const Eigen::VectorXi& labels, double two_m) {
    const int n = static_cast<int>(w.rows());
    const int n_comm = labels.maxCoeff() + 1;
    Eigen::VectorXd intra = Eigen::VectorXd::Zero(n_comm);
    Eigen::VectorXd tot = Eigen::VectorXd::Zero(n_comm);
    const Eigen::VectorXd k = w.rowwise().sum();
    for (int i = 0; i < n; ++i) {
        tot[labels[i]] += k[i];
        for (int j = 0; j < n; ++j)
            if (labels[i] == labels[j])
                intra[labels[i]] += w(i, j);
    }
    double q = 0.0;
    for (int c = 0; c < n_comm; ++c)
        q += intra[c] / two_m - (tot[c] / two_m) * (tot[c] / two_m);
    return q;
}

} // namespace

WeightedGraph::WeightedGraph(Eigen::MatrixXd weights) : weights_(std::move(weights)) {
    if (weights_.rows() != weights_.cols())
        throw std::invalid_argument("WeightedGraph: matrix must be square");
    if ((weights_.array() < 0.0).any())
        throw std::invalid_argument("WeightedGraph: negative weight");
    if (weights_.diagonal().any())
        throw std::invalid_argument("WeightedGraph: diagonal must be zero");
    if (!weights_.isApprox(weights_.transpose()))
        throw std::invalid_argument("WeightedGraph: matrix must be symmetric");
}

WeightedGraph transition_graph(const Eigen::MatrixXi& counts) {
    if (counts.rows() != counts.cols())
        throw std::invalid_argument("transition_graph: count matrix must be square");
    if ((counts.array() < 0).any())
        throw std::invalid_argument("transition_graph: negative count");
    if (counts.diagonal().any())
        throw std::invalid_argument("transition_graph: self-transitions are not representable");
    const long total = counts.cast<long>().sum();
    if (total == 0)
        return WeightedGraph(Eigen::MatrixXd::Zero(counts.rows(), counts.cols()));
    const Eigen::MatrixXd sym = (counts + counts.transpose()).cast<double>();
    return WeightedGraph(sym / static_cast<double>(total));
}

double modularity(const WeightedGraph& graph, const Eigen::VectorXi& labels) {
    if (labels.size() != graph.n())
        throw std::invalid_argument("modularity: label vector size mismatch");
    if (graph.n() > 0 && labels.minCoeff() < 0)
        throw std::invalid_argument("modularity: negative community label");
    const double two_m = graph.total_weight();
    if (!(two_m > 0.0))
        throw std::domain_error("modularity: undefined for an all-zero graph");
    return modularity_of(graph.weights(), labels, two_m);
}

Partition louvain(const WeightedGraph& graph, Rng& rng, std::vector<double>* pass_modularity) {
    const int n = graph.n();
    if (pass_modularity)
        pass_modularity->clear();
    const double two_m = graph.total_weight();
    if (!(two_m > 0.0))
        return {singleton_labels(n), 0.0}; // opening turns: no transitions yet

    Eigen::MatrixXd w = graph.weights();
    std::vector<int> flat(n); // original node -> current-level node
    std::iota(flat.begin(), flat.end(), 0);

    // Flat labels of the original nodes for a given level assignment.
    auto flatten = [&](const std::vector<int>& comm) {
        std::vector<int> labels(n);
        for (int i = 0; i < n; ++i)
            labels[i] = comm[flat[i]];
        return canonicalize(labels);
    };

    std::vector<int> final_comm(n);
    std::iota(final_comm.begin(), final_comm.end(), 0);

    while (true) {
        const int level_n = static_cast<int>(w.rows());
        const Eigen::VectorXd k = w.rowwise().sum();
        std::vector<int> comm(level_n);
        std::iota(comm.begin(), comm.end(), 0);
        std::vector<double> tot(k.begin(), k.end());
        std::vector<int> order(level_n);
        std::iota(order.begin(), order.end(), 0);

        bool moved_any = true;
        while (moved_any) {
            moved_any = false;
            std::shuffle(order.begin(), order.end(), rng);
            for (int i : order) {
                const int old_comm = comm[i];
                // Weight from i to each community, self-loop excluded (it is
                // intra-community wherever i sits).
                std::vector<double> s_in(level_n, 0.0);
                std::vector<int> neighbor_comms;
                for (int j = 0; j < level_n; ++j) {
                    if (j == i || w(i, j) == 0.0)
                        continue;
                    if (s_in[comm[j]] == 0.0)
                        neighbor_comms.push_back(comm[j]);
                    s_in[comm[j]] += w(i, j);
                }
                tot[old_comm] -= k[i];
                // Insertion score; differences between candidates are
                // proportional to the modularity change.
                auto score = [&](int c) { return s_in[c] - k[i] * tot[c] / two_m; };
                int best = old_comm;
                double best_score = score(old_comm);
                for (int c : neighbor_comms) {
                    if (c == old_comm)
                        continue;
                    const double s = score(c);
                    if ((s - best_score) / two_m > 1e-14) {
                        best_score = s;
                        best = c;
                    }
                }
                tot[best] += k[i];
                comm[i] = best;
                if (best != old_comm)
                    moved_any = true;
            }
            if (pass_modularity) {
                const Eigen::VectorXi labels = flatten(comm);
                pass_modularity->push_back(modularity_of(graph.weights(), labels, two_m));
            }
        }

        // Map level communities to dense ids; count them.
        std::vector<int> dense(level_n, -1);
        int n_comm = 0;
        for (int i = 0; i < level_n; ++i) {
            if (dense[comm[i]] < 0)
                dense[comm[i]] = n_comm++;
            comm[i] = dense[comm[i]];
        }
        for (int i = 0; i < n; ++i)
            flat[i] = comm[flat[i]];
        final_comm = flat;
        if (n_comm == level_n)
            break; // no move happened at this level

        // Aggregate communities into super-nodes; diagonal picks up the
        // intra-community weight so modularity is preserved across levels.
        Eigen::MatrixXd merged = Eigen::MatrixXd::Zero(n_comm, n_comm);
        for (int i = 0; i < level_n; ++i)
            for (int j = 0; j < level_n; ++j)
                merged(comm[i], comm[j]) += w(i, j);
        w = std::move(merged);
    }

    Partition partition;
    partition.labels = canonicalize(final_comm);
    partition.modularity = modularity_of(graph.weights(), partition.labels, two_m);
    return partition;
}

Partition brute_force_best_partition(const WeightedGraph& graph) {
    const int n = graph.n();
    if (n > 10)
        throw std::invalid_argument("brute_force_best_partition: refused for n > 10");
    if (n == 0)
        return {Eigen::VectorXi(), 0.0};
    const double two_m = graph.total_weight();
    if (!(two_m > 0.0))
        return {singleton_labels(n), 0.0}; // same convention as louvain

    // Enumerate set partitions as restricted growth strings.
    Eigen::VectorXi labels = Eigen::VectorXi::Zero(n);
    Eigen::VectorXi best = labels;
    double best_q = modularity_of(graph.weights(), labels, two_m);
    std::vector<int> rgs(n, 0);
    while (true) {
        // advance to the next restricted growth string
        int i = n - 1;
        for (; i > 0; --i) {
            const int cap = 1 + *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] < cap)
                break;
        }
        if (i == 0)
            break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        for (int j = 0; j < n; ++j)
            labels[j] = rgs[j];
        const double q = modularity_of(graph.weights(), labels, two_m);
        if (q > best_q) {
            best_q = q;
            best = labels;
        }
    }
    return {best, best_q};
}

int community_count(const Partition& partition) {
    std::unordered_set<int> distinct(partition.labels.begin(), partition.labels.end());
    return static_cast<int>(distinct.size());
}

} // namespace moderato
