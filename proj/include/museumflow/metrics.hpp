#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "museumflow/graph.hpp"

namespace museumflow {

struct GraphMetrics {
    double clustering = 0.0;
    std::optional<double> path_length; // absent when the graph is disconnected
    int degree_min = 0;
    int degree_max = 0;
    double degree_mean = 0.0;
    bool connected = false;
};

/// Mean over all nodes of (edges among neighbors) / (degree choose 2).
/// Nodes of degree < 2 contribute 0 and stay in the mean; an edgeless graph
/// scores 0.
inline double clustering_coefficient(const Graph& g) {
    const int n = g.node_count();
    if (n == 0 || g.edge_count() == 0) return 0.0;
    double sum = 0.0;
    for (NodeId u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        const std::size_t d = nbrs.size();
        if (d < 2) continue;
        long long linked = 0;
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = a + 1; b < d; ++b) {
                if (g.has_edge(nbrs[a], nbrs[b])) ++linked;
            }
        }
        const double possible = static_cast<double>(d) * (static_cast<double>(d) - 1.0) / 2.0;
        sum += static_cast<double>(linked) / possible;
    }
    return sum / static_cast<double>(n);
}

struct PathLengthOptions {
    bool largest_component_only = false;
    unsigned threads = 1;
};

namespace detail {

// Component label per node plus the size of the largest component.
inline std::pair<std::vector<int>, std::size_t> components(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::size_t largest = 0;
    int next = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) continue;
        std::size_t size = 0;
        std::vector<NodeId> stack{s};
        label[static_cast<std::size_t>(s)] = next;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            ++size;
            for (NodeId v : g.neighbors(u)) {
                if (label[static_cast<std::size_t>(v)] < 0) {
                    label[static_cast<std::size_t>(v)] = next;
                    stack.push_back(v);
                }
            }
        }
        largest = std::max(largest, size);
        ++next;
    }
    return {std::move(label), largest};
}

// Sum of BFS distances from the given sources to all nodes in the same
// component. Integer accumulation keeps the reduction exact and therefore
// independent of how sources are split across threads.
inline std::uint64_t distance_sum(const Graph& g, const std::vector<NodeId>& sources,
                                  std::size_t begin, std::size_t end) {
    std::uint64_t sum = 0;
    for (std::size_t s = begin; s < end; ++s) {
        for (int d : bfs_distances(g, sources[s])) {
            if (d > 0) sum += static_cast<std::uint64_t>(d);
        }
    }
    return sum;
}

} // namespace detail

/// Mean shortest-path hop count over all unordered node pairs, by BFS from
/// every node. Disconnected graphs raise DisconnectedGraphError unless
/// largest_component_only is set, in which case the mean is taken over the
/// largest component. Graphs with fewer than two relevant nodes score 0.
inline double characteristic_path_length(const Graph& g, PathLengthOptions opts = {}) {
    const auto [label, largest] = detail::components(g);
    const bool connected = largest == static_cast<std::size_t>(g.node_count());
    if (!connected && !opts.largest_component_only) {
        throw DisconnectedGraphError("characteristic_path_length: graph is disconnected");
    }

    std::vector<NodeId> sources;
    if (connected) {
        sources.resize(static_cast<std::size_t>(g.node_count()));
        for (NodeId u = 0; u < g.node_count(); ++u) sources[static_cast<std::size_t>(u)] = u;
    } else {
        // Lowest-labelled component of maximal size, for determinism.
        std::vector<std::size_t> sizes;
        for (int c : label) {
            if (static_cast<std::size_t>(c) >= sizes.size()) sizes.resize(c + 1, 0);
            ++sizes[static_cast<std::size_t>(c)];
        }
        int chosen = 0;
        for (std::size_t c = 0; c < sizes.size(); ++c) {
            if (sizes[c] == largest) {
                chosen = static_cast<int>(c);
                break;
            }
        }
        for (NodeId u = 0; u < g.node_count(); ++u) {
            if (label[static_cast<std::size_t>(u)] == chosen) sources.push_back(u);
        }
    }

    if (sources.size() < 2) return 0.0;

    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads,
                                      static_cast<unsigned>(sources.size())));
    std::uint64_t total = 0;
    if (workers == 1) {
        total = detail::distance_sum(g, sources, 0, sources.size());
    } else {
        std::vector<std::uint64_t> partial(workers, 0);
        std::vector<std::thread> pool;
        const std::size_t chunk = (sources.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(sources.size(), w * chunk);
            const std::size_t end = std::min(sources.size(), begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                partial[w] = detail::distance_sum(g, sources, begin, end);
            });
        }
        for (auto& t : pool) t.join();
        for (std::uint64_t p : partial) total += p;
    }

    const std::uint64_t pairs =
        static_cast<std::uint64_t>(sources.size()) * (sources.size() - 1); // ordered
    return static_cast<double>(total) / static_cast<double>(pairs);
}

/// Bundles clustering, path length (absent when disconnected) and degree
/// statistics in one pass-friendly call.
inline GraphMetrics graph_metrics(const Graph& g) {
    GraphMetrics m;
    m.clustering = clustering_coefficient(g);
    m.connected = is_connected(g);
    const int n = g.node_count();
    if (n > 0) {
        int dmin = g.degree(0), dmax = g.degree(0);
        long long dsum = 0;
        for (NodeId u = 0; u < n; ++u) {
            const int d = g.degree(u);
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
            dsum += d;
        }
        m.degree_min = dmin;
        m.degree_max = dmax;
        m.degree_mean = static_cast<double>(dsum) / static_cast<double>(n);
    }
    if (m.connected) {
        m.path_length = characteristic_path_length(g);
    }
    return m;
}

} // namespace museumflow
