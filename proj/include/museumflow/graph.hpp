#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "museumflow/errors.hpp"

namespace museumflow {

using NodeId = std::int32_t;

/// Undirected simple graph. Neighbor lists are kept sorted so that every
/// traversal (and therefore every seeded algorithm built on top) is
/// order-deterministic.
class Graph {
public:
    Graph() = default;

    explicit Graph(int node_count) {
        if (node_count < 0) throw ParameterError("Graph: node_count must be non-negative");
        adjacency_.resize(static_cast<std::size_t>(node_count));
    }

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_edge(NodeId u, NodeId v) const {
        check_node(u);
        check_node(v);
        const auto& nbrs = adjacency_[static_cast<std::size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    void add_edge(NodeId u, NodeId v) {
        check_node(u);
        check_node(v);
        if (u == v) throw ParameterError("Graph::add_edge: self-loop rejected");
        if (has_edge(u, v)) throw ParameterError("Graph::add_edge: duplicate edge rejected");
        insert_sorted(adjacency_[static_cast<std::size_t>(u)], v);
        insert_sorted(adjacency_[static_cast<std::size_t>(v)], u);
        ++edge_count_;
    }

    void remove_edge(NodeId u, NodeId v) {
        if (!has_edge(u, v)) throw ParameterError("Graph::remove_edge: edge not present");
        erase_sorted(adjacency_[static_cast<std::size_t>(u)], v);
        erase_sorted(adjacency_[static_cast<std::size_t>(v)], u);
        --edge_count_;
    }

    const std::vector<NodeId>& neighbors(NodeId u) const {
        check_node(u);
        return adjacency_[static_cast<std::size_t>(u)];
    }

    int degree(NodeId u) const { return static_cast<int>(neighbors(u).size()); }

    /// All edges as (u, v) with u < v, ascending lexicographic order.
    std::vector<std::pair<NodeId, NodeId>> edges() const {
        std::vector<std::pair<NodeId, NodeId>> out;
        out.reserve(edge_count_);
        for (NodeId u = 0; u < node_count(); ++u) {
            for (NodeId v : adjacency_[static_cast<std::size_t>(u)]) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_;
    }

private:
    void check_node(NodeId u) const {
        if (u < 0 || u >= node_count()) throw ParameterError("Graph: node id out of range");
    }

    static void insert_sorted(std::vector<NodeId>& v, NodeId x) {
        v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    }

    static void erase_sorted(std::vector<NodeId>& v, NodeId x) {
        v.erase(std::lower_bound(v.begin(), v.end(), x));
    }

    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Hop distances from `source` to every node; -1 marks unreachable nodes.
inline std::vector<int> bfs_distances(const Graph& g, NodeId source) {
    std::vector<int> dist(static_cast<std::size_t>(g.node_count()), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::queue<NodeId> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (NodeId v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.node_count() <= 1) return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

// Edge-list text format: first line "n m", then m lines "u v" with u < v in
// ascending lexicographic order. Golden files depend on this ordering.
inline std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

inline Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) {
        throw ParameterError("graph_from_edge_list: bad header, expected \"n m\"");
    }
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw ParameterError("graph_from_edge_list: truncated edge list");
        g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    return g;
}

} // namespace museumflow
