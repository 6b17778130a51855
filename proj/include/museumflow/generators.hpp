#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "museumflow/graph.hpp"
#include "museumflow/rng.hpp"

namespace museumflow {

/// Regular ring lattice: node i is joined to i+-1 ... i+-k/2 (mod n).
/// Exactly n*k/2 edges, all degrees equal k.
inline Graph ring_lattice(int n, int k) {
    if (n < 3) throw ParameterError("ring_lattice: n must be at least 3");
    if (k % 2 != 0) throw ParameterError("ring_lattice: k must be even");
    if (k < 2) throw ParameterError("ring_lattice: k must be at least 2");
    if (k >= n) throw ParameterError("ring_lattice: k must be smaller than n");
    Graph g(n);
    for (NodeId i = 0; i < n; ++i) {
        for (int offset = 1; offset <= k / 2; ++offset) {
            const NodeId j = static_cast<NodeId>((i + offset) % n);
            g.add_edge(i, j);
        }
    }
    return g;
}

namespace detail {

// Infers (n, k) from a graph that claims to be a ring lattice and verifies
// the claim edge for edge.
inline int lattice_half_width(const Graph& g) {
    const int n = g.node_count();
    if (n < 3 || g.edge_count() == 0) {
        throw ParameterError("ws_rewire: input is not a ring lattice");
    }
    const int k = g.degree(0);
    if (k % 2 != 0 || static_cast<std::size_t>(n) * k != 2 * g.edge_count()) {
        throw ParameterError("ws_rewire: input is not a ring lattice");
    }
    for (NodeId i = 0; i < n; ++i) {
        if (g.degree(i) != k) throw ParameterError("ws_rewire: input is not a ring lattice");
        for (int offset = 1; offset <= k / 2; ++offset) {
            if (!g.has_edge(i, static_cast<NodeId>((i + offset) % n))) {
                throw ParameterError("ws_rewire: input is not a ring lattice");
            }
        }
    }
    return k / 2;
}

} // namespace detail

/// Watts-Strogatz rewiring pass over a ring lattice. Lattice edges are
/// visited in a canonical order (ascending near endpoint, then offset); each
/// is rewired with probability p by replacing its far endpoint with a node
/// drawn uniformly at random, rejecting self-loops and duplicates. An edge
/// whose near endpoint already touches every other node is skipped. Edge
/// count and simplicity are preserved for every p and seed.
inline Graph ws_rewire(const Graph& g, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("ws_rewire: p must be in [0, 1]");
    const int half = detail::lattice_half_width(g);
    const int n = g.node_count();
    Graph out = g;
    Rng rng(seed);
    for (NodeId i = 0; i < n; ++i) {
        for (int offset = 1; offset <= half; ++offset) {
            if (!rng.bernoulli(p)) continue;
            // Legal targets exclude i itself and all current neighbors of i
            // (the visited edge is still present, so staying put is not an
            // option once the coin says rewire).
            if (out.degree(i) >= n - 1) continue;
            NodeId target;
            do {
                target = static_cast<NodeId>(rng.uniform_below(static_cast<std::uint64_t>(n)));
            } while (target == i || out.has_edge(i, target));
            out.remove_edge(i, static_cast<NodeId>((i + offset) % n));
            out.add_edge(i, target);
        }
    }
    return out;
}

/// m distinct edges sampled uniformly without replacement from all unordered
/// pairs. When m is more than half of the possible pairs the complement is
/// sampled instead, so dense requests (including complete graphs) terminate.
inline Graph random_graph(int n, long long m, std::uint64_t seed) {
    if (n < 0) throw ParameterError("random_graph: n must be non-negative");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges) {
        throw ParameterError("random_graph: m must be in [0, n(n-1)/2]");
    }
    Rng rng(seed);
    auto sample_pairs = [&](long long count) {
        std::set<std::pair<NodeId, NodeId>> pairs;
        while (static_cast<long long>(pairs.size()) < count) {
            NodeId u = static_cast<NodeId>(rng.uniform_below(static_cast<std::uint64_t>(n)));
            NodeId v = static_cast<NodeId>(rng.uniform_below(static_cast<std::uint64_t>(n)));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            pairs.emplace(u, v);
        }
        return pairs;
    };
    Graph g(n);
    if (m * 2 <= max_edges) {
        for (const auto& [u, v] : sample_pairs(m)) g.add_edge(u, v);
    } else {
        const auto excluded = sample_pairs(max_edges - m);
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                if (!excluded.count({u, v})) g.add_edge(u, v);
            }
        }
    }
    return g;
}

} // namespace museumflow
