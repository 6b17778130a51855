#pragma once

#include <string>
#include <utility>
#include <vector>

#include "museumflow/graph.hpp"

namespace museumflow {

/// One exhibit: a style weight vector over the configured categories and the
/// number of people that can comfortably view it at once.
struct Painting {
    NodeId id = 0;
    std::vector<double> style;
    int capacity = 1;
};

/// Tier-2 point attached to a single painting. Visitors redirected here read
/// for service_time minutes; relief is both the painting's added effective
/// capacity and the number of concurrent readers the point can serve.
struct InfoNode {
    NodeId id = 0;
    NodeId parent = 0;
    double service_time = 1.0;
    int relief = 0;
};

struct InfoSpec {
    int count = 0;
    double service_time = 1.0;
    int relief = 0;
};

/// Two-tier museum network: tier 1 is the painting graph, tier 2 the info
/// nodes, each linked only to its parent painting. Immutable after build and
/// safe to share across simulation workers. Info nodes get fresh ids after
/// the painting range, so every node in the gallery has a unique id.
class Gallery {
public:
    Gallery(Graph painting_graph, std::vector<Painting> paintings,
            std::vector<InfoNode> info_nodes, double hop_time)
        : graph_(std::move(painting_graph)),
          paintings_(std::move(paintings)),
          info_nodes_(std::move(info_nodes)),
          hop_time_(hop_time) {
        const int p = painting_count();
        info_of_.resize(static_cast<std::size_t>(p));
        effective_capacity_.resize(static_cast<std::size_t>(p));
        for (const InfoNode& node : info_nodes_) {
            info_of_[static_cast<std::size_t>(node.parent)].push_back(node.id);
        }
        for (NodeId q = 0; q < p; ++q) {
            int cap = paintings_[static_cast<std::size_t>(q)].capacity;
            for (NodeId i : info_of_[static_cast<std::size_t>(q)]) {
                cap += info(i).relief;
            }
            effective_capacity_[static_cast<std::size_t>(q)] = cap;
        }
        hop_distance_.reserve(static_cast<std::size_t>(p));
        for (NodeId q = 0; q < p; ++q) {
            hop_distance_.push_back(bfs_distances(graph_, q));
        }
    }

    const Graph& painting_graph() const { return graph_; }
    int painting_count() const { return static_cast<int>(paintings_.size()); }
    int info_count() const { return static_cast<int>(info_nodes_.size()); }
    double hop_time() const { return hop_time_; }

    const Painting& painting(NodeId p) const {
        check_painting(p);
        return paintings_[static_cast<std::size_t>(p)];
    }

    bool is_info_id(NodeId id) const {
        return id >= painting_count() && id < painting_count() + info_count();
    }

    const InfoNode& info(NodeId id) const {
        if (!is_info_id(id)) throw ParameterError("Gallery: unknown info node id");
        return info_nodes_[static_cast<std::size_t>(id - painting_count())];
    }

    const std::vector<NodeId>& info_nodes_of(NodeId p) const {
        check_painting(p);
        return info_of_[static_cast<std::size_t>(p)];
    }

    int effective_capacity(NodeId p) const {
        check_painting(p);
        return effective_capacity_[static_cast<std::size_t>(p)];
    }

    /// Hop count between two paintings, -1 when unreachable.
    int hop_distance(NodeId a, NodeId b) const {
        check_painting(a);
        check_painting(b);
        return hop_distance_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

private:
    void check_painting(NodeId p) const {
        if (p < 0 || p >= painting_count()) {
            throw ParameterError("Gallery: unknown painting id");
        }
    }

    Graph graph_;
    std::vector<Painting> paintings_;
    std::vector<InfoNode> info_nodes_;
    double hop_time_;
    std::vector<std::vector<NodeId>> info_of_;
    std::vector<int> effective_capacity_;
    std::vector<std::vector<int>> hop_distance_;
};

/// Assembles and validates a gallery. styles, capacities and info_specs are
/// per painting-graph node; info nodes are allocated ids beyond the painting
/// range and linked to their parents.
inline Gallery build_gallery(Graph painting_graph, std::vector<std::vector<double>> styles,
                             std::vector<int> capacities, std::vector<InfoSpec> info_specs,
                             double hop_time = 1.0) {
    const std::size_t n = static_cast<std::size_t>(painting_graph.node_count());
    if (styles.size() != n) throw ParameterError("build_gallery: styles length mismatch");
    if (capacities.size() != n) throw ParameterError("build_gallery: capacities length mismatch");
    if (info_specs.size() != n) throw ParameterError("build_gallery: info_specs length mismatch");
    if (hop_time < 0.0) throw ParameterError("build_gallery: hop_time must be non-negative");

    std::vector<Painting> paintings;
    paintings.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (styles[i].empty()) throw ParameterError("build_gallery: empty style vector");
        bool positive = false;
        for (double w : styles[i]) {
            if (w < 0.0 || w > 1.0) {
                throw ParameterError("build_gallery: style weights must be in [0,1]");
            }
            if (w > 0.0) positive = true;
        }
        if (!positive) throw ParameterError("build_gallery: style vector needs a positive entry");
        if (capacities[i] < 1) throw ParameterError("build_gallery: capacity must be at least 1");
        paintings.push_back({static_cast<NodeId>(i), std::move(styles[i]), capacities[i]});
    }

    std::vector<InfoNode> info_nodes;
    NodeId next_id = static_cast<NodeId>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const InfoSpec& spec = info_specs[i];
        if (spec.count < 0) throw ParameterError("build_gallery: info count must be non-negative");
        if (spec.count > 0 && spec.service_time <= 0.0) {
            throw ParameterError("build_gallery: info service_time must be positive");
        }
        if (spec.relief < 0) throw ParameterError("build_gallery: info relief must be non-negative");
        for (int c = 0; c < spec.count; ++c) {
            info_nodes.push_back({next_id++, static_cast<NodeId>(i), spec.service_time, spec.relief});
        }
    }

    return Gallery(std::move(painting_graph), std::move(paintings), std::move(info_nodes), hop_time);
}

inline int effective_capacity(NodeId p, const Gallery& g) { return g.effective_capacity(p); }

/// hop_time x shortest-path hops between paintings a and b; 0 when a == b.
inline double travel_time(NodeId a, NodeId b, const Gallery& g) {
    if (a == b) return 0.0;
    const int hops = g.hop_distance(a, b);
    if (hops < 0) throw DisconnectedGraphError("travel_time: paintings are unreachable");
    return g.hop_time() * static_cast<double>(hops);
}

/// Two-section text export: the tier-1 edge list, then one "infonode parent"
/// line per info node in id order.
inline std::string gallery_to_text(const Gallery& g) {
    std::string out = graph_to_edge_list(g.painting_graph());
    for (NodeId i = 0; i < g.info_count(); ++i) {
        const InfoNode& node = g.info(static_cast<NodeId>(g.painting_count() + i));
        out += std::to_string(node.id);
        out += ' ';
        out += std::to_string(node.parent);
        out += '\n';
    }
    return out;
}

} // namespace museumflow
