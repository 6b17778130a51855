#include <catch2/catch_amalgamated.hpp>

#include "museumflow/generators.hpp"
#include "museumflow/metrics.hpp"
#include "museumflow/rng.hpp"
#include "oracle.hpp"

namespace mf = museumflow;

namespace {

mf::Graph complete_graph(int n) {
    mf::Graph g(n);
    for (mf::NodeId u = 0; u < n; ++u) {
        for (mf::NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

} // namespace

TEST_CASE("clustering coefficient on frozen cases") {
    CHECK(mf::clustering_coefficient(complete_graph(4)) == 1.0);
    CHECK(mf::clustering_coefficient(mf::ring_lattice(6, 2)) == 0.0);
    // k=4 lattice: each node links 3 of its 6 neighbor pairs.
    CHECK(mf::clustering_coefficient(mf::ring_lattice(8, 4)) == 0.5);
    CHECK(mf::clustering_coefficient(mf::ring_lattice(20, 4)) == 0.5);
    CHECK(mf::clustering_coefficient(mf::Graph(5)) == 0.0); // edgeless
}

TEST_CASE("degree-1 nodes contribute zero but stay in the mean") {
    // Triangle plus a pendant node: locals are 1,1,1,0 -> mean 0.75.
    mf::Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    const double c = mf::clustering_coefficient(g);
    // Node 2 has degree 3 and one linked pair: 1/3.
    CHECK(c == Catch::Approx((1.0 + 1.0 + 1.0 / 3.0 + 0.0) / 4.0));
}

TEST_CASE("characteristic path length on frozen cases") {
    CHECK(mf::characteristic_path_length(complete_graph(2)) == 1.0);
    CHECK(mf::characteristic_path_length(complete_graph(7)) == 1.0);
    CHECK(mf::characteristic_path_length(mf::ring_lattice(6, 2)) == 1.8);
}

TEST_CASE("path length raises on disconnected graphs by default") {
    CHECK_THROWS_AS(mf::characteristic_path_length(mf::Graph(3)),
                    mf::DisconnectedGraphError);
    mf::Graph g(5); // triangle + isolated pair
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    CHECK_THROWS_AS(mf::characteristic_path_length(g), mf::DisconnectedGraphError);
    // Largest-component mode averages inside the triangle only.
    CHECK(mf::characteristic_path_length(g, {.largest_component_only = true}) == 1.0);
}

TEST_CASE("metrics match the brute-force oracle on random small graphs") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        mf::Rng pick(seed * 31 + 7);
        const int n = 2 + static_cast<int>(pick.uniform_below(11)); // n <= 12
        const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
        const long long m = static_cast<long long>(pick.uniform_below(max_edges + 1));
        const mf::Graph g = mf::random_graph(n, m, seed);

        CHECK(mf::clustering_coefficient(g) == oracle::clustering(g));
        const auto oracle_l = oracle::path_length(g);
        if (oracle_l.has_value() && n >= 2) {
            CHECK(mf::characteristic_path_length(g) == *oracle_l);
        } else if (!oracle_l.has_value()) {
            CHECK_THROWS_AS(mf::characteristic_path_length(g),
                            mf::DisconnectedGraphError);
        }
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("path length is thread-count invariant") {
    const mf::Graph g = mf::ws_rewire(mf::ring_lattice(300, 6), 0.05, 11);
    const double l1 = mf::characteristic_path_length(g, {.threads = 1});
    const double l4 = mf::characteristic_path_length(g, {.threads = 4});
    CHECK(l1 == l4);
}

TEST_CASE("graph_metrics bundles the pieces") {
    SECTION("ring lattice 8,4") {
        const auto m = mf::graph_metrics(mf::ring_lattice(8, 4));
        CHECK(m.clustering == 0.5);
        CHECK(m.degree_min == 4);
        CHECK(m.degree_max == 4);
        CHECK(m.degree_mean == 4.0);
        CHECK(m.connected);
        REQUIRE(m.path_length.has_value());
    }
    SECTION("K4") {
        const auto m = mf::graph_metrics(complete_graph(4));
        CHECK(m.clustering == 1.0);
        REQUIRE(m.path_length.has_value());
        CHECK(*m.path_length == 1.0);
    }
    SECTION("edgeless graph reports no path length") {
        const auto m = mf::graph_metrics(mf::random_graph(10, 0, 5));
        CHECK_FALSE(m.connected);
        CHECK_FALSE(m.path_length.has_value());
        CHECK(m.degree_mean == 0.0);
    }
}

TEST_CASE("small-world regime: high clustering with short paths") {
    // n=1000, k=10: at p=0.01 clustering barely moves while path length
    // collapses. Averaged over 20 seeds; the full-strength version also runs
    // in the acceptance suite.
    const mf::Graph lattice = mf::ring_lattice(1000, 10);
    const double c0 = mf::clustering_coefficient(lattice);
    const double l0 = mf::characteristic_path_length(lattice);

    double c_sum = 0.0;
    double l_sum = 0.0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) {
        const mf::Graph g = mf::ws_rewire(lattice, 0.01, 500 + s);
        c_sum += mf::clustering_coefficient(g);
        l_sum += mf::characteristic_path_length(g);
    }
    CHECK(c_sum / seeds / c0 >= 0.75);
    CHECK(l_sum / seeds / l0 <= 0.5);
}
