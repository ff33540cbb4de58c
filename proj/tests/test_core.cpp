#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "templab/accessibility.hpp"
#include "templab/graph.hpp"
#include "templab/minimality.hpp"
#include "templab/reachability.hpp"
#include "templab/temporal_graph.hpp"

using namespace templab;

namespace {

TemporalGraph path3() {
    // 0 -{1,3}- 1 -{2}- 2, a minimal temporally connected path.
    TemporalGraph g;
    g.footprint.n = 3;
    g.add_edge(0, 1, {1, 3});
    g.add_edge(1, 2, {2});
    return g;
}

TemporalGraph random_temporal(std::mt19937& rng, int n, double edge_p, int max_label) {
    TemporalGraph g;
    g.footprint.n = n;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> lab(1, max_label);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng) > edge_p) continue;
            std::vector<int> labels;
            int k = 1 + static_cast<int>(coin(rng) * 3);
            for (int i = 0; i < k; ++i) labels.push_back(lab(rng));
            std::sort(labels.begin(), labels.end());
            labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
            g.add_edge(u, v, labels);
        }
    return g;
}

}  // namespace

TEST_CASE("footprint basics") {
    Graph g;
    g.n = 4;
    g.add_edge(2, 0);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    REQUIRE(g.edges == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(g.has_edge(2, 1));
    REQUIRE_FALSE(g.has_edge(0, 3));
    REQUIRE_THROWS(make_vertex_pair(1, 1));
    REQUIRE_FALSE(is_connected(g));
    g.add_edge(2, 3);
    REQUIRE(is_connected(g));
    REQUIRE_FALSE(is_tree(g));
}

TEST_CASE("cycle recognition and order") {
    Graph c5;
    c5.n = 5;
    for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    REQUIRE(is_cycle(c5));
    REQUIRE(is_canonical_cycle(c5));
    REQUIRE(cycle_order(c5) == std::vector<int>{0, 1, 2, 3, 4});

    Graph scrambled;  // cycle 0-3-1-4-2-0
    scrambled.n = 5;
    scrambled.add_edge(0, 3);
    scrambled.add_edge(3, 1);
    scrambled.add_edge(1, 4);
    scrambled.add_edge(4, 2);
    scrambled.add_edge(2, 0);
    REQUIRE(is_cycle(scrambled));
    REQUIRE_FALSE(is_canonical_cycle(scrambled));
    REQUIRE(cycle_order(scrambled) == std::vector<int>{0, 2, 4, 1, 3});
}

TEST_CASE("bridges and blocks of a small cactus") {
    // Triangle 0-1-2, bridge 2-3, square 3-4-5-6.
    Graph g;
    g.n = 7;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(3, 6);
    auto blocks = biconnected_components(g);
    REQUIRE(blocks.size() == 3);
    REQUIRE(bridges(g) == std::vector<VertexPair>{{2, 3}});
}

TEST_CASE("labelling class validation") {
    TemporalGraph g;
    g.footprint.n = 3;
    g.add_edge(0, 1, {2});
    g.add_edge(1, 2, {2});
    REQUIRE(validate(g, LabellingClass::Strict).ok());
    REQUIRE_FALSE(validate(g, LabellingClass::Proper).ok());
    REQUIRE_FALSE(validate(g, LabellingClass::Happy).ok());

    TemporalGraph h = path3();
    REQUIRE(validate(h, LabellingClass::Proper).ok());
    REQUIRE_FALSE(validate(h, LabellingClass::Happy).ok());  // two labels on one edge
}

TEST_CASE("density report and global bounds") {
    TemporalGraph g = path3();
    DensityReport r = density(g, LabellingClass::Proper);
    REQUIRE(r.n == 3);
    REQUIRE(r.m == 2);
    REQUIRE(r.total_labels == 3);
    REQUIRE(r.temporality == 2);
    REQUIRE(r.max_label == 3);
    REQUIRE(check_global_bounds(r));  // T=3 <= 5, tau=2 <= 2

    DensityReport bad = r;
    bad.temporality = 3;
    REQUIRE_FALSE(check_global_bounds(bad));
}

TEST_CASE("journey validity") {
    TemporalGraph g = path3();
    Journey ok{0, 2, {{0, 1}, {1, 2}}};
    REQUIRE(is_valid_journey(g, ok));
    Journey decreasing{2, 0, {{1, 2}, {0, 1}}};
    REQUIRE_FALSE(is_valid_journey(g, decreasing));
    Journey wrong_label{0, 1, {{0, 2}}};
    REQUIRE_FALSE(is_valid_journey(g, wrong_label));
}

TEST_CASE("earliest arrival on a path") {
    TemporalGraph g = path3();
    Branching from0 = earliest_arrival(g, 0);
    REQUIRE(from0.covered_count() == g.n());
    REQUIRE(*from0.arrival[1] == 1);
    REQUIRE(*from0.arrival[2] == 2);
    Journey j = from0.extract_journey(g, 2);
    REQUIRE(is_valid_journey(g, j));
    REQUIRE(j.contacts.size() == 2);

    Branching from2 = earliest_arrival(g, 2);
    REQUIRE(*from2.arrival[0] == 3);
    REQUIRE(is_temporally_connected(g));
}

TEST_CASE("earliest arrival is prefix-foremost along its journeys") {
    std::mt19937 rng(20260826);
    for (int it = 0; it < 50; ++it) {
        TemporalGraph g = random_temporal(rng, 6, 0.5, 8);
        for (int s = 0; s < g.n(); ++s) {
            Branching b = earliest_arrival(g, s);
            for (int v = 0; v < g.n(); ++v) {
                if (!b.arrival[v] || v == s) continue;
                Journey j = b.extract_journey(g, v);
                REQUIRE(is_valid_journey(g, j));
                REQUIRE(j.contacts.back().label == *b.arrival[v]);
                // Every prefix of the journey arrives at the recorded optimum.
                int at = s;
                for (const Contact& c : j.contacts) {
                    auto [x, y] = g.footprint.edges[c.edge];
                    at = (at == x) ? y : x;
                    REQUIRE(*b.arrival[at] == c.label);
                }
            }
        }
    }
}

TEST_CASE("replay accessibility matches the reachability matrix") {
    std::mt19937 rng(7);
    for (int it = 0; it < 80; ++it) {
        TemporalGraph g = random_temporal(rng, 5, 0.6, 6);
        auto state = replay_accessibility<DynBitset>(g);
        ReachabilityMatrix m = reachability_graph(g);
        for (int v = 0; v < g.n(); ++v)
            for (int u = 0; u < g.n(); ++u)
                REQUIRE(state.reach[v].test(u) == m(u, v));
        REQUIRE(state.temporally_connected() == m.complete());
    }
}

TEST_CASE("replay necessity agrees with deletion-defined necessity") {
    std::mt19937 rng(99);
    for (int it = 0; it < 60; ++it) {
        TemporalGraph g = random_temporal(rng, 5, 0.6, 5);
        for (auto& [contact, necessary] : necessity_by_replay<DynBitset>(g))
            REQUIRE(necessary == is_label_necessary(g, contact));
    }
}

TEST_CASE("arc and bitset replays agree on cycle footprints") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> lab(1, 10);
    for (int it = 0; it < 40; ++it) {
        int n = 4 + it % 5;
        TemporalGraph g;
        g.footprint.n = n;
        for (int v = 0; v < n; ++v) {
            std::vector<int> labels{lab(rng)};
            if (it % 3 == 0) labels.push_back(lab(rng));
            std::sort(labels.begin(), labels.end());
            labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
            g.add_edge(v, (v + 1) % n, labels);
        }
        auto arcs = necessity_by_replay<CycleArc>(g);
        auto bits = necessity_by_replay<DynBitset>(g);
        REQUIRE(arcs.size() == bits.size());
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            REQUIRE(arcs[i].first == bits[i].first);
            REQUIRE(arcs[i].second == bits[i].second);
        }
        REQUIRE(is_minimal_with<CycleArc>(g) == is_minimal_with<DynBitset>(g));
    }
}

TEST_CASE("is_label_necessary rejects missing contacts") {
    TemporalGraph g = path3();
    REQUIRE_THROWS(is_label_necessary(g, Contact{0, 7}));
}

TEST_CASE("minimalize preserves reachability and reaches minimality") {
    std::mt19937 rng(5150);
    for (int it = 0; it < 40; ++it) {
        TemporalGraph g = random_temporal(rng, 6, 0.7, 7);
        ReachabilityMatrix before = reachability_graph(g);
        TemporalGraph m = minimalize(g);
        REQUIRE(reachability_graph(m) == before);
        REQUIRE(is_minimal(m));
        REQUIRE(m.total_labels() <= g.total_labels());

        TemporalGraph m2 = minimalize(g, RemovalOrder::AscendingLabels);
        REQUIRE(reachability_graph(m2) == before);
        REQUIRE(is_minimal(m2));
    }
}

TEST_CASE("minimal labellings are exactly covered by earliest-arrival branchings") {
    TemporalGraph g = path3();
    REQUIRE(spanning_branchings_union_check(g));

    TemporalGraph padded = g;
    padded.add_label(0, 1, 5);
    REQUIRE_THROWS(spanning_branchings_union_check(padded));

    std::mt19937 rng(321);
    for (int it = 0; it < 30; ++it) {
        TemporalGraph r = random_temporal(rng, 6, 0.8, 8);
        if (!is_temporally_connected(r)) continue;
        TemporalGraph m = minimalize(r);
        REQUIRE(spanning_branchings_union_check(m));
    }
}

TEST_CASE("bridge windows on a path") {
    TemporalGraph g = path3();
    BridgeWindows w = bridge_windows(g, {0, 1});
    REQUIRE(w.t_u_minus == 0);
    REQUIRE(w.t_u_plus == BridgeWindows::kUnbounded);
    REQUIRE(w.t_v_minus == 2);
    REQUIRE(w.t_v_plus == 2);
    REQUIRE(w.sufficient_labels == std::vector<int>{1, 3});

    // Keeping only the sufficient labels preserves reachability.
    TemporalGraph kept = g;  // both labels are needed here, nothing to drop
    REQUIRE(reachability_graph(kept) == reachability_graph(g));
}

TEST_CASE("bridge windows collapse to one label when possible") {
    TemporalGraph g;
    g.footprint.n = 3;
    g.add_edge(0, 1, {2});
    g.add_edge(1, 2, {1, 3});
    BridgeWindows w = bridge_windows(g, {0, 1});
    REQUIRE(w.sufficient_labels == std::vector<int>{2});
}

TEST_CASE("bridge windows keep reachability after pruning extra bridge labels") {
    TemporalGraph g;
    g.footprint.n = 4;
    g.add_edge(0, 1, {1, 3});           // side {0,1}
    g.add_edge(1, 2, {1, 2, 3, 4, 5});  // the bridge
    g.add_edge(2, 3, {1, 5});           // side {2,3}
    REQUIRE(is_temporally_connected(g));
    BridgeWindows w = bridge_windows(g, {1, 2});
    REQUIRE(w.sufficient_labels == std::vector<int>{2});
    TemporalGraph pruned = g;
    for (int l : std::vector<int>{1, 2, 3, 4, 5}) {
        bool keep = std::find(w.sufficient_labels.begin(), w.sufficient_labels.end(),
                              l) != w.sufficient_labels.end();
        if (!keep) pruned.remove_contact(Contact{1, l});
    }
    REQUIRE(reachability_graph(pruned) == reachability_graph(g));
}

TEST_CASE("bridge windows reject non-bridges") {
    TemporalGraph g;
    g.footprint.n = 3;
    g.add_edge(0, 1, {1});
    g.add_edge(1, 2, {2});
    g.add_edge(0, 2, {3});
    REQUIRE_THROWS(bridge_windows(g, {0, 1}));
}
