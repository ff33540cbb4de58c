#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <vector>

#include "templab/accessibility.hpp"
#include "templab/reachability.hpp"
#include "templab/temporal_graph.hpp"

namespace templab {

// A contact is necessary when deleting it changes the reachability relation.
inline bool is_label_necessary(const TemporalGraph& g, const Contact& c) {
    TemporalGraph reduced = g;
    reduced.remove_contact(c);  // throws if the contact does not exist
    return !(reachability_graph(reduced) == reachability_graph(g));
}

// Necessity of every contact in one replay pass.
template <class Set>
std::vector<std::pair<Contact, bool>> necessity_by_replay(const TemporalGraph& g) {
    auto state = replay_accessibility<Set>(g);
    std::vector<std::pair<Contact, bool>> result;
    result.reserve(state.minus.size());
    for (std::size_t k = 0; k < state.minus.size(); ++k)
        result.emplace_back(state.minus[k].contact, !state.entry_redundant(k));
    return result;
}

template <class Set>
bool is_minimal_with(const TemporalGraph& g) {
    auto state = replay_accessibility<Set>(g);
    return state.redundant_entry() < 0;
}

// A labelling is minimal when every contact is necessary. Cycle footprints
// use the arc representation (every reachable-to set is a contiguous arc of
// the cycle when vertices are numbered along it).
inline bool is_minimal(const TemporalGraph& g) {
    if (is_canonical_cycle(g.footprint)) return is_minimal_with<CycleArc>(g);
    return is_minimal_with<DynBitset>(g);
}

enum class RemovalOrder {
    DescendingLabels,  // largest label first; ties by lexicographic edge
    AscendingLabels,
};

// Greedily deletes redundant contacts until the labelling is minimal. The
// reachability relation is preserved at every step, so each candidate is
// checked against the original matrix. A contact that is necessary once
// stays necessary as further contacts are deleted, so one pass suffices.
inline TemporalGraph minimalize(const TemporalGraph& g,
                                RemovalOrder order = RemovalOrder::DescendingLabels) {
    ReachabilityMatrix target = reachability_graph(g);
    std::vector<Contact> candidates = g.contacts();
    std::sort(candidates.begin(), candidates.end(),
              [&](const Contact& a, const Contact& b) {
                  if (a.label != b.label)
                      return order == RemovalOrder::DescendingLabels
                                 ? a.label > b.label
                                 : a.label < b.label;
                  return g.footprint.edges[a.edge] < g.footprint.edges[b.edge];
              });
    TemporalGraph current = g;
    for (const Contact& c : candidates) {
        TemporalGraph trial = current;
        trial.remove_contact(c);
        if (reachability_graph(trial) == target) current = std::move(trial);
    }
    return current;
}

// For a minimal temporally connected labelling, the union of the contacts
// used by one earliest-arrival branching per root must cover every contact.
inline bool spanning_branchings_union_check(const TemporalGraph& g) {
    if (!is_temporally_connected(g) || !is_minimal(g))
        throw std::invalid_argument(
            "spanning_branchings_union_check requires a minimal temporally "
            "connected labelling");
    std::vector<std::vector<char>> used_label(g.footprint.edges.size());
    for (std::size_t e = 0; e < g.footprint.edges.size(); ++e)
        used_label[e].assign(g.labels[e].size(), 0);
    for (int root = 0; root < g.n(); ++root) {
        Branching b = earliest_arrival(g, root);
        for (int v = 0; v < g.n(); ++v) {
            if (!b.parent_contact[v]) continue;
            const Contact& c = *b.parent_contact[v];
            const auto& ls = g.labels[c.edge];
            auto it = std::lower_bound(ls.begin(), ls.end(), c.label);
            used_label[c.edge][it - ls.begin()] = 1;
        }
    }
    for (const auto& row : used_label)
        for (char u : row)
            if (!u) return false;
    return true;
}

// Deletion windows across a bridge. Journeys are confined to the bridge's
// two sides; sentinel kUnbounded marks a +infinity upper bound (single-vertex
// side).
struct BridgeWindows {
    static constexpr int kUnbounded = std::numeric_limits<int>::max();
    VertexPair bridge{0, 0};
    // Crossing u -> v must happen strictly inside (t_u_minus, t_v_plus);
    // crossing v -> u strictly inside (t_v_minus, t_u_plus).
    int t_u_minus = 0;
    int t_u_plus = kUnbounded;
    int t_v_minus = 0;
    int t_v_plus = kUnbounded;
    std::vector<int> sufficient_labels;  // 1 or 2 bridge labels that suffice
};

namespace detail {

// Vertices on the `keep` side of the footprint once `bridge` is removed.
inline std::vector<int> bridge_side(const Graph& g, VertexPair bridge, int keep) {
    auto adj = g.adjacency();
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{keep}, side;
    seen[keep] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        side.push_back(v);
        for (int w : adj[v]) {
            if (v == bridge.first && w == bridge.second) continue;
            if (v == bridge.second && w == bridge.first) continue;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(side.begin(), side.end());
    return side;
}

// Temporal subgraph induced on `side`, with vertices renumbered by position.
inline TemporalGraph induced_side(const TemporalGraph& g, const std::vector<int>& side) {
    std::vector<int> index(g.n(), -1);
    for (std::size_t i = 0; i < side.size(); ++i) index[side[i]] = static_cast<int>(i);
    TemporalGraph sub;
    sub.footprint.n = static_cast<int>(side.size());
    for (std::size_t e = 0; e < g.footprint.edges.size(); ++e) {
        auto [u, v] = g.footprint.edges[e];
        if (index[u] < 0 || index[v] < 0) continue;
        sub.add_edge(index[u], index[v], g.labels[e]);
    }
    return sub;
}

// Largest earliest-arrival time at `target` over all sources of `sub`, or
// nullopt when someone cannot reach it at all.
inline std::optional<int> latest_in_arrival(const TemporalGraph& sub, int target) {
    int worst = 0;
    for (int s = 0; s < sub.n(); ++s) {
        if (s == target) continue;
        Branching b = earliest_arrival(sub, s);
        if (!b.arrival[target]) return std::nullopt;
        worst = std::max(worst, *b.arrival[target]);
    }
    return worst;
}

// Largest threshold s such that `source` still reaches all of `sub` using
// only labels >= s, or nullopt when even the full labelling does not suffice.
inline std::optional<int> latest_out_start(const TemporalGraph& sub, int source) {
    std::vector<int> thresholds;
    for (const auto& ls : sub.labels) thresholds.insert(thresholds.end(), ls.begin(), ls.end());
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    for (int s : thresholds) {
        TemporalGraph filtered;
        filtered.footprint.n = sub.n();
        for (std::size_t e = 0; e < sub.footprint.edges.size(); ++e) {
            std::vector<int> kept;
            for (int l : sub.labels[e])
                if (l >= s) kept.push_back(l);
            if (!kept.empty())
                filtered.add_edge(sub.footprint.edges[e].first,
                                  sub.footprint.edges[e].second, kept);
        }
        if (earliest_arrival(filtered, source).covered_count() == sub.n()) return s;
    }
    return std::nullopt;
}

}  // namespace detail

// Windows for the labels of a bridge {u,v}: which bridge labels must be kept
// so each side still reaches the other, and a minimal sufficient choice.
inline BridgeWindows bridge_windows(const TemporalGraph& g, VertexPair bridge) {
    auto bs = bridges(g.footprint);
    if (std::find(bs.begin(), bs.end(), bridge) == bs.end())
        throw std::invalid_argument("bridge_windows: edge is not a bridge");
    int e = g.footprint.edge_index(bridge.first, bridge.second);
    if (g.labels[e].empty())
        throw std::invalid_argument("bridge_windows: bridge has no labels");

    BridgeWindows w;
    w.bridge = bridge;
    auto compute = [&](int anchor) -> std::pair<int, int> {
        std::vector<int> side = detail::bridge_side(g.footprint, bridge, anchor);
        if (side.size() == 1) return {0, BridgeWindows::kUnbounded};
        TemporalGraph sub = detail::induced_side(g, side);
        int a = static_cast<int>(std::lower_bound(side.begin(), side.end(), anchor) -
                                 side.begin());
        auto in = detail::latest_in_arrival(sub, a);
        auto out = detail::latest_out_start(sub, a);
        if (!in || !out)
            throw std::invalid_argument(
                "bridge_windows: input not temporally connected across bridge");
        return {*in, *out};
    };
    std::tie(w.t_u_minus, w.t_u_plus) = compute(bridge.first);
    std::tie(w.t_v_minus, w.t_v_plus) = compute(bridge.second);

    auto in_window = [](int l, int lo, int hi) {
        return l > lo && (hi == BridgeWindows::kUnbounded || l < hi);
    };
    std::optional<int> both, fwd, bwd;
    for (int l : g.labels[e]) {  // ascending, so first hits are smallest
        bool f = in_window(l, w.t_u_minus, w.t_v_plus);
        bool b = in_window(l, w.t_v_minus, w.t_u_plus);
        if (f && b && !both) both = l;
        if (f && !fwd) fwd = l;
        if (b && !bwd) bwd = l;
    }
    if (both) {
        w.sufficient_labels = {*both};
    } else {
        if (!fwd || !bwd)
            throw std::invalid_argument(
                "bridge_windows: input not temporally connected across bridge");
        w.sufficient_labels = {std::min(*fwd, *bwd), std::max(*fwd, *bwd)};
    }
    return w;
}

}  // namespace templab
