#pragma once

// Journeys, earliest-arrival search, and the reachability graph.
// Journeys use strictly increasing labels in every labelling class.

#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "templab/temporal_graph.hpp"

namespace templab {

struct Journey {
    int start = -1;
    int end = -1;
    std::vector<Contact> contacts;

    friend bool operator==(const Journey&, const Journey&) = default;
};

// Walk-consistency plus strict label increase, against a host graph.
inline bool is_valid_journey(const TemporalGraph& g, const Journey& j) {
    int at = j.start;
    int last = 0;
    for (const auto& c : j.contacts) {
        if (!g.has_contact(c)) return false;
        if (c.label <= last) return false;
        auto [u, v] = g.footprint.edges[c.edge];
        if (u == at)
            at = v;
        else if (v == at)
            at = u;
        else
            return false;
        last = c.label;
    }
    return at == j.end;
}

// A prefix-foremost branching rooted at one vertex. Vertices the root cannot
// reach have no arrival entry.
struct Branching {
    int root = -1;
    std::vector<std::optional<Contact>> parent_contact;  // per vertex; root = nullopt
    std::vector<std::optional<int>> arrival;             // root = 0; unreached = nullopt

    bool covers(int v) const { return arrival[v].has_value(); }

    int covered_count() const {
        int c = 0;
        for (const auto& a : arrival) c += a.has_value();
        return c;
    }

    // The journey root ~> v encoded by the parent contacts.
    Journey extract_journey(const TemporalGraph& g, int v) const {
        if (!covers(v)) throw std::invalid_argument("vertex not covered by branching");
        Journey j;
        j.start = root;
        j.end = v;
        int at = v;
        while (at != root) {
            const Contact& c = *parent_contact[at];
            j.contacts.push_back(c);
            auto [x, y] = g.footprint.edges[c.edge];
            at = (x == at) ? y : x;
        }
        std::reverse(j.contacts.begin(), j.contacts.end());
        return j;
    }
};

// Earliest-arrival search from a source: a Dijkstra-style sweep that always
// expands the vertex with the smallest arrival time and crosses each edge at
// the smallest label strictly after that time.
inline Branching earliest_arrival(const TemporalGraph& g, int source) {
    if (source < 0 || source >= g.n()) throw std::invalid_argument("source out of range");
    Branching b;
    b.root = source;
    b.parent_contact.assign(g.n(), std::nullopt);
    b.arrival.assign(g.n(), std::nullopt);
    b.arrival[source] = 0;

    std::vector<std::vector<std::pair<int, int>>> inc(g.n());  // vertex -> (edge, other)
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.footprint.edges[e];
        inc[u].emplace_back(e, v);
        inc[v].emplace_back(e, u);
    }

    using Item = std::pair<int, int>;  // (arrival, vertex)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, source});
    while (!pq.empty()) {
        auto [t, v] = pq.top();
        pq.pop();
        if (*b.arrival[v] != t) continue;
        for (auto [e, w] : inc[v]) {
            const auto& ls = g.labels[e];
            auto it = std::upper_bound(ls.begin(), ls.end(), t);
            if (it == ls.end()) continue;
            if (!b.arrival[w] || *it < *b.arrival[w]) {
                b.arrival[w] = *it;
                b.parent_contact[w] = Contact{e, *it};
                pq.push({*it, w});
            }
        }
    }
    return b;
}

struct ReachabilityMatrix {
    int n = 0;
    std::vector<char> reach;  // row-major (u, v)

    explicit ReachabilityMatrix(int n_ = 0) : n(n_), reach(n_ * n_, 0) {
        for (int v = 0; v < n; ++v) reach[v * n + v] = 1;
    }

    bool operator()(int u, int v) const { return reach[u * n + v] != 0; }
    void set(int u, int v) { reach[u * n + v] = 1; }

    bool complete() const {
        for (char c : reach)
            if (!c) return false;
        return true;
    }

    friend bool operator==(const ReachabilityMatrix&, const ReachabilityMatrix&) = default;
};

// One earliest-arrival sweep per source; temporal reachability is not
// transitive over time, so no closure shortcuts.
inline ReachabilityMatrix reachability_graph(const TemporalGraph& g) {
    ReachabilityMatrix r(g.n());
    for (int u = 0; u < g.n(); ++u) {
        Branching b = earliest_arrival(g, u);
        for (int v = 0; v < g.n(); ++v)
            if (b.covers(v)) r.set(u, v);
    }
    return r;
}

inline bool is_temporally_connected(const TemporalGraph& g) {
    for (int u = 0; u < g.n(); ++u)
        if (earliest_arrival(g, u).covered_count() != g.n()) return false;
    return true;
}

}  // namespace templab
