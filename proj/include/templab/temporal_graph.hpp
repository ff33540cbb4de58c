#pragma once

// Temporal graphs: a footprint plus a label multiset per edge. Labels are
// positive integers; the sequence on each edge is strictly ascending.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "templab/graph.hpp"

namespace templab {

enum class LabellingClass { Proper, Happy, Strict };

inline const char* to_string(LabellingClass c) {
    switch (c) {
        case LabellingClass::Proper: return "proper";
        case LabellingClass::Happy: return "happy";
        case LabellingClass::Strict: return "strict";
    }
    return "?";
}

inline LabellingClass labelling_class_from_string(const std::string& s) {
    if (s == "proper") return LabellingClass::Proper;
    if (s == "happy") return LabellingClass::Happy;
    if (s == "strict") return LabellingClass::Strict;
    throw std::invalid_argument("unknown labelling class: " + s);
}

// One presence of one edge at one time.
struct Contact {
    int edge = -1;  // index into TemporalGraph edges
    int label = 0;

    friend bool operator==(const Contact&, const Contact&) = default;
    friend auto operator<=>(const Contact&, const Contact&) = default;
};

struct TemporalGraph {
    Graph footprint;
    std::vector<std::vector<int>> labels;  // per edge, strictly ascending

    TemporalGraph() = default;
    explicit TemporalGraph(Graph g)
        : footprint(std::move(g)), labels(footprint.edges.size()) {}

    int n() const { return footprint.n; }
    int m() const { return static_cast<int>(footprint.edges.size()); }

    void add_edge(int u, int v, std::vector<int> edge_labels = {}) {
        auto e = make_vertex_pair(u, v);
        footprint.add_edge(u, v);
        int idx = footprint.edge_index(e.first, e.second);
        labels.insert(labels.begin() + idx, std::move(edge_labels));
    }

    void add_label(int u, int v, int label) {
        int idx = footprint.edge_index(u, v);
        if (idx < 0) throw std::invalid_argument("no such edge");
        auto& ls = labels[idx];
        auto it = std::lower_bound(ls.begin(), ls.end(), label);
        if (it != ls.end() && *it == label)
            throw std::invalid_argument("duplicate label on edge");
        ls.insert(it, label);
    }

    bool has_contact(const Contact& c) const {
        if (c.edge < 0 || c.edge >= m()) return false;
        const auto& ls = labels[c.edge];
        return std::binary_search(ls.begin(), ls.end(), c.label);
    }

    void remove_contact(const Contact& c) {
        if (!has_contact(c)) throw std::invalid_argument("no such contact");
        auto& ls = labels[c.edge];
        ls.erase(std::lower_bound(ls.begin(), ls.end(), c.label));
    }

    std::vector<Contact> contacts() const {
        std::vector<Contact> cs;
        for (int e = 0; e < m(); ++e)
            for (int l : labels[e]) cs.push_back({e, l});
        return cs;
    }

    int total_labels() const {
        int t = 0;
        for (const auto& ls : labels) t += static_cast<int>(ls.size());
        return t;
    }

    int max_labels_on_edge() const {
        std::size_t t = 0;
        for (const auto& ls : labels) t = std::max(t, ls.size());
        return static_cast<int>(t);
    }

    int max_label() const {
        int t = 0;
        for (const auto& ls : labels)
            if (!ls.empty()) t = std::max(t, ls.back());
        return t;
    }

    friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
        return a.footprint.n == b.footprint.n && a.footprint.edges == b.footprint.edges &&
               a.labels == b.labels;
    }
};

struct DensityReport {
    int n = 0;
    int m = 0;
    int total_labels = 0;   // T
    int temporality = 0;    // tau
    int max_label = 0;      // L
    LabellingClass labelling_class = LabellingClass::Proper;

    friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

inline DensityReport density(const TemporalGraph& g,
                             LabellingClass cls = LabellingClass::Proper) {
    return {g.n(), g.m(), g.total_labels(), g.max_labels_on_edge(), g.max_label(), cls};
}

// Soundness guard for minimal temporally connected proper graphs:
// T <= n^2 - n - 1 and tau <= n - 1.
inline bool check_global_bounds(const DensityReport& r) {
    std::int64_t n = r.n;
    return r.total_labels <= n * n - n - 1 && r.temporality <= n - 1;
}

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline ValidationReport validate(const TemporalGraph& g, LabellingClass cls) {
    ValidationReport report;
    auto flag = [&](const std::string& msg) { report.violations.push_back(msg); };

    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.footprint.edges[e];
        const auto& ls = g.labels[e];
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (ls[i] <= 0) {
                std::ostringstream os;
                os << "edge {" << u << "," << v << "}: label " << ls[i] << " not positive";
                flag(os.str());
            }
            if (i > 0 && ls[i] <= ls[i - 1]) {
                std::ostringstream os;
                os << "edge {" << u << "," << v << "}: labels not strictly ascending";
                flag(os.str());
            }
        }
        if (cls == LabellingClass::Happy && ls.size() > 1) {
            std::ostringstream os;
            os << "edge {" << u << "," << v << "} carries " << ls.size()
               << " labels (happy allows at most 1)";
            flag(os.str());
        }
    }

    if (cls == LabellingClass::Proper || cls == LabellingClass::Happy) {
        for (int e = 0; e < g.m(); ++e)
            for (int f = e + 1; f < g.m(); ++f) {
                auto [a, b] = g.footprint.edges[e];
                auto [c, d] = g.footprint.edges[f];
                if (a != c && a != d && b != c && b != d) continue;
                for (int l : g.labels[e])
                    if (std::binary_search(g.labels[f].begin(), g.labels[f].end(), l)) {
                        std::ostringstream os;
                        os << "incident edges {" << a << "," << b << "} and {" << c << ","
                           << d << "} share label " << l;
                        flag(os.str());
                    }
            }
    }
    return report;
}

}  // namespace templab
