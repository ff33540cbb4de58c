#pragma once

// Incremental accessibility state: per-vertex "who can reach me" sets A(v)
// plus, for every contact (l,e), the label-deleted variant A^{-l,e}(v).
// Contacts are replayed in ascending label order; all contacts sharing one
// label value form a batch and are applied with snapshot semantics, so
// incident equal labels (strict class) never chain within a batch.
//
// Two set representations: a plain bitset for general footprints, and a
// contiguous-arc encoding valid on cycle footprints where every A(v) is an
// arc containing v.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "templab/temporal_graph.hpp"

namespace templab {

class DynBitset {
public:
    DynBitset() = default;

    static DynBitset singleton(int n, int v) {
        DynBitset b;
        b.n_ = n;
        b.words_.assign((n + 63) / 64, 0);
        b.words_[v >> 6] |= std::uint64_t{1} << (v & 63);
        b.count_ = 1;
        return b;
    }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    // Returns true if this set grew.
    bool unite(const DynBitset& other) {
        bool changed = false;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t merged = words_[i] | other.words_[i];
            if (merged != words_[i]) {
                words_[i] = merged;
                changed = true;
            }
        }
        if (changed) recount();
        return changed;
    }

    int count() const { return count_; }
    bool full() const { return count_ == n_; }

    friend bool operator==(const DynBitset& a, const DynBitset& b) {
        return a.words_ == b.words_;
    }

private:
    void recount() {
        count_ = 0;
        for (std::uint64_t w : words_) count_ += __builtin_popcountll(w);
    }

    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> words_;
};

// Contiguous arc {start, start+1, ..., start+len-1} (mod n) of a cycle's
// vertex order. Unions require the operands to overlap or touch, which holds
// whenever both arcs are anchored at adjacent cycle positions.
class CycleArc {
public:
    CycleArc() = default;

    static CycleArc singleton(int n, int v) {
        CycleArc a;
        a.n_ = n;
        a.start_ = v;
        a.len_ = 1;
        return a;
    }

    bool test(int v) const {
        int d = v - start_;
        if (d < 0) d += n_;
        return d < len_;
    }

    bool unite(const CycleArc& other) {
        if (len_ == n_) return false;
        if (other.len_ == n_) {
            start_ = 0;
            len_ = n_;
            return true;
        }
        int d = other.start_ - start_;
        if (d < 0) d += n_;
        if (d <= len_) {
            int merged = d + other.len_;
            if (merged <= len_) return false;
            len_ = merged >= n_ ? n_ : merged;
            if (len_ == n_) start_ = 0;
            return true;
        }
        int d2 = start_ - other.start_;
        if (d2 < 0) d2 += n_;
        if (d2 > other.len_)
            throw std::logic_error("CycleArc::unite on disjoint arcs");
        int merged = d2 + len_;
        start_ = other.start_;
        len_ = merged >= n_ ? n_ : std::max(other.len_, merged);
        if (len_ == n_) start_ = 0;
        return true;
    }

    int count() const { return len_; }
    bool full() const { return len_ == n_; }

    friend bool operator==(const CycleArc& a, const CycleArc& b) {
        return a.len_ == b.len_ && (a.start_ == b.start_ || a.len_ == a.n_);
    }

private:
    int n_ = 0;
    int start_ = 0;
    int len_ = 0;
};

template <class Set>
struct AccessibilityState {
    struct MinusEntry {
        Contact contact;
        std::vector<Set> sets;       // per vertex: reachable-to without this contact
        std::int64_t count_sum = 0;  // sum of sets[v].count()
    };

    int n = 0;
    std::vector<Set> reach;  // A(v)
    std::int64_t reach_count_sum = 0;
    std::vector<MinusEntry> minus;

    static AccessibilityState initial(int n) {
        AccessibilityState s;
        s.n = n;
        s.reach.reserve(n);
        for (int v = 0; v < n; ++v) s.reach.push_back(Set::singleton(n, v));
        s.reach_count_sum = n;
        return s;
    }

    // Apply every contact of one label value at once. `batch_edges` holds the
    // endpoint pairs; `batch_contacts` the matching (edge,label) contacts.
    void apply_batch(const std::vector<VertexPair>& batch_edges,
                     const std::vector<Contact>& batch_contacts) {
        assert(batch_edges.size() == batch_contacts.size());
        // Snapshot of A at the batch endpoints, pre-update.
        std::vector<Set> old_at(batch_edges.size() * 2);
        for (std::size_t i = 0; i < batch_edges.size(); ++i) {
            old_at[2 * i] = reach[batch_edges[i].first];
            old_at[2 * i + 1] = reach[batch_edges[i].second];
        }

        // New entries: copy of pre-batch A, then sibling unions (a journey
        // avoiding contact (l,e) may still use the other label-l contacts).
        std::size_t first_new = minus.size();
        for (std::size_t i = 0; i < batch_edges.size(); ++i) {
            MinusEntry entry;
            entry.contact = batch_contacts[i];
            entry.sets = reach;
            entry.count_sum = reach_count_sum;
            minus.push_back(std::move(entry));
        }
        for (std::size_t i = 0; i < batch_edges.size(); ++i) {
            MinusEntry& entry = minus[first_new + i];
            for (std::size_t j = 0; j < batch_edges.size(); ++j) {
                if (j == i) continue;
                unite_at(entry, batch_edges[j].first, old_at[2 * j + 1]);
                unite_at(entry, batch_edges[j].second, old_at[2 * j]);
            }
        }

        // Earlier entries: union across every batch edge, from each entry's
        // own pre-batch values (snapshotted, so equal labels never chain).
        std::vector<Set> entry_old(batch_edges.size() * 2);
        for (std::size_t k = 0; k < first_new; ++k) {
            MinusEntry& entry = minus[k];
            for (std::size_t i = 0; i < batch_edges.size(); ++i) {
                entry_old[2 * i] = entry.sets[batch_edges[i].first];
                entry_old[2 * i + 1] = entry.sets[batch_edges[i].second];
            }
            for (std::size_t i = 0; i < batch_edges.size(); ++i) {
                unite_at(entry, batch_edges[i].first, entry_old[2 * i + 1]);
                unite_at(entry, batch_edges[i].second, entry_old[2 * i]);
            }
        }

        // A itself, from the snapshots.
        for (std::size_t i = 0; i < batch_edges.size(); ++i) {
            auto [u, v] = batch_edges[i];
            int before_u = reach[u].count();
            if (reach[u].unite(old_at[2 * i + 1]))
                reach_count_sum += reach[u].count() - before_u;
            int before_v = reach[v].count();
            if (reach[v].unite(old_at[2 * i]))
                reach_count_sum += reach[v].count() - before_v;
        }
    }

    bool temporally_connected() const {
        return reach_count_sum == std::int64_t{1} * n * n;
    }

    // Index of a contact whose deletion leaves reachability unchanged, or -1.
    // A^{-l,e}(v) is always a subset of A(v), so equal count sums mean equal
    // sets everywhere.
    int redundant_entry() const {
        for (std::size_t k = 0; k < minus.size(); ++k)
            if (minus[k].count_sum == reach_count_sum) return static_cast<int>(k);
        return -1;
    }

    bool entry_redundant(std::size_t k) const {
        return minus[k].count_sum == reach_count_sum;
    }

private:
    static void unite_at(MinusEntry& entry, int vertex, const Set& with) {
        int before = entry.sets[vertex].count();
        if (entry.sets[vertex].unite(with))
            entry.count_sum += entry.sets[vertex].count() - before;
    }
};

// Replays an entire labelling, batching contacts by label value.
template <class Set>
AccessibilityState<Set> replay_accessibility(const TemporalGraph& g) {
    auto state = AccessibilityState<Set>::initial(g.n());
    std::vector<Contact> cs = g.contacts();
    std::sort(cs.begin(), cs.end(),
              [](const Contact& a, const Contact& b) { return a.label < b.label; });
    std::size_t i = 0;
    std::vector<VertexPair> batch_edges;
    std::vector<Contact> batch_contacts;
    while (i < cs.size()) {
        batch_edges.clear();
        batch_contacts.clear();
        int label = cs[i].label;
        for (; i < cs.size() && cs[i].label == label; ++i) {
            batch_edges.push_back(g.footprint.edges[cs[i].edge]);
            batch_contacts.push_back(cs[i]);
        }
        state.apply_batch(batch_edges, batch_contacts);
    }
    return state;
}

}  // namespace templab
