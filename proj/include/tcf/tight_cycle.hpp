#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcf/errors.hpp"
#include "tcf/hypergraph.hpp"

namespace tcf {

// A tight cycle witness: distinct vertices v0..v_{l-1} with every cyclic
// window {v_i, ..., v_{i+k-1}} an edge. Canonical form: the minimum label
// comes first and of the two directions the one with the smaller successor
// is kept.
struct TightCycle {
    std::vector<VertexLabel> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    static TightCycle canonical(std::vector<VertexLabel> seq) {
        const auto min_it = std::min_element(seq.begin(), seq.end());
        std::rotate(seq.begin(), min_it, seq.end());
        if (seq.size() > 2 && seq[1] > seq.back())
            std::reverse(seq.begin() + 1, seq.end());
        return TightCycle{std::move(seq)};
    }

    bool operator==(const TightCycle& o) const { return vertices == o.vertices; }
    bool operator<(const TightCycle& o) const { return vertices < o.vertices; }
};

inline std::string format_witness(const TightCycle& c) {
    std::ostringstream ss;
    ss << c.length() << ':';
    for (VertexLabel v : c.vertices) ss << ' ' << v;
    return ss.str();
}

struct SearchOptions {
    // Cap on cycle length; defaults to n.
    std::optional<int> max_length;
    // When set together with max_length = n and an unexhausted budget,
    // an empty result proves the hypergraph tight-cycle-free.
    bool exhaustive = false;
    // Cap on DFS states. Exhausting it in exhaustive mode throws
    // IndeterminateError; in best-effort mode the search just stops.
    std::optional<uint64_t> node_budget;
};

// True iff seq has distinct labels, k+1 <= |seq| <= n, and every cyclic
// k-window is an edge. Malformed sequences return false.
inline bool is_witness(const Hypergraph& h, std::span<const VertexLabel> seq) {
    const int k = h.k();
    const int len = static_cast<int>(seq.size());
    if (len < k + 1 || len > h.n()) return false;
    std::vector<bool> seen(static_cast<size_t>(h.n()), false);
    for (VertexLabel v : seq) {
        if (v >= h.n() || seen[v]) return false;
        seen[v] = true;
    }
    std::vector<VertexLabel> window(static_cast<size_t>(k));
    for (int i = 0; i < len; ++i) {
        for (int j = 0; j < k; ++j) window[static_cast<size_t>(j)] = seq[static_cast<size_t>((i + j) % len)];
        std::sort(window.begin(), window.end());
        if (!h.has_edge(window)) return false;
    }
    return true;
}

namespace detail {

// Extension lists keyed by (k-1)-subset: the DFS step "which vertices v
// complete this frontier to an edge" becomes one lookup.
class ExtensionIndex {
public:
    explicit ExtensionIndex(const Hypergraph& h) : k_(h.k()) {
        map_.reserve(h.edge_count() * static_cast<size_t>(k_));
        std::vector<VertexLabel> edge(static_cast<size_t>(k_));
        std::vector<VertexLabel> sub(static_cast<size_t>(k_ - 1));
        for (SetKey key : h.keys()) {
            unpack_labels(key, k_, edge.data());
            for (int omit = 0; omit < k_; ++omit) {
                int p = 0;
                for (int j = 0; j < k_; ++j)
                    if (j != omit) sub[static_cast<size_t>(p++)] = edge[static_cast<size_t>(j)];
                map_[pack_labels(sub)].push_back(edge[static_cast<size_t>(omit)]);
            }
        }
        for (auto& [key, exts] : map_) std::sort(exts.begin(), exts.end());
    }

    const std::vector<VertexLabel>* extensions(SetKey frontier) const {
        const auto it = map_.find(frontier);
        return it == map_.end() ? nullptr : &it->second;
    }

private:
    int k_;
    std::unordered_map<SetKey, std::vector<VertexLabel>, SetKeyHash> map_;
};

struct BudgetStop {};  // internal: best-effort search ran out of nodes

class CycleSearch {
public:
    CycleSearch(const Hypergraph& h, const SearchOptions& opts)
        : h_(h), k_(h.k()), index_(h), opts_(opts) {
        max_len_ = opts.max_length.value_or(h.n());
        if (max_len_ > h.n()) max_len_ = h.n();
        visited_.assign(static_cast<size_t>(h.n()), false);
    }

    std::optional<TightCycle> run() {
        if (max_len_ < k_ + 1) return std::nullopt;
        std::vector<VertexLabel> edge(static_cast<size_t>(k_));
        try {
            // Canonical start: the cycle's minimum vertex opens the first
            // window, so only edges whose minimum is the start qualify and
            // every deeper vertex must exceed it.
            for (SetKey key : h_.keys()) {
                unpack_labels(key, k_, edge.data());
                start_ = edge[0];
                std::vector<VertexLabel> tail(edge.begin() + 1, edge.end());
                do {
                    path_.assign(1, start_);
                    path_.insert(path_.end(), tail.begin(), tail.end());
                    for (VertexLabel v : path_) visited_[v] = true;
                    const bool found = dfs();
                    for (VertexLabel v : path_) visited_[v] = false;
                    if (found) return TightCycle{path_};
                } while (std::next_permutation(tail.begin(), tail.end()));
            }
        } catch (const BudgetStop&) {
            return std::nullopt;  // best-effort mode: no claim either way
        }
        return std::nullopt;
    }

    uint64_t nodes() const { return nodes_; }

private:
    void charge_node() {
        ++nodes_;
        if (opts_.node_budget && nodes_ > *opts_.node_budget) {
            if (opts_.exhaustive)
                throw IndeterminateError("tight-cycle search exhausted its node budget after " +
                                         std::to_string(nodes_) + " states");
            throw BudgetStop{};
        }
    }

    bool closes() const {
        const int len = static_cast<int>(path_.size());
        std::vector<VertexLabel> window(static_cast<size_t>(k_));
        for (int t = 1; t < k_; ++t) {
            for (int j = 0; j < k_; ++j)
                window[static_cast<size_t>(j)] = path_[static_cast<size_t>((len - k_ + t + j) % len)];
            std::sort(window.begin(), window.end());
            if (!h_.has_edge(window)) return false;
        }
        return true;
    }

    bool dfs() {
        charge_node();
        const int len = static_cast<int>(path_.size());
        // Direction tie-break: accept only the orientation whose successor
        // of the start vertex is the smaller endpoint.
        if (len >= k_ + 1 && path_[1] < path_.back() && closes()) return true;
        if (len >= max_len_) return false;
        std::vector<VertexLabel> frontier(path_.end() - (k_ - 1), path_.end());
        std::sort(frontier.begin(), frontier.end());
        const auto* exts = index_.extensions(pack_labels(frontier));
        if (!exts) return false;
        for (VertexLabel v : *exts) {
            if (v <= start_ || visited_[v]) continue;
            path_.push_back(v);
            visited_[v] = true;
            const bool found = dfs();
            if (!found) {
                visited_[v] = false;
                path_.pop_back();
            }
            if (found) return true;
        }
        return false;
    }

    const Hypergraph& h_;
    int k_;
    ExtensionIndex index_;
    SearchOptions opts_;
    int max_len_ = 0;
    VertexLabel start_ = 0;
    std::vector<VertexLabel> path_;
    std::vector<bool> visited_;
    uint64_t nodes_ = 0;
};

}  // namespace detail

// DFS over tight paths (frontier = ordered (k-1)-tuple, visited set),
// start-canonicalized so each cycle is generated once. Deterministic:
// edges in canonical order, tail permutations in lexicographic order,
// extensions ascending; the first closed cycle wins.
inline std::optional<TightCycle> find_tight_cycle(const Hypergraph& h,
                                                  const SearchOptions& opts = {}) {
    if (opts.max_length && *opts.max_length > h.n())
        throw ParamError("max_length exceeds vertex count");
    detail::CycleSearch search(h, opts);
    return search.run();
}

// Brute-force oracle, independent of the DFS: enumerates every candidate
// vertex sequence and keeps those whose windows are all edges. Results are
// canonical, deduplicated over rotation and reflection, sorted.
inline std::vector<TightCycle> enumerate_tight_cycles(const Hypergraph& h) {
    if (h.n() > 10) throw SizeError("enumerate_tight_cycles: n > 10");
    const int k = h.k();
    const int n = h.n();
    std::vector<TightCycle> found;
    std::vector<VertexLabel> seq;
    for (int len = k + 1; len <= n; ++len) {
        detail::for_each_combination(n, len, [&](std::span<const int> combo) {
            // Fix the smallest member first; permuting the rest covers every
            // rotation class once, and the direction filter halves it.
            std::vector<VertexLabel> rest;
            for (size_t i = 1; i < combo.size(); ++i)
                rest.push_back(static_cast<VertexLabel>(combo[i]));
            std::sort(rest.begin(), rest.end());
            do {
                if (rest.front() > rest.back()) continue;
                seq.assign(1, static_cast<VertexLabel>(combo[0]));
                seq.insert(seq.end(), rest.begin(), rest.end());
                if (is_witness(h, seq)) found.push_back(TightCycle{seq});
            } while (std::next_permutation(rest.begin(), rest.end()));
        });
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace tcf
