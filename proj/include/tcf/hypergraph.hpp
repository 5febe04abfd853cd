#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "tcf/binomial.hpp"
#include "tcf/errors.hpp"

namespace tcf {

using VertexLabel = uint16_t;

// Labels are packed 16 bits apiece into a 128-bit key, most significant
// first, so numeric key order equals lexicographic edge order.
constexpr int kMaxUniformity = 8;
constexpr int kMaxVertices = 65535;

using SetKey = uint128;

inline SetKey pack_labels(std::span<const VertexLabel> labels) {
    SetKey key = 0;
    for (VertexLabel v : labels) key = (key << 16) | v;
    return key;
}

inline void unpack_labels(SetKey key, int count, VertexLabel* out) {
    for (int i = count - 1; i >= 0; --i) {
        out[i] = static_cast<VertexLabel>(key & 0xffff);
        key >>= 16;
    }
}

inline std::vector<VertexLabel> unpack_labels(SetKey key, int count) {
    std::vector<VertexLabel> out(static_cast<size_t>(count));
    unpack_labels(key, count, out.data());
    return out;
}

struct SetKeyHash {
    size_t operator()(SetKey k) const {
        auto mix = [](uint64_t z) {
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        return static_cast<size_t>(mix(static_cast<uint64_t>(k)) ^
                                   mix(static_cast<uint64_t>(k >> 64) + 0x9e3779b97f4a7c15ULL));
    }
};

// Sorts a small label array in place and returns its key. Throws on
// repeated labels.
inline SetKey canonical_key(std::span<VertexLabel> labels) {
    std::sort(labels.begin(), labels.end());
    for (size_t i = 1; i < labels.size(); ++i)
        if (labels[i] == labels[i - 1])
            throw MultisetError("edge repeats vertex " + std::to_string(labels[i]));
    return pack_labels(labels);
}

// Immutable k-uniform hypergraph on vertex labels 0..n-1. Edges are stored
// deduplicated in canonical (ascending-label, lexicographically sorted)
// order; a hashed key set backs membership queries. Safe for concurrent
// reads after construction.
class Hypergraph {
public:
    Hypergraph() = default;

    // Keys must already be canonical; they are sorted and deduplicated here.
    static Hypergraph from_keys(int k, int n, std::vector<SetKey> keys) {
        check_dims(k, n);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        Hypergraph h;
        h.k_ = k;
        h.n_ = n;
        h.keys_ = std::move(keys);
        h.edge_set_.reserve(h.keys_.size() * 2);
        h.edge_set_.insert(h.keys_.begin(), h.keys_.end());
        return h;
    }

    int k() const { return k_; }
    int n() const { return n_; }
    size_t edge_count() const { return keys_.size(); }

    const std::vector<SetKey>& keys() const { return keys_; }
    SetKey key(size_t i) const { return keys_[i]; }
    std::vector<VertexLabel> edge(size_t i) const { return unpack_labels(keys_[i], k_); }

    bool has_key(SetKey key) const { return edge_set_.count(key) != 0; }

    // `labels` must be sorted ascending.
    bool has_edge(std::span<const VertexLabel> labels) const {
        return labels.size() == static_cast<size_t>(k_) && has_key(pack_labels(labels));
    }

    std::vector<std::vector<VertexLabel>> edges() const {
        std::vector<std::vector<VertexLabel>> out;
        out.reserve(keys_.size());
        for (SetKey key : keys_) out.push_back(unpack_labels(key, k_));
        return out;
    }

    bool operator==(const Hypergraph& other) const {
        return k_ == other.k_ && n_ == other.n_ && keys_ == other.keys_;
    }
    bool operator!=(const Hypergraph& other) const { return !(*this == other); }

private:
    static void check_dims(int k, int n) {
        if (k < 2) throw ParamError("uniformity k must be at least 2");
        if (k > kMaxUniformity)
            throw ParamError("uniformity k > " + std::to_string(kMaxUniformity) + " not supported");
        if (n < k) throw ParamError("vertex count n must be at least k");
        if (n > kMaxVertices) throw ParamError("vertex count n exceeds 65535");
    }

    int k_ = 0;
    int n_ = 0;
    std::vector<SetKey> keys_;
    std::unordered_set<SetKey, SetKeyHash> edge_set_;
};

// Builds a hypergraph from raw edge lists. Edges are canonicalized and
// deduplicated; the edge count equals the number of distinct inputs.
inline Hypergraph make_hypergraph(int k, int n,
                                  const std::vector<std::vector<int>>& edges) {
    if (k < 2 || n < k) throw ParamError("make_hypergraph: need k >= 2 and n >= k");
    std::vector<SetKey> keys;
    keys.reserve(edges.size());
    std::vector<VertexLabel> buf;
    for (const auto& e : edges) {
        if (e.size() != static_cast<size_t>(k))
            throw UniformityError("edge has " + std::to_string(e.size()) +
                                  " vertices, expected " + std::to_string(k));
        buf.clear();
        for (int v : e) {
            if (v < 0 || v >= n)
                throw LabelError("vertex label " + std::to_string(v) +
                                 " outside [0, " + std::to_string(n) + ")");
            buf.push_back(static_cast<VertexLabel>(v));
        }
        keys.push_back(canonical_key(buf));
    }
    return Hypergraph::from_keys(k, n, std::move(keys));
}

namespace detail {

// Calls fn on every r-combination of {0..pool_size-1}, ascending.
template <typename Fn>
void for_each_combination(int pool_size, int r, Fn&& fn) {
    if (r < 0 || r > pool_size) return;
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        fn(std::span<const int>(idx));
        int i = r - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == pool_size - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

// All k-subsets of {0..n-1} containing the center 0; binom(n-1, k-1) edges.
inline Hypergraph full_star(int n, int k) {
    if (k < 2) throw ParamError("full_star: k must be at least 2");
    if (n < k) throw SizeError("full_star: need n >= k");
    const uint128 count = binomial(n - 1, k - 1);
    if (count > 20'000'000) throw SizeError("full_star: edge set too large to materialize");
    std::vector<SetKey> keys;
    keys.reserve(static_cast<size_t>(count));
    std::vector<VertexLabel> buf(static_cast<size_t>(k));
    buf[0] = 0;
    detail::for_each_combination(n - 1, k - 1, [&](std::span<const int> idx) {
        for (int i = 0; i < k - 1; ++i)
            buf[static_cast<size_t>(i) + 1] = static_cast<VertexLabel>(idx[static_cast<size_t>(i)] + 1);
        keys.push_back(pack_labels(buf));
    });
    return Hypergraph::from_keys(k, n, std::move(keys));
}

// The t-shadow: all t-subsets contained in at least one edge.
struct Shadow {
    int t = 0;
    std::vector<SetKey> keys;  // sorted, deduplicated

    size_t size() const { return keys.size(); }
    bool contains(SetKey key) const {
        return std::binary_search(keys.begin(), keys.end(), key);
    }
    std::vector<std::vector<VertexLabel>> members() const {
        std::vector<std::vector<VertexLabel>> out;
        out.reserve(keys.size());
        for (SetKey key : keys) out.push_back(unpack_labels(key, t));
        return out;
    }
};

inline Shadow shadow(const Hypergraph& h, int t) {
    if (t < 1 || t > h.k()) throw ParamError("shadow: t must be in [1, k]");
    std::vector<SetKey> keys;
    std::vector<VertexLabel> edge(static_cast<size_t>(h.k()));
    std::vector<VertexLabel> sub(static_cast<size_t>(t));
    for (SetKey key : h.keys()) {
        unpack_labels(key, h.k(), edge.data());
        detail::for_each_combination(h.k(), t, [&](std::span<const int> idx) {
            for (int i = 0; i < t; ++i)
                sub[static_cast<size_t>(i)] = edge[static_cast<size_t>(idx[static_cast<size_t>(i)])];
            keys.push_back(pack_labels(sub));
        });
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return Shadow{t, std::move(keys)};
}

// (k-1)-subsets of one edge, as keys. Used for shadow-disjointness checks.
inline std::vector<SetKey> subset_keys(std::span<const VertexLabel> sorted_edge, int t) {
    std::vector<SetKey> out;
    std::vector<VertexLabel> sub(static_cast<size_t>(t));
    detail::for_each_combination(static_cast<int>(sorted_edge.size()), t,
                                 [&](std::span<const int> idx) {
                                     for (int i = 0; i < t; ++i)
                                         sub[static_cast<size_t>(i)] =
                                             sorted_edge[static_cast<size_t>(idx[static_cast<size_t>(i)])];
                                     out.push_back(pack_labels(sub));
                                 });
    return out;
}

}  // namespace tcf
