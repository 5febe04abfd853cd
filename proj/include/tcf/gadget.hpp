#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcf/binomial.hpp"
#include "tcf/errors.hpp"
#include "tcf/hypergraph.hpp"

namespace tcf {

// A gadget is a pair (F, G): F lives on labels {1..m} and is added to a
// full star, G consists of star edges (each containing the center 0) that
// are deleted alongside. The net edge gain is e(F) - e(G).
struct Gadget {
    int k = 0;
    int m = 0;  // vertex budget: F uses labels in {1..m}, never 0
    std::string id;
    std::vector<std::vector<VertexLabel>> f_edges;  // sorted, canonical
    std::vector<std::vector<VertexLabel>> g_edges;  // each contains 0

    int net_gain() const {
        return static_cast<int>(f_edges.size()) - static_cast<int>(g_edges.size());
    }
};

// An injective placement of a gadget's labels {1..m} into {1..n-1};
// image_of_label[i-1] is where label i lands. The center 0 is fixed.
struct EmbeddedGadget {
    Gadget gadget;
    std::vector<VertexLabel> embedding;

    VertexLabel map_label(VertexLabel v) const {
        return v == 0 ? 0 : embedding[static_cast<size_t>(v) - 1];
    }

    std::vector<std::vector<VertexLabel>> embedded(
        const std::vector<std::vector<VertexLabel>>& tmpl) const {
        std::vector<std::vector<VertexLabel>> out;
        out.reserve(tmpl.size());
        for (const auto& e : tmpl) {
            std::vector<VertexLabel> img;
            img.reserve(e.size());
            for (VertexLabel v : e) img.push_back(map_label(v));
            std::sort(img.begin(), img.end());
            out.push_back(std::move(img));
        }
        return out;
    }

    std::vector<std::vector<VertexLabel>> embedded_f() const { return embedded(gadget.f_edges); }
    std::vector<std::vector<VertexLabel>> embedded_g() const { return embedded(gadget.g_edges); }
};

inline EmbeddedGadget identity_embedding(Gadget g) {
    std::vector<VertexLabel> emb(static_cast<size_t>(g.m));
    for (int i = 0; i < g.m; ++i) emb[static_cast<size_t>(i)] = static_cast<VertexLabel>(i + 1);
    return EmbeddedGadget{std::move(g), std::move(emb)};
}

// The 3-uniform K6 gadget: three paired Type-II blocks chained cyclically.
// Adds six edges, deletes three star edges; its 2-shadow is the complete
// graph on {1..6}.
inline Gadget gadget3() {
    Gadget g;
    g.k = 3;
    g.m = 6;
    g.id = "gadget3";
    g.f_edges = {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}, {3, 4, 6}, {1, 5, 6}, {2, 5, 6}};
    g.g_edges = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}};
    for (auto& e : g.f_edges) std::sort(e.begin(), e.end());
    std::sort(g.f_edges.begin(), g.f_edges.end());
    return g;
}

namespace detail {

// Pairwise (k-1)-shadow disjointness over a family of edges.
inline bool shadows_pairwise_disjoint(const std::vector<std::vector<VertexLabel>>& edges, int k,
                                      size_t* bad_i = nullptr, size_t* bad_j = nullptr,
                                      SetKey* bad_key = nullptr) {
    std::unordered_map<SetKey, size_t, SetKeyHash> owner;
    for (size_t i = 0; i < edges.size(); ++i) {
        for (SetKey key : subset_keys(edges[i], k - 1)) {
            const auto [it, fresh] = owner.emplace(key, i);
            if (!fresh && it->second != i) {
                if (bad_i) *bad_i = it->second;
                if (bad_j) *bad_j = i;
                if (bad_key) *bad_key = key;
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

// The general-k gadget with net gain +1, built on labels {1..m}:
//   e_0 = [k];  e_i = ([k] \ {i}) ∪ {k+i} for i in [k];
//   for every 1 <= i < j <= k and every (k-3)-subset T of [k] with i in T
//   and j not in T (T empty when k = 3), one extra edge
//   e_{k+a} = T ∪ {k+i, k+j, 2k+a} whose star companion {0} ∪ T ∪ {k+i, k+j}
//   is deleted. G deletes {0} ∪ f for every f in the (k-1)-shadow roles
//   f_1..f_{k+M}. Shadow disjointness of e_1..e_{k+M} is validated before
//   returning.
inline Gadget gadget_k(int k) {
    if (k < 3) throw ParamError("gadget_k: k must be at least 3");
    if (k > kMaxUniformity) throw ParamError("gadget_k: k exceeds supported uniformity");

    Gadget g;
    g.k = k;
    g.id = "gadget-k" + std::to_string(k);

    std::vector<std::vector<VertexLabel>> f_list;  // f_1..f_{k+M}, (k-1)-sets

    auto push_edge = [&](std::vector<VertexLabel> e) {
        std::sort(e.begin(), e.end());
        g.f_edges.push_back(std::move(e));
    };

    // e_0 = [k]
    {
        std::vector<VertexLabel> e0;
        for (int v = 1; v <= k; ++v) e0.push_back(static_cast<VertexLabel>(v));
        push_edge(std::move(e0));
    }
    // e_i = ([k] \ {i}) ∪ {k+i}
    for (int i = 1; i <= k; ++i) {
        std::vector<VertexLabel> f;
        for (int v = 1; v <= k; ++v)
            if (v != i) f.push_back(static_cast<VertexLabel>(v));
        f_list.push_back(f);
        f.push_back(static_cast<VertexLabel>(k + i));
        push_edge(std::move(f));
    }
    // Deleted (k-1)-sets covering the two-pivot cycle shapes, deduplicated.
    std::vector<std::vector<VertexLabel>> extra;
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            if (k == 3) {
                extra.push_back({static_cast<VertexLabel>(k + i), static_cast<VertexLabel>(k + j)});
                continue;
            }
            // (k-3)-subsets T of [k] with i in T, j not in T.
            std::vector<int> pool;
            for (int v = 1; v <= k; ++v)
                if (v != i && v != j) pool.push_back(v);
            detail::for_each_combination(static_cast<int>(pool.size()), k - 4,
                                         [&](std::span<const int> idx) {
                                             std::vector<VertexLabel> t{static_cast<VertexLabel>(i)};
                                             for (int p : idx)
                                                 t.push_back(static_cast<VertexLabel>(pool[static_cast<size_t>(p)]));
                                             t.push_back(static_cast<VertexLabel>(k + i));
                                             t.push_back(static_cast<VertexLabel>(k + j));
                                             std::sort(t.begin(), t.end());
                                             extra.push_back(std::move(t));
                                         });
        }
    }
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());

    const int m_count = static_cast<int>(extra.size());
    int next_fresh = 2 * k + 1;
    for (auto& f : extra) {
        f_list.push_back(f);
        auto e = f;
        e.push_back(static_cast<VertexLabel>(next_fresh++));
        push_edge(std::move(e));
    }
    g.m = 2 * k + m_count;

    for (const auto& f : f_list) {
        std::vector<VertexLabel> ge{0};
        ge.insert(ge.end(), f.begin(), f.end());
        std::sort(ge.begin(), ge.end());
        g.g_edges.push_back(std::move(ge));
    }

    // e_1..e_{k+M} must have pairwise disjoint (k-1)-shadows.
    std::vector<std::vector<VertexLabel>> added(g.f_edges.begin() + 1, g.f_edges.end());
    size_t bi, bj;
    if (!detail::shadows_pairwise_disjoint(added, k, &bi, &bj))
        throw ConstructionError("gadget_k enumeration produced overlapping shadows (edges " +
                                std::to_string(bi + 1) + ", " + std::to_string(bj + 1) + ")");
    if (g.net_gain() != 1) throw ConstructionError("gadget_k net gain is not +1");
    return g;
}

}  // namespace tcf
