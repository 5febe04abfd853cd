#pragma once

#include <vector>

#include "tcf/hypergraph.hpp"
#include "tcf/rng.hpp"

namespace tcf::testing {

// The tight l-cycle itself, as an edge set.
inline Hypergraph tight_cycle_graph(int k, int ell) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < ell; ++i) {
        std::vector<int> w;
        for (int j = 0; j < k; ++j) w.push_back((i + j) % ell);
        edges.push_back(w);
    }
    return make_hypergraph(k, ell, edges);
}

// Complete k-uniform hypergraph on n vertices.
inline Hypergraph complete_graph(int k, int n) {
    std::vector<std::vector<int>> edges;
    detail::for_each_combination(n, k, [&](std::span<const int> combo) {
        edges.emplace_back(combo.begin(), combo.end());
    });
    return make_hypergraph(k, n, edges);
}

// Each k-subset kept independently with the given density.
inline Hypergraph random_graph(int k, int n, double density, Rng& rng) {
    std::vector<SetKey> keys;
    std::vector<VertexLabel> buf(static_cast<size_t>(k));
    detail::for_each_combination(n, k, [&](std::span<const int> combo) {
        if (rng.unit() < density) {
            for (int j = 0; j < k; ++j) buf[static_cast<size_t>(j)] = static_cast<VertexLabel>(combo[j]);
            keys.push_back(pack_labels(buf));
        }
    });
    return Hypergraph::from_keys(k, n, std::move(keys));
}

}  // namespace tcf::testing
