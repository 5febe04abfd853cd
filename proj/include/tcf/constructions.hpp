#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "tcf/confined.hpp"
#include "tcf/errors.hpp"
#include "tcf/gadget.hpp"
#include "tcf/hypergraph.hpp"

namespace tcf {

// The cyclic pair construction: a full 3-star on {0..n-1} (center 0) with
// the star edges {0, 2i-1, 2i} traded, pair by pair, for the two edges
// {2i-1, 2i, 2i+1} and {2i-1, 2i, 2i+2} (the last pair wraps to 1 and 2).
// With the default index set this has binom(n-1, 2) + (n-1)/2 edges; a
// restricted index set S keeps only the trades for i in S and must have
// |S| >= 3.
inline Hypergraph warmup3(int n, const std::optional<std::set<int>>& index_set = std::nullopt) {
    if (n < 7 || n % 2 == 0) throw ParamError("warmup3: n must be odd and at least 7");
    const int pairs = (n - 1) / 2;
    std::set<int> s;
    if (index_set) {
        s = *index_set;
        if (static_cast<int>(s.size()) < 3) throw ParamError("warmup3: index set needs size >= 3");
        for (int i : s)
            if (i < 1 || i > pairs) throw ParamError("warmup3: index out of range");
    } else {
        for (int i = 1; i <= pairs; ++i) s.insert(i);
    }

    std::vector<SetKey> removed;
    std::vector<SetKey> added;
    std::vector<VertexLabel> buf;
    auto key_of = [&](std::initializer_list<int> labels) {
        buf.assign(labels.begin(), labels.end());
        std::sort(buf.begin(), buf.end());
        return pack_labels(buf);
    };
    for (int i : s) {
        removed.push_back(key_of({0, 2 * i - 1, 2 * i}));
        if (i < pairs) {
            added.push_back(key_of({2 * i - 1, 2 * i, 2 * i + 1}));
            added.push_back(key_of({2 * i - 1, 2 * i, 2 * i + 2}));
        } else {
            added.push_back(key_of({n - 2, n - 1, 1}));
            added.push_back(key_of({n - 2, n - 1, 2}));
        }
    }
    std::sort(removed.begin(), removed.end());

    std::vector<SetKey> keys;
    for (SetKey key : full_star(n, 3).keys())
        if (!std::binary_search(removed.begin(), removed.end(), key)) keys.push_back(key);
    keys.insert(keys.end(), added.begin(), added.end());
    return Hypergraph::from_keys(3, n, std::move(keys));
}

// Adds edges e_i avoiding the center, deleting one star edge {0} ∪ f_i per
// addition, so the edge count stays binom(n-1, k-1). Requires pairwise
// disjoint (k-1)-shadows of the e_i. When f_i is omitted the
// lexicographically smallest (k-1)-subset of e_i is deleted.
inline Hypergraph star_plus_disjoint_edges(
    int n, int k,
    const std::vector<std::pair<std::vector<int>, std::optional<std::vector<int>>>>& pairs) {
    if (k < 2 || n < k) throw ParamError("star_plus_disjoint_edges: need k >= 2 and n >= k");

    std::vector<std::vector<VertexLabel>> added;
    std::vector<SetKey> removed;
    for (const auto& [e_raw, f_raw] : pairs) {
        if (e_raw.size() != static_cast<size_t>(k))
            throw UniformityError("added edge has wrong size");
        std::vector<VertexLabel> e;
        for (int v : e_raw) {
            if (v < 1 || v >= n)
                throw ParamError("added edge must avoid 0 and stay below n");
            e.push_back(static_cast<VertexLabel>(v));
        }
        canonical_key(std::span<VertexLabel>(e));
        std::vector<VertexLabel> f;
        if (f_raw) {
            if (f_raw->size() != static_cast<size_t>(k) - 1)
                throw ParamError("deleted subset must have k-1 vertices");
            for (int v : *f_raw) f.push_back(static_cast<VertexLabel>(v));
            std::sort(f.begin(), f.end());
            if (!std::includes(e.begin(), e.end(), f.begin(), f.end()))
                throw ParamError("deleted subset must lie inside its added edge");
        } else {
            f.assign(e.begin(), e.end() - 1);
        }
        std::vector<VertexLabel> g{0};
        g.insert(g.end(), f.begin(), f.end());
        removed.push_back(pack_labels(g));
        added.push_back(std::move(e));
    }

    size_t bi, bj;
    SetKey bad_key;
    if (!detail::shadows_pairwise_disjoint(added, k, &bi, &bj, &bad_key)) {
        std::vector<VertexLabel> labels = unpack_labels(bad_key, k - 1);
        throw ShadowClashError("added edges " + std::to_string(bi) + " and " + std::to_string(bj) +
                               " share " + detail::label_set_string(labels));
    }

    std::sort(removed.begin(), removed.end());
    std::vector<SetKey> keys;
    for (SetKey key : full_star(n, k).keys())
        if (!std::binary_search(removed.begin(), removed.end(), key)) keys.push_back(key);
    for (const auto& e : added) keys.push_back(pack_labels(e));
    return Hypergraph::from_keys(k, n, std::move(keys));
}

// The shadow-disjoint composition: the full star minus every accompanying
// set, plus every embedded gadget. confined_verify must pass; on failure
// throws CheckFailedError carrying the report. The surplus over the star
// is the sum of the gadgets' net gains.
inline Hypergraph compose(int n, int k, const std::vector<EmbeddedGadget>& gadgets,
                          CheckReport* out_report = nullptr) {
    CheckReport report = confined_verify(n, k, gadgets);
    if (out_report) *out_report = report;
    if (!report.pass) throw CheckFailedError(std::move(report));

    std::vector<SetKey> removed;
    std::vector<SetKey> added;
    long long gain = 0;
    for (const auto& eg : gadgets) {
        for (const auto& e : eg.embedded_g()) removed.push_back(pack_labels(e));
        for (const auto& e : eg.embedded_f()) added.push_back(pack_labels(e));
        gain += eg.gadget.net_gain();
    }
    std::sort(removed.begin(), removed.end());

    const Hypergraph star = full_star(n, k);
    std::vector<SetKey> keys;
    keys.reserve(star.edge_count() + added.size());
    for (SetKey key : star.keys())
        if (!std::binary_search(removed.begin(), removed.end(), key)) keys.push_back(key);
    keys.insert(keys.end(), added.begin(), added.end());
    Hypergraph h = Hypergraph::from_keys(k, n, std::move(keys));

    uint128 expected = binomial(n - 1, k - 1);
    if (gain >= 0)
        expected += static_cast<uint128>(gain);
    else
        expected -= static_cast<uint128>(-gain);
    if (static_cast<uint128>(h.edge_count()) != expected)
        throw ConstructionError("compose: edge count does not match the star plus net gains");
    return h;
}

}  // namespace tcf
