#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "tcf/errors.hpp"
#include "tcf/hypergraph.hpp"

namespace tcf {

// Base pairs are packed (a << 16) | b with a < b.
using PairVertex = uint32_t;

inline PairVertex make_pair_vertex(VertexLabel a, VertexLabel b) {
    if (a > b) std::swap(a, b);
    return (static_cast<PairVertex>(a) << 16) | b;
}
inline VertexLabel pair_lo(PairVertex p) { return static_cast<VertexLabel>(p >> 16); }
inline VertexLabel pair_hi(PairVertex p) { return static_cast<VertexLabel>(p & 0xffff); }

// How many base vertices two pairs share (0, 1 or 2).
inline int pair_overlap(PairVertex p, PairVertex q) {
    int c = 0;
    c += (pair_lo(p) == pair_lo(q) || pair_lo(p) == pair_hi(q)) ? 1 : 0;
    c += (pair_hi(p) == pair_lo(q) || pair_hi(p) == pair_hi(q)) ? 1 : 0;
    return c;
}

// The linear 3-graph H*: one vertex per member of the 2-shadow, one edge
// {ij, ik, jk} per base edge {i, j, k}. Two H*-edges share at most one
// pair-vertex because two distinct base edges share at most two vertices.
struct LinearTriple {
    int base_n = 0;
    std::vector<PairVertex> pair_vertices;            // sorted, deduplicated
    std::vector<std::array<PairVertex, 3>> triples;   // per edge, ascending

    size_t vertex_count() const { return pair_vertices.size(); }
    size_t edge_count() const { return triples.size(); }
};

inline LinearTriple to_linear(const Hypergraph& h) {
    if (h.k() != 3) throw UniformityError("to_linear: requires a 3-uniform hypergraph");
    LinearTriple out;
    out.base_n = h.n();
    out.triples.reserve(h.edge_count());
    for (size_t i = 0; i < h.edge_count(); ++i) {
        const auto e = h.edge(i);
        std::array<PairVertex, 3> t{make_pair_vertex(e[0], e[1]), make_pair_vertex(e[0], e[2]),
                                    make_pair_vertex(e[1], e[2])};
        std::sort(t.begin(), t.end());
        out.triples.push_back(t);
        for (PairVertex p : t) out.pair_vertices.push_back(p);
    }
    std::sort(out.pair_vertices.begin(), out.pair_vertices.end());
    out.pair_vertices.erase(std::unique(out.pair_vertices.begin(), out.pair_vertices.end()),
                            out.pair_vertices.end());
    return out;
}

namespace detail {

inline int triple_intersection(const std::array<PairVertex, 3>& a,
                               const std::array<PairVertex, 3>& b, PairVertex* common) {
    int c = 0;
    for (PairVertex p : a)
        for (PairVertex q : b)
            if (p == q) {
                if (c == 0) *common = p;
                ++c;
            }
    return c;
}

class FeasibleCycleSearch {
public:
    FeasibleCycleSearch(const LinearTriple& hstar, int ell) : h_(hstar), ell_(ell) {}

    bool run() {
        const size_t m = h_.edge_count();
        if (m < static_cast<size_t>(ell_)) return false;
        used_.assign(m, false);
        for (size_t first = 0; first < m; ++first) {
            first_ = first;
            used_[first] = true;
            edges_.assign(1, first);
            connectors_.clear();
            if (extend()) return true;
            used_[first] = false;
        }
        return false;
    }

private:
    // Connector sequence A_1..A_ell: consecutive connectors share exactly
    // one base vertex, all other base intersections are empty. The closing
    // connector A_ell is consecutive with both A_{ell-1} and A_1.
    bool connector_ok(PairVertex a, bool closing) const {
        const size_t idx = connectors_.size();  // position this A would take
        if (idx > 0 && pair_overlap(connectors_[idx - 1], a) != 1) return false;
        if (closing && pair_overlap(connectors_[0], a) != 1) return false;
        for (size_t j = closing ? 1 : 0; j + 1 < idx; ++j)
            if (pair_overlap(connectors_[j], a) != 0) return false;
        return true;
    }

    bool extend() {
        if (edges_.size() == static_cast<size_t>(ell_)) {
            PairVertex closing;
            if (detail::triple_intersection(h_.triples[edges_.back()], h_.triples[first_],
                                            &closing) != 1)
                return false;
            return connector_ok(closing, /*closing=*/true);
        }
        const size_t m = h_.edge_count();
        for (size_t next = 0; next < m; ++next) {
            if (used_[next]) continue;
            PairVertex a;
            if (detail::triple_intersection(h_.triples[edges_.back()], h_.triples[next], &a) != 1)
                continue;
            if (!connector_ok(a, /*closing=*/false)) continue;
            used_[next] = true;
            edges_.push_back(next);
            connectors_.push_back(a);
            if (extend()) return true;
            connectors_.pop_back();
            edges_.pop_back();
            used_[next] = false;
        }
        return false;
    }

    const LinearTriple& h_;
    int ell_;
    size_t first_ = 0;
    std::vector<size_t> edges_;
    std::vector<PairVertex> connectors_;
    std::vector<bool> used_;
};

}  // namespace detail

// True iff H* contains a loose cycle (e*_1..e*_ell), each consecutive pair
// of edges meeting in exactly one pair-vertex A_i, with |A_i ∩ A_{i+1}| = 1
// and |A_i ∩ A_j| = 0 (as base 2-sets) otherwise.
inline bool has_feasible_loose_cycle(const LinearTriple& hstar, int ell) {
    if (ell < 4) throw ParamError("has_feasible_loose_cycle: ell must be at least 4");
    detail::FeasibleCycleSearch search(hstar, ell);
    return search.run();
}

}  // namespace tcf
