#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tcf/errors.hpp"
#include "tcf/hypergraph.hpp"

namespace tcf {

// PG(2, q) point/line incidence for prime q: a Steiner system
// S(2, q+1, q^2+q+1). Points are the normalized nonzero triples over F_q
// (first nonzero coordinate 1), labeled 0..q^2+q in enumeration order;
// lines are the normalized dual triples.
struct ProjectivePlane {
    int q = 0;
    std::vector<std::vector<VertexLabel>> lines;  // each sorted, size q+1

    int num_points() const { return q * q + q + 1; }
    int num_lines() const { return static_cast<int>(lines.size()); }
};

namespace detail {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace detail

inline ProjectivePlane pg_lines(int q) {
    if (!detail::is_prime(q)) throw ParamError("pg_lines: q must be prime");
    const int count = q * q + q + 1;
    if (count > kMaxVertices) throw ParamError("pg_lines: plane too large");

    using Triple = std::array<int, 3>;
    std::vector<Triple> points;
    points.reserve(static_cast<size_t>(count));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) points.push_back({1, a, b});
    for (int b = 0; b < q; ++b) points.push_back({0, 1, b});
    points.push_back({0, 0, 1});

    ProjectivePlane plane;
    plane.q = q;
    plane.lines.reserve(static_cast<size_t>(count));
    for (const Triple& dual : points) {  // duals enumerate the same triples
        std::vector<VertexLabel> line;
        for (size_t p = 0; p < points.size(); ++p) {
            const Triple& pt = points[p];
            const int dot = dual[0] * pt[0] + dual[1] * pt[1] + dual[2] * pt[2];
            if (dot % q == 0) line.push_back(static_cast<VertexLabel>(p));
        }
        if (static_cast<int>(line.size()) != q + 1)
            throw ConstructionError("pg_lines: line has wrong size");
        plane.lines.push_back(std::move(line));
    }

    // Steiner pair coverage: every point pair on exactly one line.
    std::vector<uint8_t> covered(static_cast<size_t>(count) * static_cast<size_t>(count), 0);
    for (const auto& line : plane.lines)
        for (size_t i = 0; i < line.size(); ++i)
            for (size_t j = i + 1; j < line.size(); ++j) {
                uint8_t& c = covered[static_cast<size_t>(line[i]) * static_cast<size_t>(count) + line[j]];
                if (c) throw ConstructionError("pg_lines: pair covered twice");
                c = 1;
            }
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (!covered[static_cast<size_t>(i) * static_cast<size_t>(count) + static_cast<size_t>(j)])
                throw ConstructionError("pg_lines: uncovered pair");
    return plane;
}

}  // namespace tcf
