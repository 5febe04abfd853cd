#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tcf/errors.hpp"
#include "tcf/hypergraph.hpp"

namespace tcf {

// HGF text format.
//   line 1:  k n m        (base-10 integers)
//   then m lines of k strictly ascending 0-based labels, single spaces.
// Lines starting with '#' are comments and may appear anywhere.

namespace detail {

inline bool split_ints(const std::string& line, std::vector<long long>& out) {
    out.clear();
    std::istringstream ss(line);
    long long v;
    while (ss >> v) out.push_back(v);
    std::string tail;
    ss.clear();
    return !(ss >> tail);  // reject trailing junk
}

}  // namespace detail

inline Hypergraph read_hgf_stream(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<long long> nums;

    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (line[0] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_content_line()) throw ParseError("missing header", lineno + 1);
    if (!detail::split_ints(line, nums) || nums.size() != 3)
        throw ParseError("header must be `k n m`", lineno);
    const long long k = nums[0], n = nums[1], m = nums[2];
    if (k < 2 || k > kMaxUniformity) throw UniformityError("unsupported uniformity k=" + std::to_string(k));
    if (n < k || n > kMaxVertices) throw ParseError("invalid vertex count", lineno);
    if (m < 0) throw ParseError("negative edge count", lineno);

    std::vector<SetKey> keys;
    keys.reserve(static_cast<size_t>(m));
    std::vector<VertexLabel> buf(static_cast<size_t>(k));
    for (long long e = 0; e < m; ++e) {
        if (!next_content_line()) throw ParseError("expected " + std::to_string(m) + " edges", lineno + 1);
        if (!detail::split_ints(line, nums)) throw ParseError("malformed edge line", lineno);
        if (nums.size() != static_cast<size_t>(k))
            throw ParseError("edge has " + std::to_string(nums.size()) +
                                 " labels, expected " + std::to_string(k),
                             lineno);
        for (size_t i = 0; i < nums.size(); ++i) {
            if (nums[i] < 0 || nums[i] >= n) throw ParseError("label out of range", lineno);
            if (i > 0 && nums[i] <= nums[i - 1])
                throw ParseError("labels not strictly ascending", lineno);
            buf[i] = static_cast<VertexLabel>(nums[i]);
        }
        keys.push_back(pack_labels(buf));
    }
    if (next_content_line()) throw ParseError("trailing content after edge list", lineno);

    const size_t distinct = [&] {
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        return static_cast<size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }();
    if (distinct != keys.size()) throw ParseError("duplicate edge in file", lineno);

    return Hypergraph::from_keys(static_cast<int>(k), static_cast<int>(n), std::move(keys));
}

inline Hypergraph read_hgf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_hgf_stream(in);
}

inline void write_hgf_stream(const Hypergraph& h, std::ostream& out,
                             const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << h.k() << ' ' << h.n() << ' ' << h.edge_count() << "\n";
    std::vector<VertexLabel> buf(static_cast<size_t>(h.k()));
    for (size_t i = 0; i < h.edge_count(); ++i) {
        unpack_labels(h.key(i), h.k(), buf.data());
        for (int j = 0; j < h.k(); ++j) {
            if (j) out << ' ';
            out << buf[static_cast<size_t>(j)];
        }
        out << "\n";
    }
}

inline void write_hgf(const Hypergraph& h, const std::string& path,
                      const std::vector<std::string>& comments = {}) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_hgf_stream(h, out, comments);
    if (!out) throw Error("write failed: " + path);
}

inline std::string to_hgf_string(const Hypergraph& h,
                                 const std::vector<std::string>& comments = {}) {
    std::ostringstream ss;
    write_hgf_stream(h, ss, comments);
    return ss.str();
}

inline Hypergraph from_hgf_string(const std::string& text) {
    std::istringstream ss(text);
    return read_hgf_stream(ss);
}

}  // namespace tcf
