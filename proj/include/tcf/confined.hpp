#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcf/gadget.hpp"
#include "tcf/hypergraph.hpp"
#include "tcf/tight_cycle.hpp"

namespace tcf {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;

    bool operator==(const Check& o) const {
        return name == o.name && pass == o.pass && detail == o.detail;
    }
};

struct CheckReport {
    bool pass = true;
    std::vector<Check> checks;
    std::optional<TightCycle> witness;  // set when a restricted search found a cycle

    void add(std::string name, bool ok, std::string detail = "") {
        pass = pass && ok;
        checks.push_back(Check{std::move(name), ok, std::move(detail)});
    }
};

// Thrown by operations whose precondition is a passing CheckReport.
struct CheckFailedError : Error {
    explicit CheckFailedError(CheckReport r) : Error(describe(r)), report(std::move(r)) {}
    CheckReport report;

    static std::string describe(const CheckReport& r) {
        for (const auto& c : r.checks)
            if (!c.pass) return "check failed: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
        return "check failed";
    }
};

namespace detail {

inline std::string label_set_string(std::span<const VertexLabel> labels) {
    std::ostringstream ss;
    ss << '{';
    for (size_t i = 0; i < labels.size(); ++i) ss << (i ? "," : "") << labels[i];
    ss << '}';
    return ss.str();
}

// The star-plus-one-gadget hypergraph restricted to {0} ∪ V(F_i) ∪ V(G_i),
// relabeled onto 0..|S|-1 (0 stays 0). `back` receives the inverse map.
inline Hypergraph restricted_patch(int k, const std::vector<std::vector<VertexLabel>>& f_edges,
                                   const std::vector<std::vector<VertexLabel>>& g_edges,
                                   std::vector<VertexLabel>& back) {
    std::vector<VertexLabel> support{0};
    for (const auto& e : f_edges) support.insert(support.end(), e.begin(), e.end());
    for (const auto& e : g_edges) support.insert(support.end(), e.begin(), e.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    back = support;

    std::unordered_map<VertexLabel, VertexLabel> fwd;
    for (size_t i = 0; i < support.size(); ++i) fwd[support[i]] = static_cast<VertexLabel>(i);

    const int sn = static_cast<int>(support.size());
    std::vector<SetKey> keys = full_star(sn, k).keys();
    auto relabel_key = [&](const std::vector<VertexLabel>& e) {
        std::vector<VertexLabel> img;
        img.reserve(e.size());
        for (VertexLabel v : e) img.push_back(fwd.at(v));
        std::sort(img.begin(), img.end());
        return pack_labels(img);
    };
    std::vector<SetKey> removed;
    for (const auto& e : g_edges) removed.push_back(relabel_key(e));
    std::sort(removed.begin(), removed.end());
    std::vector<SetKey> kept;
    kept.reserve(keys.size());
    for (SetKey key : keys)
        if (!std::binary_search(removed.begin(), removed.end(), key)) kept.push_back(key);
    for (const auto& e : f_edges) kept.push_back(relabel_key(e));
    return Hypergraph::from_keys(k, sn, std::move(kept));
}

}  // namespace detail

// Locality-reduced verification for star-plus-gadget hypergraphs. Checks:
//   (a) embedded F-shadows pairwise disjoint across gadgets,
//   (b) every embedded G-edge is a star edge (contains 0, labels < n) and
//       every embedded F-edge avoids 0,
//   (c) per gadget, exhaustive tight-cycle search on the restriction of
//       (star \ G_i) ∪ F_i to {0} ∪ V(F_i) ∪ V(G_i).
// Soundness of (c) for any n: in (star \ G_i) ∪ F_i every edge off V(F_i)
// contains 0; a cycle vertex lies in exactly k cycle edges and distinct
// vertices have distinct window sets, so a vertex outside {0} ∪ V(F_i)
// would occupy the center's window positions — impossible. Hence every
// tight cycle lives inside the restriction.
inline CheckReport confined_verify(int n, int k, const std::vector<EmbeddedGadget>& gadgets) {
    if (k < 2 || n < k) throw ParamError("confined_verify: need k >= 2 and n >= k");
    CheckReport report;

    // Embeddings injective, into {1..n-1}; templates well-formed.
    {
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < gadgets.size() && ok; ++i) {
            const auto& eg = gadgets[i];
            if (eg.gadget.k != k) {
                ok = false;
                detail = "gadget " + std::to_string(i) + " has uniformity " +
                         std::to_string(eg.gadget.k);
                break;
            }
            if (eg.embedding.size() != static_cast<size_t>(eg.gadget.m)) {
                ok = false;
                detail = "gadget " + std::to_string(i) + " embedding has wrong arity";
                break;
            }
            std::vector<VertexLabel> img = eg.embedding;
            std::sort(img.begin(), img.end());
            for (size_t j = 0; j < img.size(); ++j) {
                if (img[j] < 1 || img[j] >= n || (j > 0 && img[j] == img[j - 1])) {
                    ok = false;
                    detail = "gadget " + std::to_string(i) + " embedding not injective into {1..n-1}";
                    break;
                }
            }
        }
        report.add("embedding_valid", ok, detail);
    }

    // F avoids the center; embedded G-edges are star edges.
    {
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < gadgets.size() && ok; ++i) {
            for (const auto& e : gadgets[i].gadget.f_edges) {
                if (e.size() != static_cast<size_t>(k) ||
                    std::find(e.begin(), e.end(), VertexLabel{0}) != e.end()) {
                    ok = false;
                    detail = "gadget " + std::to_string(i) + " has an F-edge touching the center";
                    break;
                }
            }
            for (const auto& e : gadgets[i].gadget.g_edges) {
                if (e.size() != static_cast<size_t>(k) ||
                    std::find(e.begin(), e.end(), VertexLabel{0}) == e.end()) {
                    ok = false;
                    detail = "gadget " + std::to_string(i) + " has a G-edge missing the center";
                    break;
                }
            }
        }
        report.add("g_in_star", ok, detail);
    }

    if (!report.pass) return report;  // embedded edge images would be meaningless

    // (a) pairwise disjoint embedded F-shadows.
    {
        bool ok = true;
        std::string detail;
        std::unordered_map<SetKey, size_t, SetKeyHash> owner;
        for (size_t i = 0; i < gadgets.size() && ok; ++i) {
            for (const auto& e : gadgets[i].embedded_f()) {
                for (SetKey key : subset_keys(e, k - 1)) {
                    const auto [it, fresh] = owner.emplace(key, i);
                    if (!fresh && it->second != i) {
                        std::vector<VertexLabel> labels = unpack_labels(key, k - 1);
                        detail = "gadgets " + std::to_string(it->second) + " and " +
                                 std::to_string(i) + " share " +
                                 detail::label_set_string(labels);
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        report.add("shadow_disjoint", ok, detail);
    }

    // (c) restricted exhaustive detection, one gadget at a time.
    {
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < gadgets.size(); ++i) {
            std::vector<VertexLabel> back;
            const Hypergraph patch =
                detail::restricted_patch(k, gadgets[i].embedded_f(), gadgets[i].embedded_g(), back);
            SearchOptions opts;
            opts.exhaustive = true;
            const auto cycle = find_tight_cycle(patch, opts);
            if (cycle) {
                std::vector<VertexLabel> original;
                original.reserve(cycle->vertices.size());
                for (VertexLabel v : cycle->vertices) original.push_back(back[v]);
                report.witness = TightCycle::canonical(std::move(original));
                detail = "gadget " + std::to_string(i) + " admits " + format_witness(*report.witness);
                ok = false;
                break;
            }
        }
        report.add("confined_detection", ok, detail);
    }

    return report;
}

}  // namespace tcf
