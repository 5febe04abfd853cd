#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "tcf/binomial.hpp"
#include "tcf/errors.hpp"
#include "tcf/gadget.hpp"
#include "tcf/projective_plane.hpp"
#include "tcf/rng.hpp"

namespace tcf {

// A family of injective gadget placements into {1..n-1} whose embedded
// F-shadows are pairwise disjoint.
struct PackingPlan {
    int n = 0;
    int k = 0;
    int m = 0;
    std::string gadget_id;
    std::string method;  // pg | greedy | vertex-disjoint
    uint64_t seed = 0;
    std::vector<std::vector<VertexLabel>> embeddings;

    size_t t() const { return embeddings.size(); }
};

struct PackingValidation {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

// Embeddings injective, 0-avoiding, within {1..n-1}; embedded F-shadows
// pairwise disjoint. Reports the first violation.
inline PackingValidation validate_packing(const PackingPlan& plan, const Gadget& gadget) {
    if (plan.k != gadget.k || plan.m != gadget.m)
        return {false, "plan does not match the gadget's dimensions"};
    std::unordered_map<SetKey, size_t, SetKeyHash> owner;
    for (size_t i = 0; i < plan.embeddings.size(); ++i) {
        const auto& emb = plan.embeddings[i];
        if (emb.size() != static_cast<size_t>(plan.m))
            return {false, "embedding " + std::to_string(i) + " has wrong arity"};
        auto sorted = emb;
        std::sort(sorted.begin(), sorted.end());
        for (size_t j = 0; j < sorted.size(); ++j)
            if (sorted[j] < 1 || sorted[j] >= plan.n || (j > 0 && sorted[j] == sorted[j - 1]))
                return {false, "embedding " + std::to_string(i) + " not injective into {1..n-1}"};
        const EmbeddedGadget eg{gadget, emb};
        for (const auto& e : eg.embedded_f())
            for (SetKey key : subset_keys(e, plan.k - 1)) {
                const auto [it, fresh] = owner.emplace(key, i);
                if (!fresh && it->second != i)
                    return {false, "embeddings " + std::to_string(it->second) + " and " +
                                       std::to_string(i) + " have intersecting shadows"};
            }
    }
    return {};
}

// Exact K6 decomposition of the complete graph on {1..31} from the 31
// lines of PG(2, 5); the embedded shadows partition all 465 pairs.
inline PackingPlan steiner_pack_k6(int n) {
    if (n != 32)
        throw ParamError(
            "steiner_pack_k6: needs n-1 = q^2+q+1 with q+1 = 6, i.e. n = 32; use greedy_pack");
    const ProjectivePlane plane = pg_lines(5);
    PackingPlan plan;
    plan.n = n;
    plan.k = 3;
    plan.m = 6;
    plan.gadget_id = "gadget3";
    plan.method = "pg";
    for (const auto& line : plane.lines) {
        std::vector<VertexLabel> emb;
        emb.reserve(line.size());
        for (VertexLabel p : line) emb.push_back(static_cast<VertexLabel>(p + 1));
        plan.embeddings.push_back(std::move(emb));
    }
    const PackingValidation v = validate_packing(plan, gadget3());
    if (!v) throw ConstructionError("steiner_pack_k6: " + v.detail);
    return plan;
}

namespace detail {

// Combinadic ranks of (k-1)-subsets of {1..n-1}: the coverage set fits in
// a flat bitset, which keeps the greedy inner loop cache-resident.
class SubsetRanker {
public:
    SubsetRanker(int n, int r) : r_(r) {
        const uint64_t universe = binomial_u64(n - 1, r);
        if (universe > 400'000'000ULL)
            throw SizeError("greedy_pack: shadow universe too large");
        size_ = universe;
        table_.assign(static_cast<size_t>(n) * static_cast<size_t>(r + 1), 0);
        for (int x = 0; x < n; ++x)
            for (int j = 1; j <= r; ++j)
                table_[static_cast<size_t>(x) * static_cast<size_t>(r_ + 1) + static_cast<size_t>(j)] =
                    binomial_u64(x, j);
    }

    // labels: ascending members of {1..n-1}.
    uint64_t rank(const VertexLabel* labels) const {
        uint64_t r = 0;
        for (int j = 0; j < r_; ++j)
            r += table_[static_cast<size_t>(labels[j] - 1) * static_cast<size_t>(r_ + 1) +
                        static_cast<size_t>(j + 1)];
        return r;
    }

    uint64_t size() const { return size_; }

private:
    int r_;
    uint64_t size_ = 0;
    std::vector<uint64_t> table_;
};

struct GreedyRun {
    size_t t = 0;
    int run_index = 0;
    std::vector<std::vector<VertexLabel>> embeddings;
};

inline GreedyRun greedy_run(int n, const Gadget& gadget,
                            const std::vector<std::vector<VertexLabel>>& template_shadow,
                            const SubsetRanker& ranker, uint64_t stall_limit, uint64_t seed,
                            int run_index) {
    Rng rng(seed + static_cast<uint64_t>(run_index));
    const int m = gadget.m;
    const int r = gadget.k - 1;
    std::vector<uint64_t> covered((ranker.size() + 63) / 64, 0);
    auto covered_bit = [&](uint64_t idx) { return (covered[idx >> 6] >> (idx & 63)) & 1; };
    auto set_bit = [&](uint64_t idx) { covered[idx >> 6] |= uint64_t{1} << (idx & 63); };

    GreedyRun run;
    run.run_index = run_index;
    std::vector<VertexLabel> emb(static_cast<size_t>(m));
    std::vector<VertexLabel> sub(static_cast<size_t>(r));
    std::vector<uint64_t> ranks;
    ranks.reserve(template_shadow.size());
    uint64_t rejections = 0;
    while (rejections < stall_limit) {
        // Sample an injective embedding of {1..m}.
        for (int i = 0; i < m; ++i) {
            for (;;) {
                const VertexLabel v = static_cast<VertexLabel>(1 + rng.below(static_cast<uint64_t>(n - 1)));
                bool dup = false;
                for (int j = 0; j < i; ++j) dup = dup || emb[static_cast<size_t>(j)] == v;
                if (!dup) {
                    emb[static_cast<size_t>(i)] = v;
                    break;
                }
            }
        }
        bool fresh = true;
        ranks.clear();
        for (const auto& tmpl : template_shadow) {
            for (int j = 0; j < r; ++j) sub[static_cast<size_t>(j)] = emb[static_cast<size_t>(tmpl[static_cast<size_t>(j)]) - 1];
            std::sort(sub.begin(), sub.end());
            const uint64_t idx = ranker.rank(sub.data());
            if (covered_bit(idx)) {
                fresh = false;
                break;
            }
            ranks.push_back(idx);
        }
        if (!fresh) {
            ++rejections;
            continue;
        }
        for (uint64_t idx : ranks) set_bit(idx);
        run.embeddings.push_back(emb);
        rejections = 0;
    }
    run.t = run.embeddings.size();
    return run;
}

}  // namespace detail

// Seeded randomized packing: rejection-sample injective embeddings,
// accepting one iff its embedded F-shadow avoids everything accepted so
// far; a run ends after 50 * binom(n, 2) consecutive rejections. The best
// of `restarts` runs wins (ties: lowest run index). Falls back to the
// always-available vertex-disjoint plan, so t >= floor((n-1)/m).
inline PackingPlan greedy_pack(int n, const Gadget& gadget, uint64_t seed, int restarts = 4,
                               int threads = 1) {
    if (gadget.m < gadget.k) throw ParamError("greedy_pack: malformed gadget");
    if (n - 1 < gadget.m) throw SizeError("greedy_pack: n-1 is smaller than the gadget");
    if (restarts < 1) throw ParamError("greedy_pack: restarts must be positive");

    // Template shadow of F, as label tuples of {1..m}.
    std::vector<std::vector<VertexLabel>> template_shadow;
    {
        std::vector<SetKey> keys;
        for (const auto& e : gadget.f_edges)
            for (SetKey key : subset_keys(e, gadget.k - 1)) keys.push_back(key);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (SetKey key : keys) template_shadow.push_back(unpack_labels(key, gadget.k - 1));
    }

    const detail::SubsetRanker ranker(n, gadget.k - 1);
    const uint64_t stall_limit = 50 * binomial_u64(n, 2);

    std::vector<detail::GreedyRun> runs(static_cast<size_t>(restarts));
    const int workers = std::max(1, std::min(threads, restarts));
    if (workers == 1) {
        for (int r = 0; r < restarts; ++r)
            runs[static_cast<size_t>(r)] =
                detail::greedy_run(n, gadget, template_shadow, ranker, stall_limit, seed, r);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int r = w; r < restarts; r += workers)
                    runs[static_cast<size_t>(r)] =
                        detail::greedy_run(n, gadget, template_shadow, ranker, stall_limit, seed, r);
            });
        for (auto& th : pool) th.join();
    }

    const detail::GreedyRun* best = &runs[0];
    for (const auto& run : runs)
        if (run.t > best->t) best = &run;

    PackingPlan plan;
    plan.n = n;
    plan.k = gadget.k;
    plan.m = gadget.m;
    plan.gadget_id = gadget.id;
    plan.seed = seed;

    const size_t floor_t = static_cast<size_t>((n - 1) / gadget.m);
    if (best->t >= floor_t) {
        plan.method = "greedy";
        plan.embeddings = best->embeddings;
    } else {
        plan.method = "vertex-disjoint";
        for (size_t c = 0; c < floor_t; ++c) {
            std::vector<VertexLabel> emb;
            for (int i = 0; i < gadget.m; ++i)
                emb.push_back(static_cast<VertexLabel>(1 + c * static_cast<size_t>(gadget.m) + static_cast<size_t>(i)));
            plan.embeddings.push_back(std::move(emb));
        }
    }

    const PackingValidation v = validate_packing(plan, gadget);
    if (!v) throw ConstructionError("greedy_pack produced an invalid plan: " + v.detail);
    return plan;
}

// Text form: header `k n m t method`, then t lines of m image labels.
inline std::string serialize_plan(const PackingPlan& plan) {
    std::ostringstream ss;
    ss << plan.k << ' ' << plan.n << ' ' << plan.m << ' ' << plan.t() << ' ' << plan.method << "\n";
    for (const auto& emb : plan.embeddings) {
        for (size_t i = 0; i < emb.size(); ++i) ss << (i ? " " : "") << emb[i];
        ss << "\n";
    }
    return ss.str();
}

inline PackingPlan parse_plan(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("missing plan header", 1);
    PackingPlan plan;
    size_t t = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> plan.k >> plan.n >> plan.m >> t >> plan.method))
            throw ParseError("plan header must be `k n m t method`", lineno);
    }
    for (size_t i = 0; i < t; ++i) {
        if (!next_line()) throw ParseError("expected " + std::to_string(t) + " embeddings", lineno + 1);
        std::istringstream ls(line);
        std::vector<VertexLabel> emb;
        long long v;
        while (ls >> v) {
            if (v < 1 || v > kMaxVertices) throw ParseError("label out of range", lineno);
            emb.push_back(static_cast<VertexLabel>(v));
        }
        if (emb.size() != static_cast<size_t>(plan.m))
            throw ParseError("embedding has wrong arity", lineno);
        plan.embeddings.push_back(std::move(emb));
    }
    return plan;
}

}  // namespace tcf
