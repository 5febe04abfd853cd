// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Every tolerance is exact; runtimes are printed for inspection.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tcf/tcf.hpp"

namespace {

using namespace tcf;

int g_failures = 0;

#define REQUIRE_TRUE(cond, msg)                                   \
    do {                                                          \
        if (!(cond)) throw std::runtime_error(std::string(msg));  \
    } while (0)

void run_criterion(int number, const std::string& title, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
        body();
    } catch (const std::exception& e) {
        failure = e.what();
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (failure.empty()) {
        std::printf("[PASS] criterion %2d: %s (%.1fs)\n", number, title.c_str(),
                    static_cast<double>(elapsed.count()) / 1000.0);
    } else {
        ++g_failures;
        std::printf("[FAIL] criterion %2d: %s (%.1fs)\n        %s\n", number, title.c_str(),
                    static_cast<double>(elapsed.count()) / 1000.0, failure.c_str());
    }
    std::fflush(stdout);
}

bool exhaustively_free(const Hypergraph& h) {
    SearchOptions opts;
    opts.exhaustive = true;
    return !find_tight_cycle(h, opts).has_value();
}

Hypergraph complete_graph(int k, int n) {
    std::vector<std::vector<int>> edges;
    detail::for_each_combination(n, k, [&](std::span<const int> combo) {
        edges.emplace_back(combo.begin(), combo.end());
    });
    return make_hypergraph(k, n, edges);
}

Hypergraph random_graph3(int n, double density, Rng& rng) {
    std::vector<SetKey> keys;
    std::vector<VertexLabel> buf(3);
    detail::for_each_combination(n, 3, [&](std::span<const int> combo) {
        if (rng.unit() < density) {
            for (int j = 0; j < 3; ++j) buf[static_cast<size_t>(j)] = static_cast<VertexLabel>(combo[j]);
            keys.push_back(pack_labels(buf));
        }
    });
    return Hypergraph::from_keys(3, n, std::move(keys));
}

// Star-plus-gadgets union with no verification; agreement baseline.
Hypergraph compose_unchecked(int n, int k, const std::vector<EmbeddedGadget>& gadgets) {
    std::vector<SetKey> removed;
    std::vector<SetKey> keys;
    for (const auto& eg : gadgets)
        for (const auto& e : eg.embedded_g()) removed.push_back(pack_labels(e));
    std::sort(removed.begin(), removed.end());
    for (SetKey key : full_star(n, k).keys())
        if (!std::binary_search(removed.begin(), removed.end(), key)) keys.push_back(key);
    for (const auto& eg : gadgets)
        for (const auto& e : eg.embedded_f()) keys.push_back(pack_labels(e));
    return Hypergraph::from_keys(k, n, std::move(keys));
}

std::vector<VertexLabel> random_embedding(int n, int m, Rng& rng) {
    std::vector<VertexLabel> emb;
    while (static_cast<int>(emb.size()) < m) {
        const VertexLabel v = static_cast<VertexLabel>(1 + rng.below(static_cast<uint64_t>(n - 1)));
        if (std::find(emb.begin(), emb.end(), v) == emb.end()) emb.push_back(v);
    }
    return emb;
}

void criterion1() {
    const std::vector<std::pair<int, uint64_t>> cases{{7, 18}, {9, 32}, {11, 50}};
    for (const auto& [n, expected] : cases) {
        const Hypergraph h = warmup3(n);
        REQUIRE_TRUE(h.edge_count() == expected,
                     "warmup3(" + std::to_string(n) + ") has " + std::to_string(h.edge_count()) +
                         " edges, expected " + std::to_string(expected));
        REQUIRE_TRUE(h.edge_count() == binomial_u64(n - 1, 2) + static_cast<uint64_t>(n - 1) / 2,
                     "edge count formula mismatch");
        REQUIRE_TRUE(exhaustively_free(h), "warmup3(" + std::to_string(n) + ") contains a tight cycle");
    }
}

void criterion2() {
    const std::vector<std::pair<int, int>> stars{{3, 8}, {4, 9}, {5, 10}};
    for (const auto& [k, n] : stars)
        REQUIRE_TRUE(exhaustively_free(full_star(n, k)),
                     "full_star(" + std::to_string(n) + "," + std::to_string(k) + ") not free");
    for (int k : {3, 4, 5}) {
        SearchOptions opts;
        opts.exhaustive = true;
        const auto witness = find_tight_cycle(complete_graph(k, k + 1), opts);
        REQUIRE_TRUE(witness.has_value(), "complete graph on k+1 vertices has no witness");
        REQUIRE_TRUE(witness->length() == k + 1, "witness length is not k+1");
    }
}

void criterion3() {
    const BuildResult result = build_main(32, 3, "pg", 0);
    REQUIRE_TRUE(result.hypergraph.edge_count() == 558, "edge count != 558");
    REQUIRE_TRUE(result.certificate.baseline == 465, "baseline != 465");
    REQUIRE_TRUE(result.certificate.t == 31, "t != 31");
    REQUIRE_TRUE(result.certificate.ratio_num == 6 && result.certificate.ratio_den == 5,
                 "ratio != 6/5");
    REQUIRE_TRUE(result.certificate.beats_conjecture, "certificate does not beat the conjecture");
    for (const auto& c : result.certificate.checks)
        REQUIRE_TRUE(c.pass, "check failed: " + c.name);
    // Re-run the confined verification independently of the pipeline.
    std::vector<EmbeddedGadget> embedded;
    for (const auto& emb : result.plan.embeddings)
        embedded.push_back(EmbeddedGadget{gadget3(), emb});
    REQUIRE_TRUE(confined_verify(32, 3, embedded).pass, "independent confined verification failed");
}

void criterion4() {
    for (int k : {3, 4, 5}) {
        const Gadget g = gadget_k(k);
        const int n = g.m + 1;
        CheckReport report;
        const Hypergraph h = compose(n, k, {identity_embedding(g)}, &report);
        REQUIRE_TRUE(h.edge_count() == binomial_u64(g.m, k - 1) + 1,
                     "k=" + std::to_string(k) + ": edge count != binom(m,k-1)+1");
        REQUIRE_TRUE(h.n() == n, "vertex set is not {0} plus [m]");
        REQUIRE_TRUE(report.pass, "confined verification failed for k=" + std::to_string(k));
        if (k == 3) {
            REQUIRE_TRUE(exhaustively_free(h), "k=3 star-plus-gadget contains a tight cycle");
        } else {
            SearchOptions opts;
            opts.exhaustive = true;
            opts.node_budget = 50'000'000;
            try {
                const auto witness = find_tight_cycle(h, opts);
                REQUIRE_TRUE(!witness.has_value(),
                             "budgeted search found a witness for k=" + std::to_string(k));
            } catch (const IndeterminateError&) {
                // Budget hit without a witness: acceptable here, the confined
                // check above is the sound verdict.
            }
        }
    }
}

void criterion5() {
    Rng rng(500);
    SearchOptions opts;
    opts.exhaustive = true;
    int disagreements = 0;
    int with_cycles = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(4));  // 4..7
        const Hypergraph h = random_graph3(n, 0.3, rng);
        const auto cycles = enumerate_tight_cycles(h);
        const auto found = find_tight_cycle(h, opts);
        if (found.has_value() != !cycles.empty()) ++disagreements;
        if (found) {
            ++with_cycles;
            if (std::find(cycles.begin(), cycles.end(), *found) == cycles.end()) ++disagreements;
        }
    }
    REQUIRE_TRUE(disagreements == 0, std::to_string(disagreements) + " oracle disagreements");
    REQUIRE_TRUE(with_cycles > 0, "sample never produced a cycle");
}

void criterion6() {
    Rng rng(600);
    int cases = 0;
    int disagreements = 0;
    auto check_case = [&](int n, const std::vector<EmbeddedGadget>& gadgets) {
        const bool confined_ok = confined_verify(n, 3, gadgets).pass;
        const bool free = exhaustively_free(compose_unchecked(n, 3, gadgets));
        if (confined_ok != free) ++disagreements;
        ++cases;
    };
    // Valid single copies at every n in 7..12.
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 7 + rep % 6;
        check_case(n, {EmbeddedGadget{gadget3(), random_embedding(n, 6, rng)}});
    }
    // Valid pairs on 12 vertices sharing exactly one vertex.
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<VertexLabel> first = random_embedding(12, 6, rng);
        std::vector<VertexLabel> rest;
        for (VertexLabel v = 1; v <= 11; ++v)
            if (std::find(first.begin(), first.end(), v) == first.end()) rest.push_back(v);
        std::vector<VertexLabel> second = rest;  // 5 remaining vertices
        second.push_back(first[rng.below(6)]);   // plus one shared vertex
        check_case(12, {EmbeddedGadget{gadget3(), first}, EmbeddedGadget{gadget3(), second}});
    }
    // Broken gadgets: dropped accompanying deletions leave short cycles.
    for (int rep = 0; rep < 12; ++rep) {
        Gadget broken = gadget3();
        broken.g_edges.resize(rng.below(3));
        const int n = 7 + static_cast<int>(rng.below(6));
        check_case(n, {EmbeddedGadget{broken, random_embedding(n, 6, rng)}});
    }
    REQUIRE_TRUE(cases >= 50, "not enough cases");
    REQUIRE_TRUE(disagreements == 0, std::to_string(disagreements) + " confinement disagreements");
}

void criterion7() {
    Rng rng(700);
    int disagreements = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 5 + static_cast<int>(rng.below(3));  // 5..7
        const Hypergraph h = random_graph3(n, 0.3, rng);
        std::set<int> tight_lengths;
        for (const auto& c : enumerate_tight_cycles(h)) tight_lengths.insert(c.length());
        const LinearTriple hstar = to_linear(h);
        for (int ell = 4; ell <= n; ++ell)
            if (has_feasible_loose_cycle(hstar, ell) != (tight_lengths.count(ell) != 0))
                ++disagreements;
    }
    REQUIRE_TRUE(disagreements == 0,
                 std::to_string(disagreements) + " transform disagreements (finding against the "
                                                 "feasibility definition)");
}

void criterion8() {
    for (int n : {20, 30, 40, 50}) {
        const BuildResult result = build_main(n, 3, "greedy", 42);
        const int64_t floor_surplus = 3 * ((n - 1) / 6);
        REQUIRE_TRUE(result.certificate.beats_conjecture,
                     "n=" + std::to_string(n) + " certificate failed");
        REQUIRE_TRUE(result.certificate.surplus >= floor_surplus,
                     "n=" + std::to_string(n) + " surplus " +
                         std::to_string(result.certificate.surplus) + " below the floor " +
                         std::to_string(floor_surplus));
    }
    BuildOptions opts;
    opts.seed = 42;
    opts.restarts = 1;
    const BuildResult big = build_main(200, 4, "greedy", opts);
    REQUIRE_TRUE(big.certificate.surplus >= 1, "k=4 n=200 surplus below 1");
    REQUIRE_TRUE(big.certificate.beats_conjecture, "k=4 n=200 certificate failed");
}

void criterion9() {
    const ProjectivePlane fano = pg_lines(2);
    REQUIRE_TRUE(fano.num_points() == 7 && fano.num_lines() == 7, "Fano counts wrong");
    const ProjectivePlane pg5 = pg_lines(5);
    REQUIRE_TRUE(pg5.num_points() == 31 && pg5.num_lines() == 31, "PG(2,5) counts wrong");
    // pg_lines validates exact pair coverage internally before returning;
    // recheck the q=5 plane here independently.
    std::set<std::pair<int, int>> covered;
    for (const auto& line : pg5.lines)
        for (size_t i = 0; i < line.size(); ++i)
            for (size_t j = i + 1; j < line.size(); ++j)
                REQUIRE_TRUE(covered.emplace(line[i], line[j]).second, "pair covered twice");
    REQUIRE_TRUE(covered.size() == 465, "pair coverage incomplete");
}

void criterion10() {
    const std::vector<std::set<int>> families{
        {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 3, 4}};
    for (const auto& s : families) {
        const Hypergraph h = warmup3(9, s);
        std::ostringstream name;
        for (int i : s) name << i;
        REQUIRE_TRUE(exhaustively_free(h), "warmup3(9, {" + name.str() + "}) contains a tight cycle");
    }
}

}  // namespace

int main() {
    run_criterion(1, "warmup construction counts and freeness (n = 7, 9, 11)", criterion1);
    run_criterion(2, "full stars are free; complete graphs witness length k+1", criterion2);
    run_criterion(3, "pg pipeline at n=32: 558 edges, t=31, all checks", criterion3);
    run_criterion(4, "general-k gadget instances for k = 3, 4, 5", criterion4);
    run_criterion(5, "oracle equivalence on 200 random instances", criterion5);
    run_criterion(6, "confinement agreement on 52 composed instances", criterion6);
    run_criterion(7, "linear-transform equivalence on 100 random instances", criterion7);
    run_criterion(8, "greedy pipeline surpluses (k=3 n<=50; k=4 n=200)", criterion8);
    run_criterion(9, "projective plane pair coverage (q = 2, 5)", criterion9);
    run_criterion(10, "restricted index sets on 9 vertices stay free", criterion10);
    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", g_failures);
    return g_failures;
}
