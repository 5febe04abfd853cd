#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "tcf/linear_transform.hpp"
#include "tcf/tight_cycle.hpp"

using namespace tcf;
using namespace tcf::testing;

TEST_CASE("to_linear shapes") {
    const LinearTriple single = to_linear(make_hypergraph(3, 5, {{1, 2, 3}}));
    CHECK(single.vertex_count() == 3);
    CHECK(single.edge_count() == 1);

    const LinearTriple tc6 = to_linear(tight_cycle_graph(3, 6));
    CHECK(tc6.vertex_count() == 12);
    CHECK(tc6.edge_count() == 6);

    const LinearTriple star5 = to_linear(full_star(5, 3));
    CHECK(star5.vertex_count() == 10);
    CHECK(star5.edge_count() == 6);

    CHECK_THROWS_AS(to_linear(full_star(5, 4)), UniformityError);
}

TEST_CASE("to_linear output is linear") {
    Rng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const Hypergraph h = random_graph(3, 7, 0.4, rng);
        const LinearTriple hstar = to_linear(h);
        CHECK(hstar.edge_count() == h.edge_count());
        for (size_t i = 0; i < hstar.edge_count(); ++i)
            for (size_t j = i + 1; j < hstar.edge_count(); ++j) {
                PairVertex common;
                CHECK(detail::triple_intersection(hstar.triples[i], hstar.triples[j], &common) <= 1);
            }
    }
}

TEST_CASE("feasible loose cycles on the canonical instances") {
    CHECK(has_feasible_loose_cycle(to_linear(tight_cycle_graph(3, 6)), 6));
    const LinearTriple star6 = to_linear(full_star(6, 3));
    for (int ell = 4; ell <= 8; ++ell) CHECK_FALSE(has_feasible_loose_cycle(star6, ell));
    CHECK_FALSE(has_feasible_loose_cycle(to_linear(make_hypergraph(3, 5, {{1, 2, 3}})), 4));
    CHECK_THROWS_AS(has_feasible_loose_cycle(star6, 3), ParamError);
}

TEST_CASE("transform equivalence on random instances") {
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 5 + static_cast<int>(rng.below(3));  // 5..7
        const Hypergraph h = random_graph(3, n, 0.3, rng);
        std::set<int> tight_lengths;
        for (const auto& c : enumerate_tight_cycles(h)) tight_lengths.insert(c.length());
        const LinearTriple hstar = to_linear(h);
        for (int ell = 4; ell <= n; ++ell)
            CHECK(has_feasible_loose_cycle(hstar, ell) == (tight_lengths.count(ell) != 0));
    }
}
