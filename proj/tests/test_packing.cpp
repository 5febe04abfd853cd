#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tcf/packing.hpp"
#include "tcf/projective_plane.hpp"

using namespace tcf;

TEST_CASE("pg_lines builds Steiner planes") {
    const ProjectivePlane fano = pg_lines(2);
    CHECK(fano.num_points() == 7);
    CHECK(fano.num_lines() == 7);
    for (const auto& line : fano.lines) CHECK(line.size() == 3);

    const ProjectivePlane pg5 = pg_lines(5);
    CHECK(pg5.num_points() == 31);
    CHECK(pg5.num_lines() == 31);
    for (const auto& line : pg5.lines) CHECK(line.size() == 6);

    CHECK_THROWS_AS(pg_lines(4), ParamError);
    CHECK_THROWS_AS(pg_lines(1), ParamError);
}

TEST_CASE("pg_lines point degrees") {
    for (int q : {2, 3, 5, 7}) {
        const ProjectivePlane plane = pg_lines(q);
        std::vector<int> degree(static_cast<size_t>(plane.num_points()), 0);
        for (const auto& line : plane.lines)
            for (VertexLabel p : line) ++degree[p];
        for (int d : degree) CHECK(d == q + 1);
    }
}

TEST_CASE("steiner_pack_k6 decomposes K31 into 31 copies of K6") {
    const PackingPlan plan = steiner_pack_k6(32);
    CHECK(plan.t() == 31);
    CHECK(plan.method == "pg");
    CHECK(static_cast<bool>(validate_packing(plan, gadget3())));

    // Embedded shadows partition all 465 pairs exactly once.
    std::set<std::pair<int, int>> covered;
    for (const auto& emb : plan.embeddings)
        for (size_t i = 0; i < emb.size(); ++i)
            for (size_t j = i + 1; j < emb.size(); ++j) {
                const auto pr = std::minmax(emb[i], emb[j]);
                const bool fresh = covered.emplace(pr.first, pr.second).second;
                CHECK(fresh);
            }
    CHECK(covered.size() == 465);

    CHECK_THROWS_AS(steiner_pack_k6(20), ParamError);
    try {
        steiner_pack_k6(20);
    } catch (const ParamError& e) {
        CHECK(std::string(e.what()).find("greedy") != std::string::npos);
    }
}

TEST_CASE("greedy_pack trivial and floor cases") {
    const Gadget g = gadget3();
    const PackingPlan one = greedy_pack(7, g, 1, 2);
    CHECK(one.t() == 1);

    const PackingPlan two = greedy_pack(13, g, 1, 2);
    CHECK(two.t() >= 2);

    CHECK_THROWS_AS(greedy_pack(6, g, 1, 2), SizeError);
}

TEST_CASE("greedy_pack is deterministic in (seed, restarts)") {
    const Gadget g = gadget3();
    const PackingPlan a = greedy_pack(20, g, 9, 3);
    const PackingPlan b = greedy_pack(20, g, 9, 3);
    CHECK(a.embeddings == b.embeddings);
    CHECK(a.method == b.method);

    // Threading only changes the schedule, never the result.
    const PackingPlan c = greedy_pack(20, g, 9, 3, 3);
    CHECK(a.embeddings == c.embeddings);
}

TEST_CASE("greedy_pack on 32 vertices with restarts") {
    const PackingPlan plan = greedy_pack(32, gadget3(), 7, 20);
    CHECK(static_cast<bool>(validate_packing(plan, gadget3())));
    CHECK(plan.t() >= 20);
    CHECK(plan.t() <= 31);  // the Steiner decomposition is optimal
}

TEST_CASE("validate_packing catches violations") {
    const Gadget g = gadget3();
    PackingPlan plan;
    plan.n = 20;
    plan.k = 3;
    plan.m = 6;
    plan.embeddings = {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}};
    CHECK_FALSE(validate_packing(plan, g).ok);

    plan.embeddings = {{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}};
    CHECK(validate_packing(plan, g).ok);

    plan.embeddings = {{0, 2, 3, 4, 5, 6}};
    CHECK_FALSE(validate_packing(plan, g).ok);  // touches the center

    plan.embeddings = {{1, 2, 3, 4, 5, 5}};
    CHECK_FALSE(validate_packing(plan, g).ok);  // not injective
}

TEST_CASE("plan serialization round trip") {
    const PackingPlan plan = steiner_pack_k6(32);
    const PackingPlan back = parse_plan(serialize_plan(plan));
    CHECK(back.n == plan.n);
    CHECK(back.k == plan.k);
    CHECK(back.m == plan.m);
    CHECK(back.method == plan.method);
    CHECK(back.embeddings == plan.embeddings);
}
