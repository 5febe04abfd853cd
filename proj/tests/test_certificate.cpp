#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tcf/certificate.hpp"

using namespace tcf;
using namespace tcf::testing;

TEST_CASE("make_certificate on the bare star") {
    const Hypergraph star = full_star(7, 3);
    std::optional<TightCycle> witness;
    const Check check = run_exhaustive_check(star, witness);
    const Certificate cert = make_certificate(star, {check}, witness);
    CHECK(cert.surplus == 0);
    CHECK(cert.baseline == 15);
    CHECK_FALSE(cert.beats_conjecture);  // no strict surplus
    CHECK(cert.ratio_num == 1);
    CHECK(cert.ratio_den == 1);
}

TEST_CASE("make_certificate on warmup3(7)") {
    const Hypergraph h = warmup3(7);
    std::optional<TightCycle> witness;
    const Check check = run_exhaustive_check(h, witness);
    const Certificate cert = make_certificate(h, {check}, witness);
    CHECK(cert.surplus == 3);
    CHECK(cert.edge_count == 18);
    CHECK(cert.baseline == 15);
    // 18/15 reduced
    CHECK(cert.ratio_num == 6);
    CHECK(cert.ratio_den == 5);
    CHECK(cert.beats_conjecture);
}

TEST_CASE("make_certificate records a witness on failure") {
    const Hypergraph k4 = complete_graph(3, 4);
    std::optional<TightCycle> witness;
    const Check check = run_exhaustive_check(k4, witness);
    const Certificate cert = make_certificate(k4, {check}, witness);
    CHECK_FALSE(cert.beats_conjecture);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->length() == 4);
}

TEST_CASE("surplus alone never beats the conjecture") {
    // 16 > 15 edges but no freeness check was run.
    const Hypergraph k4 = complete_graph(3, 7);
    const Certificate cert = make_certificate(full_star(7, 3), {});
    CHECK_FALSE(cert.beats_conjecture);
}

TEST_CASE("build_main pg pipeline at n=32") {
    const BuildResult result = build_main(32, 3, "pg", 0);
    CHECK(result.hypergraph.edge_count() == 558);
    CHECK(result.certificate.baseline == 465);
    CHECK(result.certificate.surplus == 93);
    CHECK(result.certificate.t == 31);
    CHECK(result.certificate.ratio_num == 6);
    CHECK(result.certificate.ratio_den == 5);
    CHECK(result.certificate.beats_conjecture);
    for (const auto& c : result.certificate.checks) CHECK(c.pass);
}

TEST_CASE("build_main greedy at n=7") {
    const BuildResult result = build_main(7, 3, "greedy", 3);
    CHECK(result.hypergraph.edge_count() == 18);
    CHECK(result.certificate.surplus == 3);
    CHECK(result.certificate.t == 1);
    CHECK(result.certificate.beats_conjecture);
}

TEST_CASE("build_main propagates packing size errors") {
    CHECK_THROWS_AS(build_main(10, 4, "greedy", 0), SizeError);
    CHECK_THROWS_AS(build_main(20, 3, "pg", 0), ParamError);
    CHECK_THROWS_AS(build_main(32, 4, "pg", 0), ParamError);
}

TEST_CASE("certificate JSON round trip") {
    const BuildResult result = build_main(32, 3, "pg", 0);
    const std::string json = render(result.certificate, RenderFormat::json);
    const Certificate back = parse_certificate(json);
    CHECK(back == result.certificate);

    // A failing certificate with a witness round-trips too.
    const Hypergraph k4 = complete_graph(3, 4);
    std::optional<TightCycle> witness;
    const Check check = run_exhaustive_check(k4, witness);
    const Certificate bad = make_certificate(k4, {check}, witness);
    CHECK(parse_certificate(render(bad, RenderFormat::json)) == bad);
}

TEST_CASE("text rendering mentions the verdict") {
    const BuildResult result = build_main(7, 3, "greedy", 3);
    const std::string text = render(result.certificate, RenderFormat::text);
    CHECK(text.find("beats_conjecture=true") != std::string::npos);
    CHECK(text.find("18/15 = 6/5") != std::string::npos);
}
