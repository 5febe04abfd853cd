#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcf/binomial.hpp"
#include "tcf/confined.hpp"
#include "tcf/constructions.hpp"
#include "tcf/errors.hpp"
#include "tcf/hypergraph.hpp"
#include "tcf/packing.hpp"
#include "tcf/version.hpp"

namespace tcf {

// The machine-readable verdict record. All arithmetic is exact: the ratio
// is a reduced rational, never a float. beats_conjecture demands a strict
// surplus and a passing freeness check (exhaustive_detection or
// confined_detection) among the recorded checks.
struct Certificate {
    std::string version = kVersion;
    int n = 0;
    int k = 0;
    uint64_t edge_count = 0;
    uint64_t baseline = 0;
    int64_t surplus = 0;
    uint64_t ratio_num = 0;
    uint64_t ratio_den = 1;
    uint64_t t = 0;
    std::string gadget;
    std::string method;
    uint64_t seed = 0;
    std::vector<Check> checks;
    bool beats_conjecture = false;
    std::optional<TightCycle> witness;

    bool operator==(const Certificate& o) const {
        const bool w_eq = witness.has_value() == o.witness.has_value() &&
                          (!witness || witness->vertices == o.witness->vertices);
        return version == o.version && n == o.n && k == o.k && edge_count == o.edge_count &&
               baseline == o.baseline && surplus == o.surplus && ratio_num == o.ratio_num &&
               ratio_den == o.ratio_den && t == o.t && gadget == o.gadget && method == o.method &&
               seed == o.seed && checks == o.checks && beats_conjecture == o.beats_conjecture &&
               w_eq;
    }
};

// Thrown by build_main when a check fails: the failing certificate is
// attached and no hypergraph is emitted.
struct BuildError : Error {
    explicit BuildError(Certificate c) : Error(describe(c)), cert(std::move(c)) {}
    Certificate cert;

    static std::string describe(const Certificate& c) {
        for (const auto& chk : c.checks)
            if (!chk.pass)
                return "build aborted, check failed: " + chk.name +
                       (chk.detail.empty() ? "" : " (" + chk.detail + ")");
        return "build aborted";
    }
};

inline Certificate make_certificate(const Hypergraph& h, std::vector<Check> checks,
                                    std::optional<TightCycle> witness = std::nullopt) {
    Certificate cert;
    cert.n = h.n();
    cert.k = h.k();
    cert.edge_count = h.edge_count();
    cert.baseline = binomial_u64(h.n() - 1, h.k() - 1);
    cert.surplus = static_cast<int64_t>(cert.edge_count) - static_cast<int64_t>(cert.baseline);
    if (cert.edge_count == 0) {
        cert.ratio_num = 0;
        cert.ratio_den = 1;
    } else {
        const uint64_t g = gcd_u64(cert.edge_count, cert.baseline);
        cert.ratio_num = cert.edge_count / g;
        cert.ratio_den = cert.baseline / g;
    }
    cert.checks = std::move(checks);
    cert.witness = std::move(witness);

    bool all_pass = true;
    bool freeness_passed = false;
    for (const auto& c : cert.checks) {
        all_pass = all_pass && c.pass;
        if (c.pass && (c.name == "exhaustive_detection" || c.name == "confined_detection"))
            freeness_passed = true;
    }
    cert.beats_conjecture = cert.surplus > 0 && all_pass && freeness_passed;
    return cert;
}

// Runs an exhaustive search and packages the outcome as a check; the
// witness, if any, lands in `witness_out`.
inline Check run_exhaustive_check(const Hypergraph& h, std::optional<TightCycle>& witness_out,
                                  std::optional<uint64_t> node_budget = std::nullopt) {
    SearchOptions opts;
    opts.exhaustive = true;
    opts.node_budget = node_budget;
    const auto cycle = find_tight_cycle(h, opts);
    if (cycle) {
        witness_out = cycle;
        return Check{"exhaustive_detection", false, "found " + format_witness(*cycle)};
    }
    return Check{"exhaustive_detection", true, ""};
}

enum class RenderFormat { text, json };

inline std::string render(const Certificate& cert, RenderFormat format) {
    if (format == RenderFormat::json) {
        nlohmann::ordered_json j;
        j["version"] = cert.version;
        j["n"] = cert.n;
        j["k"] = cert.k;
        j["edge_count"] = cert.edge_count;
        j["baseline"] = cert.baseline;
        j["surplus"] = cert.surplus;
        j["ratio_num"] = cert.ratio_num;
        j["ratio_den"] = cert.ratio_den;
        j["t"] = cert.t;
        j["gadget"] = cert.gadget;
        j["method"] = cert.method;
        j["seed"] = cert.seed;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : cert.checks)
            j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["beats_conjecture"] = cert.beats_conjecture;
        if (cert.witness) {
            j["witness"] = {{"length", cert.witness->length()},
                            {"vertices", cert.witness->vertices}};
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream ss;
    ss << "certificate (v" << cert.version << ")\n"
       << "  n=" << cert.n << " k=" << cert.k << "\n"
       << "  edges=" << cert.edge_count << " baseline=" << cert.baseline
       << " surplus=" << cert.surplus << "\n"
       << "  ratio=" << cert.edge_count << "/" << cert.baseline << " = " << cert.ratio_num << "/"
       << cert.ratio_den << "\n";
    if (!cert.gadget.empty())
        ss << "  gadget=" << cert.gadget << " method=" << cert.method << " t=" << cert.t
           << " seed=" << cert.seed << "\n";
    for (const auto& c : cert.checks)
        ss << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
           << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    if (cert.witness) ss << "  witness " << format_witness(*cert.witness) << "\n";
    ss << "  beats_conjecture=" << (cert.beats_conjecture ? "true" : "false") << "\n";
    return ss.str();
}

inline Certificate parse_certificate(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Certificate cert;
    cert.version = j.at("version").get<std::string>();
    cert.n = j.at("n").get<int>();
    cert.k = j.at("k").get<int>();
    cert.edge_count = j.at("edge_count").get<uint64_t>();
    cert.baseline = j.at("baseline").get<uint64_t>();
    cert.surplus = j.at("surplus").get<int64_t>();
    cert.ratio_num = j.at("ratio_num").get<uint64_t>();
    cert.ratio_den = j.at("ratio_den").get<uint64_t>();
    cert.t = j.at("t").get<uint64_t>();
    cert.gadget = j.at("gadget").get<std::string>();
    cert.method = j.at("method").get<std::string>();
    cert.seed = j.at("seed").get<uint64_t>();
    for (const auto& c : j.at("checks"))
        cert.checks.push_back(Check{c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                                    c.at("detail").get<std::string>()});
    cert.beats_conjecture = j.at("beats_conjecture").get<bool>();
    if (j.contains("witness")) {
        TightCycle w;
        w.vertices = j["witness"].at("vertices").get<std::vector<VertexLabel>>();
        cert.witness = std::move(w);
    }
    return cert;
}

struct BuildOptions {
    uint64_t seed = 0;
    int restarts = 4;
    int threads = 1;
};

struct BuildResult {
    Hypergraph hypergraph;
    Certificate certificate;
    PackingPlan plan;
};

// The end-to-end pipeline: pick the gadget for k, obtain a packing plan
// (pg = exact PG(2,5) decomposition, greedy = seeded randomized packing),
// compose, and certify. Aborts with BuildError carrying the failing
// certificate rather than emitting an unverified hypergraph.
inline BuildResult build_main(int n, int k, const std::string& method, BuildOptions opts = {}) {
    if (k < 3) throw ParamError("build_main: k must be at least 3");
    const Gadget gadget = (k == 3) ? gadget3() : gadget_k(k);

    PackingPlan plan;
    if (method == "pg") {
        if (k != 3) throw ParamError("build_main: method pg supports k = 3 only");
        plan = steiner_pack_k6(n);
        plan.seed = opts.seed;
    } else if (method == "greedy") {
        plan = greedy_pack(n, gadget, opts.seed, opts.restarts, opts.threads);
    } else {
        throw ParamError("build_main: method must be pg or greedy");
    }

    std::vector<Check> checks;
    const PackingValidation pv = validate_packing(plan, gadget);
    checks.push_back(Check{"packing_valid", pv.ok, pv.detail});

    std::vector<EmbeddedGadget> embedded;
    embedded.reserve(plan.embeddings.size());
    for (const auto& emb : plan.embeddings) embedded.push_back(EmbeddedGadget{gadget, emb});

    auto finish = [&](const Hypergraph& h, std::vector<Check> all_checks,
                      std::optional<TightCycle> witness) {
        Certificate cert = make_certificate(h, std::move(all_checks), std::move(witness));
        cert.t = plan.t();
        cert.gadget = gadget.id;
        cert.method = plan.method;
        cert.seed = opts.seed;
        return cert;
    };

    CheckReport report;
    Hypergraph h;
    try {
        h = compose(n, k, embedded, &report);
    } catch (const CheckFailedError& e) {
        // Certify against the bare star so the failure is still on record.
        std::vector<Check> all = checks;
        all.insert(all.end(), e.report.checks.begin(), e.report.checks.end());
        throw BuildError(finish(full_star(n, k), std::move(all), e.report.witness));
    }
    checks.insert(checks.end(), report.checks.begin(), report.checks.end());

    const uint128 expected =
        binomial(n - 1, k - 1) +
        static_cast<uint128>(plan.t()) * static_cast<uint128>(gadget.net_gain());
    const bool count_ok = static_cast<uint128>(h.edge_count()) == expected;
    checks.push_back(Check{"edge_count", count_ok,
                           count_ok ? "" : "composition does not add t * net_gain edges"});

    Certificate cert = finish(h, std::move(checks), report.witness);
    if (!cert.beats_conjecture) throw BuildError(std::move(cert));
    return BuildResult{std::move(h), std::move(cert), std::move(plan)};
}

inline BuildResult build_main(int n, int k, const std::string& method, uint64_t seed) {
    BuildOptions opts;
    opts.seed = seed;
    return build_main(n, k, method, opts);
}

}  // namespace tcf
