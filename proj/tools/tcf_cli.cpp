// tcf: construct, verify, pack, oracle and report over HGF files.
//
// Exit codes: 0 success / tight-cycle-free; 2 tight cycle found (witness on
// stdout); 3 indeterminate (budget hit or confined checks inconclusive);
// 1 usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tcf/tcf.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCycle = 2;
constexpr int kExitIndeterminate = 3;

// Exhaustive search is the default only up to this many vertices; beyond
// it the caller must either supply gadget metadata (confined mode) or opt
// in to a possibly long exhaustive run explicitly.
constexpr int kExhaustiveDefaultLimit = 16;

struct ConstructArgs {
    std::string kind;
    int n = 0;
    int k = 3;
    std::string method = "greedy";
    uint64_t seed = 0;
    int restarts = 4;
    int threads = 1;
    std::string out_path;
    std::string cert_path;
};

struct VerifyArgs {
    std::string in_path;
    std::string mode;  // "", "exhaustive", "confined"
    std::optional<int> max_len;
    std::optional<uint64_t> budget;
};

void write_certificate(const tcf::Certificate& cert, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw tcf::Error("cannot open " + path + " for writing");
    out << tcf::render(cert, tcf::RenderFormat::json);
}

tcf::Certificate certify_exhaustively(const tcf::Hypergraph& h) {
    std::optional<tcf::TightCycle> witness;
    std::vector<tcf::Check> checks{tcf::run_exhaustive_check(h, witness)};
    return tcf::make_certificate(h, std::move(checks), std::move(witness));
}

int run_construct(const ConstructArgs& args) {
    tcf::Hypergraph h;
    std::optional<tcf::Certificate> cert;
    std::vector<std::string> comments;

    if (args.kind == "warmup3") {
        h = tcf::warmup3(args.n);
    } else if (args.kind == "star") {
        h = tcf::full_star(args.n, args.k);
    } else if (args.kind == "gadget3" || args.kind == "gadget-k") {
        const tcf::Gadget g = args.kind == "gadget3" ? tcf::gadget3() : tcf::gadget_k(args.k);
        const int n = args.n > 0 ? args.n : g.m + 1;
        if (n < g.m + 1) throw tcf::SizeError("n must be at least m+1 = " + std::to_string(g.m + 1));
        const auto embedded = tcf::identity_embedding(g);
        tcf::CheckReport report;
        h = tcf::compose(n, g.k, {embedded}, &report);
        tcf::GadgetMetadata meta{g.id, g.k, {embedded.embedding}};
        comments = tcf::metadata_comments(meta);
        if (!args.cert_path.empty()) {
            tcf::Certificate c = tcf::make_certificate(h, report.checks, report.witness);
            c.t = 1;
            c.gadget = g.id;
            c.method = "identity";
            cert = std::move(c);
        }
    } else if (args.kind == "main") {
        tcf::BuildOptions opts;
        opts.seed = args.seed;
        opts.restarts = args.restarts;
        opts.threads = args.threads;
        tcf::BuildResult result = tcf::build_main(args.n, args.k, args.method, opts);
        h = std::move(result.hypergraph);
        cert = std::move(result.certificate);
        tcf::GadgetMetadata meta{result.plan.gadget_id, args.k, result.plan.embeddings};
        comments = tcf::metadata_comments(meta);
    } else {
        throw tcf::ParamError("unknown kind: " + args.kind);
    }

    if (!cert && !args.cert_path.empty()) {
        if (h.n() > kExhaustiveDefaultLimit)
            throw tcf::ParamError("certificate for kind '" + args.kind + "' needs exhaustive " +
                                  "detection, infeasible beyond n=" +
                                  std::to_string(kExhaustiveDefaultLimit));
        cert = certify_exhaustively(h);
    }

    if (!args.out_path.empty()) tcf::write_hgf(h, args.out_path, comments);
    if (!args.cert_path.empty()) write_certificate(*cert, args.cert_path);

    std::cout << args.kind << ": n=" << h.n() << " k=" << h.k() << " edges=" << h.edge_count()
              << " baseline=" << tcf::binomial_u64(h.n() - 1, h.k() - 1) << "\n";
    return kExitOk;
}

int run_verify(const VerifyArgs& args) {
    const tcf::Hypergraph h = tcf::read_hgf(args.in_path);
    const auto meta = tcf::read_metadata(args.in_path);

    std::string mode = args.mode;
    if (mode.empty()) {
        if (h.n() <= kExhaustiveDefaultLimit)
            mode = "exhaustive";
        else if (meta)
            mode = "confined";
        else
            throw tcf::ParamError(
                "n > 16 with no gadget metadata: pass --mode exhaustive explicitly "
                "(may be slow) or provide a file with embedded gadget metadata");
    }

    if (mode == "exhaustive") {
        tcf::SearchOptions opts;
        opts.exhaustive = true;
        opts.max_length = args.max_len;
        opts.node_budget = args.budget;
        try {
            const auto cycle = tcf::find_tight_cycle(h, opts);
            if (cycle) {
                std::cout << tcf::format_witness(*cycle) << "\n";
                return kExitCycle;
            }
            std::cout << "tight-cycle-free\n";
            return kExitOk;
        } catch (const tcf::IndeterminateError& e) {
            std::cout << "indeterminate: " << e.what() << "\n";
            return kExitIndeterminate;
        }
    }
    if (mode != "confined") throw tcf::ParamError("mode must be exhaustive or confined");

    if (!meta) throw tcf::ParamError("confined mode needs tcf:gadget metadata in the file");
    const auto embedded = meta->embedded();
    // The file must be exactly the star-plus-gadgets composition its
    // metadata describes, otherwise confinement says nothing about it.
    tcf::CheckReport report = tcf::confined_verify(h.n(), h.k(), embedded);
    if (report.pass) {
        tcf::Hypergraph recomposed = tcf::compose(h.n(), h.k(), embedded);
        if (recomposed != h)
            throw tcf::ParamError("file does not match its gadget metadata composition");
        std::cout << "tight-cycle-free\n";
        return kExitOk;
    }
    if (report.witness) {
        std::cout << tcf::format_witness(*report.witness) << "\n";
        return kExitCycle;
    }
    for (const auto& c : report.checks)
        if (!c.pass)
            std::cout << "indeterminate: check " << c.name << " failed"
                      << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return kExitIndeterminate;
}

int run_pack(int n, int k, const std::string& method, uint64_t seed, int restarts, int threads,
             const std::string& out_path) {
    const tcf::Gadget gadget = k == 3 ? tcf::gadget3() : tcf::gadget_k(k);
    tcf::PackingPlan plan;
    if (method == "pg")
        plan = tcf::steiner_pack_k6(n);
    else if (method == "greedy")
        plan = tcf::greedy_pack(n, gadget, seed, restarts, threads);
    else
        throw tcf::ParamError("method must be pg or greedy");

    const uint64_t target =
        tcf::binomial_u64(n - 1, k - 1) / tcf::binomial_u64(gadget.m, k - 1);
    std::ostringstream head;
    head << "# t=" << plan.t() << " nibble-target=" << target
         << " floor=" << (n - 1) / gadget.m << " gadget=" << gadget.id << " seed=" << seed
         << "\n";
    const std::string body = head.str() + tcf::serialize_plan(plan);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path);
        if (!out) throw tcf::Error("cannot open " + out_path + " for writing");
        out << body;
    }
    return kExitOk;
}

int run_oracle(const std::string& in_path) {
    const tcf::Hypergraph h = tcf::read_hgf(in_path);
    const auto cycles = tcf::enumerate_tight_cycles(h);
    if (cycles.empty()) {
        std::cout << "tight-cycle-free\n";
        return kExitOk;
    }
    for (const auto& c : cycles) std::cout << tcf::format_witness(c) << "\n";
    return kExitCycle;
}

int run_transform(const std::string& in_path, int ell) {
    const tcf::Hypergraph h = tcf::read_hgf(in_path);
    const tcf::LinearTriple hstar = tcf::to_linear(h);
    std::cout << "H*: " << hstar.vertex_count() << " pair-vertices, " << hstar.edge_count()
              << " edges\n";
    if (tcf::has_feasible_loose_cycle(hstar, ell)) {
        std::cout << "feasible loose cycle of length " << ell << "\n";
        return kExitCycle;
    }
    std::cout << "no feasible loose cycle of length " << ell << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tight-cycle-free hypergraph constructions and certification"};
    app.require_subcommand(1);

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "emit a construction as an HGF file");
    construct->add_option("--kind", cargs.kind, "warmup3|gadget3|gadget-k|star|main")->required();
    construct->add_option("--n", cargs.n, "vertex count");
    construct->add_option("--k", cargs.k, "uniformity (default 3)");
    construct->add_option("--method", cargs.method, "pg|greedy (kind=main)");
    construct->add_option("--seed", cargs.seed, "RNG seed");
    construct->add_option("--restarts", cargs.restarts, "greedy restarts");
    construct->add_option("--threads", cargs.threads, "parallel greedy runs");
    construct->add_option("--out", cargs.out_path, "output HGF path");
    construct->add_option("--cert", cargs.cert_path, "output certificate JSON path");

    VerifyArgs vargs;
    int max_len = 0;
    uint64_t budget = 0;
    auto* verify = app.add_subcommand("verify", "decide tight-cycle-freeness of an HGF file");
    verify->add_option("--in", vargs.in_path, "input HGF path")->required();
    verify->add_option("--mode", vargs.mode, "exhaustive|confined");
    auto* maxlen_opt = verify->add_option("--max-len", max_len, "cap on cycle length");
    auto* budget_opt = verify->add_option("--budget", budget, "DFS node budget");

    int pack_n = 0, pack_k = 3, pack_restarts = 4, pack_threads = 1;
    std::string pack_method = "greedy", pack_out;
    uint64_t pack_seed = 0;
    auto* pack = app.add_subcommand("pack", "produce a shadow-disjoint packing plan");
    pack->add_option("--n", pack_n, "vertex count")->required();
    pack->add_option("--k", pack_k, "uniformity")->required();
    pack->add_option("--method", pack_method, "pg|greedy");
    pack->add_option("--seed", pack_seed, "RNG seed");
    pack->add_option("--restarts", pack_restarts, "greedy restarts");
    pack->add_option("--threads", pack_threads, "parallel greedy runs");
    pack->add_option("--out", pack_out, "output path (default stdout)");

    std::string oracle_in;
    auto* oracle = app.add_subcommand("oracle", "brute-force cycle enumeration (n <= 10)");
    oracle->add_option("--in", oracle_in, "input HGF path")->required();

    std::string transform_in;
    int ell = 0;
    auto* transform = app.add_subcommand("transform", "linear 3-graph feasibility check");
    transform->add_option("--in", transform_in, "input HGF path")->required();
    transform->add_option("--ell", ell, "loose cycle length")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(cargs);
        if (verify->parsed()) {
            if (*maxlen_opt) vargs.max_len = max_len;
            if (*budget_opt) vargs.budget = budget;
            return run_verify(vargs);
        }
        if (pack->parsed())
            return run_pack(pack_n, pack_k, pack_method, pack_seed, pack_restarts, pack_threads,
                            pack_out);
        if (oracle->parsed()) return run_oracle(oracle_in);
        if (transform->parsed()) return run_transform(transform_in, ell);
    } catch (const tcf::IndeterminateError& e) {
        std::cout << "indeterminate: " << e.what() << "\n";
        return kExitIndeterminate;
    } catch (const tcf::BuildError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const tcf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
