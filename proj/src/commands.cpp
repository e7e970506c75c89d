#include "kfission/commands.h"

#include "kfission/builders.h"
#include "kfission/defission.h"
#include "kfission/io.h"

#include <chrono>
#include <functional>
#include <sstream>

namespace kfission {

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::InvalidArgument:
        case ErrorKind::OddPointCount:
        case ErrorKind::NotGeneralPosition:
        case ErrorKind::DuplicateParam:
        case ErrorKind::TooLarge:
            return kExitUsage;
        default:
            return kExitInvariant;
    }
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
}

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

Geograph load_geograph(const std::string& path, bool& had_edges) {
    std::istringstream in(read_file(path));
    return parse_config_or_geograph(in, had_edges);
}

Config load_config(const std::string& path) {
    std::istringstream in(read_file(path));
    return parse_config(in);
}

HalvingAlgo parse_algo(const std::string& algo) {
    if (algo == "oracle") return HalvingAlgo::Oracle;
    if (algo == "sweep") return HalvingAlgo::Sweep;
    if (algo == "checked") return HalvingAlgo::Checked;
    usage("unknown algorithm '" + algo + "'");
}

struct Report {
    std::ostream& out;
    bool ok = true;

    void line(const std::string& name, bool pass, const std::string& detail = {}) {
        out << (pass ? "PASS " : "FAIL ") << name;
        if (!pass && !detail.empty()) out << ": " << detail;
        out << '\n';
        ok = ok && pass;
    }
};

void chains_suite(const Geograph& g, Report& rep) {
    const Geograph fresh = halving_edges(g.config(), validation_algo(g.size()));
    rep.line("edges-match-halving-set", fresh.edges() == g.edges(),
             std::to_string(g.edges().size()) + " edges in file, " + std::to_string(fresh.edges().size()) +
                 " halving edges");
    if (fresh.edges() != g.edges()) return;
    try {
        check_halving_invariants(g);
        rep.line("halving-invariants", true);
    } catch (const Error& e) {
        rep.line("halving-invariants", false, e.what());
    }
    const SweepFrame frame = choose_generic_up(g);
    try {
        const ChainDecomposition d = decompose_chains(g, frame);
        rep.line("chain-laws (" + std::to_string(d.chains.size()) + " chains)", true);
    } catch (const Error& e) {
        rep.line("chain-laws", false, e.what());
    }
    rep.line("chain-reversibility", verify_chain_reversibility(g, frame));
}

}  // namespace

int cmd_gen(const std::string& kind, std::size_t n, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
    return guarded(err, [&] {
        Config c;
        if (kind == "polygon") {
            c = convex_polygon(n);
        } else if (kind == "star") {
            c = star_config(n);
        } else if (kind == "unicyclic6") {
            c = find_unicyclic6();
        } else if (kind == "two-path") {
            c = two_path();
        } else {
            usage("unknown generator '" + kind + "'");
        }
        emit(out_path, serialize_config(c), out);
        return kExitOk;
    });
}

int cmd_halving(const std::string& in_path, const std::string& algo, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!algo.empty()) parse_algo(algo);
        const Config c = load_config(in_path);
        if (c.size() % 2 != 0) throw Error(ErrorKind::OddPointCount, "halving edges need an even point count");
        const HalvingAlgo a = algo.empty() ? validation_algo(c.size()) : parse_algo(algo);
        emit(out_path, serialize_geograph(halving_edges(c, a)), out);
        return kExitOk;
    });
}

int cmd_fission(const FissionOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.k == 0) usage("k must be positive");
        bool had_edges = false;
        const Geograph g = load_geograph(opt.in_path, had_edges);
        if (had_edges && halving_edges(g.config(), validation_algo(g.size())) != g) {
            throw Error(ErrorKind::InvariantViolation, "input edges are not the halving edges of its points");
        }
        FissionResult r;
        if (opt.mode == "plain") {
            r = plain_fission(g, opt.k, opt.verify);
        } else if (opt.mode == "parallel") {
            r = parallel_fission(g, opt.k, opt.verify);
        } else if (opt.mode == "forest") {
            if (opt.cluster_path.empty()) usage("forest mode needs --cluster");
            r = forest_fission(g, load_config(opt.cluster_path), opt.verify);
        } else {
            usage("unknown fission mode '" + opt.mode + "'");
        }
        emit(opt.out_path, serialize_geograph(r.geograph), out);
        const std::string origin_path = !opt.origin_path.empty() ? opt.origin_path
                                        : !opt.out_path.empty()  ? opt.out_path + ".origin"
                                                                 : std::string();
        if (!origin_path.empty()) write_file(origin_path, serialize_origin(r.origin));
        err << r.config.size() << " points, " << r.geograph.edges().size() << " edges\n";
        return kExitOk;
    });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.suite != "chains" && opt.suite != "fission-lemmas" && opt.suite != "all") {
            usage("unknown suite '" + opt.suite + "'");
        }
        const bool lemmas = opt.suite == "fission-lemmas" || (opt.suite == "all" && !opt.base_path.empty());
        if (lemmas && (opt.base_path.empty() || opt.origin_path.empty())) {
            usage("fission-lemmas needs --base and --origin");
        }
        std::istringstream in(read_file(opt.in_path));
        const Geograph h = parse_geograph(in);
        Report rep{out};
        if (opt.suite != "fission-lemmas") chains_suite(h, rep);
        if (lemmas) {
            bool base_edges = false;
            const Geograph base = load_geograph(opt.base_path, base_edges);
            std::istringstream oin(read_file(opt.origin_path));
            const FissionResult r = reconstruct_fission(base, h, parse_origin(oin));
            const Geograph fresh = halving_edges(h.config(), validation_algo(h.size()));
            rep.line("edges-match-halving-set", fresh == h);
            for (const CheckResult& c : verify_fission(r).checks) rep.line(c.name, c.ok, c.detail);
        }
        out << (rep.ok ? "OK\n" : "FAILED\n");
        return rep.ok ? kExitOk : kExitInvariant;
    });
}

int cmd_render(const std::string& in_path, const std::string& svg_path, bool chains, std::ostream& out,
               std::ostream& err) {
    return guarded(err, [&] {
        bool had_edges = false;
        const Geograph g = load_geograph(in_path, had_edges);
        std::optional<ChainDecomposition> d;
        if (chains) d = decompose_chains(g, choose_generic_up(g));
        emit(svg_path, render_svg(g, d), out);
        return kExitOk;
    });
}

int cmd_bench(const std::string& family, const std::vector<std::size_t>& sizes,
              const std::vector<std::string>& algos, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (sizes.empty()) usage("bench needs at least one size");
        if (algos.empty()) usage("bench needs at least one algorithm");
        if (family != "polygon" && family != "star" && family != "gk") usage("unknown family '" + family + "'");
        std::vector<HalvingAlgo> parsed;
        for (const std::string& a : algos) parsed.push_back(parse_algo(a));
        out << "family,n,algo,edges,millis\n";
        for (std::size_t size : sizes) {
            Config c;
            std::size_t expect = 0;
            if (family == "polygon") {
                c = convex_polygon(size);
                expect = size / 2;
            } else if (family == "star") {
                c = star_config(size);
                expect = size - 1;
            } else {
                c = g_sequence(size, false).config;
                expect = size * c.size();
            }
            for (std::size_t i = 0; i < parsed.size(); ++i) {
                const auto t0 = std::chrono::steady_clock::now();
                const Geograph g = halving_edges(c, parsed[i]);
                const auto t1 = std::chrono::steady_clock::now();
                if (g.edges().size() != expect) {
                    throw Error(ErrorKind::InvariantViolation, family + " n=" + std::to_string(c.size()) + " has " +
                                                                   std::to_string(g.edges().size()) + " edges");
                }
                const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                out << family << ',' << c.size() << ',' << algos[i] << ',' << g.edges().size() << ',' << ms << '\n';
            }
        }
        return kExitOk;
    });
}

int cmd_divides(const std::string& in_path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        bool had_edges = false;
        const Geograph h = load_geograph(in_path, had_edges);
        const DivisibilityReport rep = two_path_divides(h);
        out << "2-path: " << to_string(rep.verdict) << " (" << rep.detail << ")\n";
        if (h.size() <= 12) {
            const PrimitivityReport p = primitivity_certificate(h);
            out << "primitivity: " << to_string(p.verdict) << '\n';
            for (const std::string& r : p.reasons) out << "  " << r << '\n';
        }
        return kExitOk;
    });
}

}  // namespace kfission
