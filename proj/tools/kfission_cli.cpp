#include "kfission/commands.h"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace kfission;
    CLI::App app{"Halving-edge graphs and k-fission"};
    app.require_subcommand(1);

    std::string kind, in, out, algo;
    std::size_t n = 0;

    auto* gen = app.add_subcommand("gen", "Write a generated configuration");
    gen->add_option("kind", kind, "polygon | star | unicyclic6 | two-path")->required();
    gen->add_option("--n", n, "Point count (polygon, star)");
    gen->add_option("-o,--out", out, "Output ConfigFile (default stdout)");

    auto* halving = app.add_subcommand("halving", "Compute the halving geograph of a ConfigFile");
    halving->add_option("input", in, "ConfigFile")->required();
    halving->add_option("--algo", algo, "oracle | sweep | checked (default: checked up to 100 points)");
    halving->add_option("-o,--out", out, "Output GeographFile (default stdout)");

    FissionOptions fo;
    auto* fission = app.add_subcommand("fission", "k-fission of a configuration");
    fission->add_option("input", fo.in_path, "ConfigFile or GeographFile")->required();
    fission->add_option("--mode", fo.mode, "plain | parallel | forest");
    fission->add_option("--k", fo.k, "Cluster size (plain, parallel)");
    fission->add_option("--cluster", fo.cluster_path, "ConfigFile of B (forest)");
    fission->add_option("-o,--out", fo.out_path, "Output GeographFile (default stdout)");
    fission->add_option("--origin", fo.origin_path, "Origin sidecar (default <out>.origin)");
    fission->add_flag("--no-verify", [&fo](std::int64_t) { fo.verify = false; }, "Skip lemma validators");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Check invariants of a GeographFile");
    verify->add_option("input", vo.in_path, "GeographFile")->required();
    verify->add_option("--suite", vo.suite, "chains | fission-lemmas | all");
    verify->add_option("--base", vo.base_path, "Base ConfigFile or GeographFile");
    verify->add_option("--origin", vo.origin_path, "Origin sidecar");

    bool chains = false;
    auto* render = app.add_subcommand("render", "Draw a configuration as SVG");
    render->add_option("input", in, "ConfigFile or GeographFile")->required();
    render->add_option("-o,--out", out, "Output SVG (default stdout)");
    render->add_flag("--chains", chains, "Color edges by chain");

    std::string family;
    std::vector<std::size_t> sizes;
    std::vector<std::string> algos{"oracle", "sweep"};
    auto* bench = app.add_subcommand("bench", "Time halving algorithms; CSV on stdout");
    bench->add_option("family", family, "polygon | star | gk")->required();
    bench->add_option("--sizes", sizes, "Point counts (k values for gk)")->delimiter(',');
    bench->add_option("--algos", algos, "Algorithms")->delimiter(',');

    auto* divides = app.add_subcommand("divides", "2-path witness and primitivity certificate");
    divides->add_option("input", in, "ConfigFile or GeographFile")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (gen->parsed()) return cmd_gen(kind, n, out, std::cout, std::cerr);
    if (halving->parsed()) return cmd_halving(in, algo, out, std::cout, std::cerr);
    if (fission->parsed()) return cmd_fission(fo, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify(vo, std::cout, std::cerr);
    if (render->parsed()) return cmd_render(in, out, chains, std::cout, std::cerr);
    if (bench->parsed()) return cmd_bench(family, sizes, algos, std::cout, std::cerr);
    if (divides->parsed()) return cmd_divides(in, std::cout, std::cerr);
    return kExitUsage;
}
