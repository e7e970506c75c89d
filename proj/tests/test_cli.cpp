#include "kfission/commands.h"
#include "kfission/io.h"

#include "support.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace kfission;
using namespace kfission::test;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
    return n;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("kfission_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST(ConfigFile, RoundTrip) {
    std::mt19937 rng(5);
    const Config c = random_rational_config(rng, 8);
    std::istringstream in(serialize_config(c));
    EXPECT_EQ(parse_config(in), c);
}

TEST(ConfigFile, Format) {
    EXPECT_EQ(serialize_config(two_path()), "2\n0/1 0/1\n1/1 0/1\n");
}

TEST(GeographFile, RoundTrip) {
    const Geograph g = halving_edges(find_unicyclic6());
    const std::string text = serialize_geograph(g);
    std::istringstream in(text);
    EXPECT_EQ(parse_geograph(in), g);
    std::istringstream again(text);
    bool had_edges = false;
    EXPECT_EQ(parse_config_or_geograph(again, had_edges), g);
    EXPECT_TRUE(had_edges);
}

TEST(GeographFile, ParseErrors) {
    for (const char* bad : {"", "2\n0/1 0/1\n", "2\n0/1 0/1\n1/1\n", "x\n", "2\n0/1 0/1\n1/1 0/1\nedges 1\n1 0\n",
                            "2\n0/1 0/1\n1/1 0/1\nedges 2\n0 1\n"}) {
        std::istringstream in(bad);
        try {
            parse_geograph(in);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
        }
    }
}

TEST(OriginFile, RoundTrip) {
    const std::vector<Origin> o{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::istringstream in(serialize_origin(o));
    EXPECT_EQ(parse_origin(in), o);
}

TEST(Svg, SquareHasFourPointsAndTwoSegments) {
    const std::string svg = render_svg(halving_edges(unit_square()), std::nullopt);
    EXPECT_EQ(count(svg, "<circle"), 4u);
    EXPECT_EQ(count(svg, "<line"), 2u);
}

TEST(Svg, ChainClasses) {
    const Geograph g = halving_edges(star_config(6));
    const std::string svg = render_svg(g, decompose_chains(g, choose_generic_up(g)));
    EXPECT_EQ(count(svg, "<line"), 5u);
    for (int i = 0; i < 3; ++i) EXPECT_GT(count(svg, "chain-" + std::to_string(i) + "\""), 0u);
    EXPECT_EQ(count(svg, "class=\"chain-3\""), 0u);
}

TEST(Commands, GenAndHalving) {
    TempDir tmp;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_gen("star", 6, tmp.file("s.cfg"), out, err), kExitOk);
    ASSERT_EQ(cmd_halving(tmp.file("s.cfg"), "sweep", tmp.file("s.geo"), out, err), kExitOk);
    std::istringstream in(read_file(tmp.file("s.geo")));
    EXPECT_EQ(parse_geograph(in).edges().size(), 5u);
    EXPECT_EQ(cmd_gen("polygon", 5, "", out, err), kExitUsage);
    EXPECT_EQ(cmd_gen("nonsense", 4, "", out, err), kExitUsage);
    EXPECT_EQ(cmd_halving(tmp.file("missing.cfg"), "sweep", "", out, err), kExitUsage);
    EXPECT_EQ(cmd_halving(tmp.file("s.cfg"), "bogus", "", out, err), kExitUsage);
    std::ostringstream dflt;
    ASSERT_EQ(cmd_halving(tmp.file("s.cfg"), "", "", dflt, err), kExitOk);
    EXPECT_NE(dflt.str().find("edges 5"), std::string::npos);
}

TEST(Commands, CorruptGeographIsInvariantFailure) {
    TempDir tmp;
    write_file(tmp.file("bad.geo"), "4\n0/1 0/1\n1/1 0/1\n1/1 1/1\n0/1 1/1\nedges 1\n0 1\n");
    std::ostringstream out, err;
    EXPECT_EQ(cmd_verify({tmp.file("bad.geo"), "chains", "", ""}, out, err), kExitInvariant);
}

TEST(Commands, FissionThenVerifyLemmas) {
    TempDir tmp;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_gen("unicyclic6", 0, tmp.file("u.cfg"), out, err), kExitOk);
    FissionOptions fo;
    fo.in_path = tmp.file("u.cfg");
    fo.k = 2;
    fo.out_path = tmp.file("h.geo");
    ASSERT_EQ(cmd_fission(fo, out, err), kExitOk) << err.str();
    EXPECT_TRUE(std::filesystem::exists(tmp.file("h.geo.origin")));
    std::ostringstream vout;
    EXPECT_EQ(cmd_verify({tmp.file("h.geo"), "fission-lemmas", tmp.file("u.cfg"), tmp.file("h.geo.origin")}, vout, err),
              kExitOk)
        << vout.str();
    EXPECT_NE(vout.str().find("PASS covering-map"), std::string::npos);
    EXPECT_NE(vout.str().find("OK"), std::string::npos);
}

TEST(Commands, ForestModeNeedsCluster) {
    TempDir tmp;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_gen("unicyclic6", 0, tmp.file("u.cfg"), out, err), kExitOk);
    ASSERT_EQ(cmd_gen("two-path", 2, tmp.file("b.cfg"), out, err), kExitOk);
    FissionOptions fo;
    fo.in_path = tmp.file("u.cfg");
    fo.mode = "forest";
    fo.out_path = tmp.file("f.geo");
    EXPECT_EQ(cmd_fission(fo, out, err), kExitUsage);
    fo.cluster_path = tmp.file("b.cfg");
    ASSERT_EQ(cmd_fission(fo, out, err), kExitOk) << err.str();
    std::istringstream in(read_file(tmp.file("f.geo")));
    EXPECT_EQ(parse_geograph(in).edges().size(), 18u);
}

TEST(Commands, Render) {
    TempDir tmp;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_gen("polygon", 4, tmp.file("p.cfg"), out, err), kExitOk);
    ASSERT_EQ(cmd_render(tmp.file("p.cfg"), tmp.file("p.svg"), true, out, err), kExitOk);
    const std::string svg = read_file(tmp.file("p.svg"));
    EXPECT_EQ(count(svg, "<circle"), 4u);
    EXPECT_EQ(count(svg, "<line"), 2u);
}

TEST(Commands, BenchCsv) {
    std::ostringstream out, err;
    ASSERT_EQ(cmd_bench("polygon", {4, 8}, {"sweep", "oracle"}, out, err), kExitOk);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "family,n,algo,edges,millis");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        EXPECT_EQ(count(line, ","), 4u);
    }
    EXPECT_EQ(rows, 4u);
    EXPECT_EQ(cmd_bench("polygon", {}, {"sweep"}, out, err), kExitUsage);
}

TEST(Commands, Divides) {
    TempDir tmp;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_gen("star", 6, tmp.file("s.cfg"), out, err), kExitOk);
    std::ostringstream dout;
    ASSERT_EQ(cmd_divides(tmp.file("s.cfg"), dout, err), kExitOk);
    EXPECT_NE(dout.str().find("2-path: divides-witnessed"), std::string::npos);
    EXPECT_NE(dout.str().find("primitivity: primitive-certified"), std::string::npos);
}

TEST(Binary, ExitCodes) {
    const std::string bin = KFISSION_CLI;
    auto run = [&](const std::string& args) {
        const int status = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(status);
    };
    EXPECT_EQ(run("gen polygon --n 8"), 0);
    EXPECT_EQ(run("gen polygon --n 7"), 2);
    EXPECT_EQ(run("no-such-command"), 2);
}
