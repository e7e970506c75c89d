#include "kfission/io.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace kfission {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

// Next non-blank line, split on whitespace.
bool next_tokens(std::istream& in, std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        tokens.clear();
        std::string t;
        while (ss >> t) tokens.push_back(t);
        if (!tokens.empty()) return true;
    }
    return false;
}

std::size_t parse_index(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        parse_fail("bad index '" + s + "'");
    }
    try {
        return static_cast<std::size_t>(std::stoull(s));
    } catch (const std::exception&) {
        parse_fail("index out of range '" + s + "'");
    }
}

std::vector<RPoint> parse_points(std::istream& in) {
    std::vector<std::string> tok;
    if (!next_tokens(in, tok) || tok.size() != 1) parse_fail("expected a point count line");
    const std::size_t n = parse_index(tok[0]);
    std::vector<RPoint> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_tokens(in, tok) || tok.size() != 2) parse_fail("expected point line " + std::to_string(i));
        pts.push_back({Rational::parse(tok[0]), Rational::parse(tok[1])});
    }
    return pts;
}

std::vector<Edge> parse_edges(std::istream& in, std::size_t m) {
    std::vector<std::string> tok;
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < m; ++e) {
        if (!next_tokens(in, tok) || tok.size() != 2) parse_fail("expected edge line " + std::to_string(e));
        const Edge ed{parse_index(tok[0]), parse_index(tok[1])};
        if (ed.first >= ed.second) parse_fail("edge indices must satisfy i < j");
        if (!edges.empty() && !(edges.back() < ed)) parse_fail("edges must be sorted and unique");
        edges.push_back(ed);
    }
    return edges;
}

void expect_end(std::istream& in) {
    std::vector<std::string> tok;
    if (next_tokens(in, tok)) parse_fail("unexpected trailing content");
}

Config make_config(std::vector<RPoint> pts) {
    try {
        return Config(std::move(pts));
    } catch (const NotGeneralPositionError& e) {
        parse_fail(std::string("points are not in general position: ") + e.what());
    }
}

Geograph make_geograph(Config c, std::vector<Edge> edges) {
    try {
        return Geograph(std::move(c), std::move(edges));
    } catch (const Error& e) {
        parse_fail(e.what());
    }
}

}  // namespace

Config parse_config(std::istream& in) {
    Config c = make_config(parse_points(in));
    expect_end(in);
    return c;
}

std::string serialize_config(const Config& c) {
    std::ostringstream out;
    out << c.size() << '\n';
    for (const RPoint& p : c.points()) out << p.x.str() << ' ' << p.y.str() << '\n';
    return out.str();
}

Geograph parse_geograph(std::istream& in) {
    Config c = make_config(parse_points(in));
    std::vector<std::string> tok;
    if (!next_tokens(in, tok) || tok.size() != 2 || tok[0] != "edges") parse_fail("expected 'edges m'");
    auto edges = parse_edges(in, parse_index(tok[1]));
    expect_end(in);
    return make_geograph(std::move(c), std::move(edges));
}

std::string serialize_geograph(const Geograph& g) {
    std::ostringstream out;
    out << serialize_config(g.config()) << "edges " << g.edges().size() << '\n';
    for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

Geograph parse_config_or_geograph(std::istream& in, bool& had_edges) {
    Config c = make_config(parse_points(in));
    std::vector<std::string> tok;
    if (!next_tokens(in, tok)) {
        had_edges = false;
        return halving_edges(c, validation_algo(c.size()));
    }
    if (tok.size() != 2 || tok[0] != "edges") parse_fail("expected 'edges m' or end of file");
    had_edges = true;
    auto edges = parse_edges(in, parse_index(tok[1]));
    expect_end(in);
    return make_geograph(std::move(c), std::move(edges));
}

std::vector<Origin> parse_origin(std::istream& in) {
    std::vector<Origin> out;
    std::vector<std::string> tok;
    while (next_tokens(in, tok)) {
        if (tok.size() != 3) parse_fail("origin lines are 'new_index base_vertex rank'");
        if (parse_index(tok[0]) != out.size()) parse_fail("origin lines must be in index order");
        out.push_back({parse_index(tok[1]), parse_index(tok[2])});
    }
    return out;
}

std::string serialize_origin(const std::vector<Origin>& origin) {
    std::ostringstream out;
    for (std::size_t i = 0; i < origin.size(); ++i) out << i << ' ' << origin[i].base << ' ' << origin[i].rank << '\n';
    return out.str();
}

std::string render_svg(const Geograph& g, const std::optional<ChainDecomposition>& chains) {
    constexpr double kSize = 800.0;
    constexpr double kMargin = 40.0;
    const Config& c = g.config();
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    if (c.size() > 0) {
        minx = maxx = c[0].x.to_double();
        miny = maxy = c[0].y.to_double();
        for (const RPoint& p : c.points()) {
            minx = std::min(minx, p.x.to_double());
            maxx = std::max(maxx, p.x.to_double());
            miny = std::min(miny, p.y.to_double());
            maxy = std::max(maxy, p.y.to_double());
        }
    }
    const double span = std::max({maxx - minx, maxy - miny, 1e-300});
    const double scale = (kSize - 2 * kMargin) / span;
    auto sx = [&](const Rational& x) { return kMargin + (x.to_double() - minx) * scale; };
    auto sy = [&](const Rational& y) { return kSize - kMargin - (y.to_double() - miny) * scale; };

    std::vector<int> chain_of(g.edges().size(), -1);
    if (chains) {
        for (std::size_t ci = 0; ci < chains->chains.size(); ++ci) {
            for (const auto& [a, b] : chains->chains[ci]) {
                const Edge e{std::min(a, b), std::max(a, b)};
                const auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
                chain_of[static_cast<std::size_t>(it - g.edges().begin())] = static_cast<int>(ci);
            }
        }
    }
    static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
                                    "#17becf"};

    std::ostringstream out;
    out << std::setprecision(10);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    if (chains) {
        out << "<style>\n";
        for (std::size_t ci = 0; ci < chains->chains.size(); ++ci) {
            out << ".chain-" << ci << " { stroke: " << palette[ci % 8] << "; stroke-width: "
                << (ci == 0 ? 4 : 2) << "; }\n";
        }
        out << "</style>\n";
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& [i, j] = g.edges()[e];
        out << "<line x1=\"" << sx(c[i].x) << "\" y1=\"" << sy(c[i].y) << "\" x2=\"" << sx(c[j].x) << "\" y2=\""
            << sy(c[j].y) << '"';
        if (chain_of[e] >= 0) {
            out << " class=\"chain-" << chain_of[e] << '"';
        } else {
            out << " stroke=\"#444\" stroke-width=\"1.5\"";
        }
        out << "/>\n";
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        out << "<circle cx=\"" << sx(c[i].x) << "\" cy=\"" << sy(c[i].y) << "\" r=\"4\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
    out << text;
}

}  // namespace kfission
