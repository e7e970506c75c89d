#pragma once

#include "kfission/chains.h"
#include "kfission/fission.h"

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace kfission {

/// ConfigFile: a line `n`, then n lines `x y` of `p/q` rationals.
Config parse_config(std::istream& in);
std::string serialize_config(const Config& c);

/// GeographFile: ConfigFile body, a line `edges m`, then m lines `i j` with
/// i < j in lexicographic order.
Geograph parse_geograph(std::istream& in);
std::string serialize_geograph(const Geograph& g);

/// Accepts either file kind; a ConfigFile yields its halving geograph, a
/// GeographFile is returned as written.
Geograph parse_config_or_geograph(std::istream& in, bool& had_edges);

/// Origin sidecar: one line `new_index base_vertex rank` per point, in
/// index order.
std::vector<Origin> parse_origin(std::istream& in);
std::string serialize_origin(const std::vector<Origin>& origin);

/// Points, halving segments and optionally chains (one stroke class per
/// chain). Decimals appear only here.
std::string render_svg(const Geograph& g, const std::optional<ChainDecomposition>& chains);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace kfission
