#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kfission {

/// Process exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

/// An empty path means stdout for outputs. Every command reports errors on
/// `err` and returns an exit code instead of throwing.

int cmd_gen(const std::string& kind, std::size_t n, const std::string& out_path, std::ostream& out,
            std::ostream& err);

/// An empty `algo` picks checked up to 100 points and sweep beyond.
int cmd_halving(const std::string& in_path, const std::string& algo, const std::string& out_path,
                std::ostream& out, std::ostream& err);

struct FissionOptions {
    std::string in_path;
    std::string mode = "plain";  // plain | parallel | forest
    std::size_t k = 2;
    std::string cluster_path;    // forest mode: ConfigFile of B
    std::string out_path;
    std::string origin_path;     // default: out_path + ".origin"
    bool verify = true;
};

int cmd_fission(const FissionOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    std::string in_path;
    std::string suite = "all";   // chains | fission-lemmas | all
    std::string base_path;       // fission-lemmas: base geograph or config
    std::string origin_path;     // fission-lemmas: origin sidecar
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

int cmd_render(const std::string& in_path, const std::string& svg_path, bool chains, std::ostream& out,
               std::ostream& err);

/// CSV `family,n,algo,edges,millis`. For gk the sizes are k values.
int cmd_bench(const std::string& family, const std::vector<std::size_t>& sizes,
              const std::vector<std::string>& algos, std::ostream& out, std::ostream& err);

/// 2-path witness plus the primitivity certificate (up to 12 points).
int cmd_divides(const std::string& in_path, std::ostream& out, std::ostream& err);

}  // namespace kfission
