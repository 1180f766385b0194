#pragma once
#include <string>

namespace spex {

// Runtime knobs shared by the CLI subcommands. Loadable from a JSON file named
// by SPECTRAL_EXTREMAL_CONFIG (or --config); individual flags override fields.
struct Config {
    double tol = 1e-12;
    long long max_iters = 10'000'000;
    double tie_tol = 1e-9;
    double lambda_cmp_tol = 1e-9;
    int oracle_cap_delta3 = 10;
    int oracle_cap_delta4 = 8;
    double limit_rel_band = 0.05;
    int threads = 1;

    void validate() const;
};

Config load_config(const std::string& path);
Config config_from_env();

}  // namespace spex
