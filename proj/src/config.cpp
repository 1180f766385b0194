#include "spex/config.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "spex/errors.hpp"

namespace spex {

void Config::validate() const {
    if (tol <= 0 || tie_tol <= 0 || lambda_cmp_tol <= 0 || limit_rel_band <= 0)
        throw input_error("tolerances must be positive");
    if (oracle_cap_delta3 < 4 || oracle_cap_delta4 < 5)
        throw input_error("oracle caps must be at least delta + 1");
    if (threads < 1) throw input_error("threads must be >= 1");
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file " + path);
    nlohmann::json j;
    in >> j;
    Config c;
    c.tol = j.value("tol", c.tol);
    c.max_iters = j.value("max_iters", c.max_iters);
    c.tie_tol = j.value("tie_tol", c.tie_tol);
    c.lambda_cmp_tol = j.value("lambda_cmp_tol", c.lambda_cmp_tol);
    c.oracle_cap_delta3 = j.value("oracle_cap_delta3", c.oracle_cap_delta3);
    c.oracle_cap_delta4 = j.value("oracle_cap_delta4", c.oracle_cap_delta4);
    c.limit_rel_band = j.value("limit_rel_band", c.limit_rel_band);
    c.threads = j.value("threads", c.threads);
    c.validate();
    return c;
}

Config config_from_env() {
    const char* path = std::getenv("SPECTRAL_EXTREMAL_CONFIG");
    if (path && *path) return load_config(path);
    return Config{};
}

}  // namespace spex
