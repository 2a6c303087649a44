#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace wpvol {

struct Config {
    std::filesystem::path cache_path;  // empty: no persistent cache
    unsigned precision_bits = 128;
    double quad_tol = 1e-10;
    unsigned g_min = 5;
    unsigned g_max = 12;
    unsigned workers = 1;
    std::string format = "json";  // json | csv
    std::uint64_t seed = 1;

    // Throws DomainError on a violated invariant.
    void validate() const;
};

// $XDG_CACHE_HOME/wpvol/intersections.cache, falling back to ~/.cache.
std::filesystem::path default_cache_path();

// Keys as in Config; unknown keys are rejected. Throws StorageError if the
// file cannot be read, DomainError on bad content.
void apply_config_file(Config& c, const std::filesystem::path& file);

// WPVOL_CACHE, WPVOL_PRECISION, WPVOL_QUAD_TOL, WPVOL_GMIN, WPVOL_GMAX,
// WPVOL_WORKERS, WPVOL_FORMAT, WPVOL_SEED. The map stands in for the
// environment in tests.
void apply_env(Config& c, const std::map<std::string, std::string>& env);
std::map<std::string, std::string> current_env();

}  // namespace wpvol
