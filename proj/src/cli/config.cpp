#include "wpvol/cli/config.hpp"

#include "wpvol/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>

extern char** environ;

namespace wpvol {

namespace {

unsigned parse_unsigned(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        unsigned long x = std::stoul(v, &pos);
        if (pos != v.size() || v.empty() || v[0] == '-') throw std::invalid_argument(v);
        return static_cast<unsigned>(x);
    } catch (const std::exception&) {
        throw DomainError(key + ": expected a non-negative integer, got '" + v + "'");
    }
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw DomainError(key + ": expected a number, got '" + v + "'");
    }
}

}  // namespace

void Config::validate() const {
    if (!(quad_tol > 0)) throw DomainError("quadrature tolerance must be positive");
    if (precision_bits < 32) throw DomainError("precision must be at least 32 bits");
    if (g_min > g_max) throw DomainError("empty g-range");
    if (g_min < 2) throw DomainError("g-range must start at 2 or above");
    if (workers < 1) throw DomainError("worker count must be at least 1");
    if (format != "json" && format != "csv") throw DomainError("format must be json or csv");
}

std::filesystem::path default_cache_path() {
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "wpvol" / "intersections.cache";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "wpvol" / "intersections.cache";
    return "wpvol-intersections.cache";
}

void apply_config_file(Config& c, const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw StorageError("cannot read config file " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("config file " + file.string() + ": " + e.what());
    }
    if (!j.is_object()) throw DomainError("config file must hold a JSON object");
    try {
        for (auto& [k, v] : j.items()) {
            if (k == "cache") c.cache_path = v.get<std::string>();
            else if (k == "precision") c.precision_bits = v.get<unsigned>();
            else if (k == "quad_tol") c.quad_tol = v.get<double>();
            else if (k == "gmin") c.g_min = v.get<unsigned>();
            else if (k == "gmax") c.g_max = v.get<unsigned>();
            else if (k == "workers") c.workers = v.get<unsigned>();
            else if (k == "format") c.format = v.get<std::string>();
            else if (k == "seed") c.seed = v.get<std::uint64_t>();
            else throw DomainError("config file: unknown key '" + k + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config file: ") + e.what());
    }
}

void apply_env(Config& c, const std::map<std::string, std::string>& env) {
    auto get = [&](const char* k) -> const std::string* {
        auto it = env.find(k);
        return it == env.end() ? nullptr : &it->second;
    };
    if (auto v = get("WPVOL_CACHE")) c.cache_path = *v;
    if (auto v = get("WPVOL_PRECISION")) c.precision_bits = parse_unsigned("WPVOL_PRECISION", *v);
    if (auto v = get("WPVOL_QUAD_TOL")) c.quad_tol = parse_double("WPVOL_QUAD_TOL", *v);
    if (auto v = get("WPVOL_GMIN")) c.g_min = parse_unsigned("WPVOL_GMIN", *v);
    if (auto v = get("WPVOL_GMAX")) c.g_max = parse_unsigned("WPVOL_GMAX", *v);
    if (auto v = get("WPVOL_WORKERS")) c.workers = parse_unsigned("WPVOL_WORKERS", *v);
    if (auto v = get("WPVOL_FORMAT")) c.format = *v;
    if (auto v = get("WPVOL_SEED")) c.seed = parse_unsigned("WPVOL_SEED", *v);
}

std::map<std::string, std::string> current_env() {
    std::map<std::string, std::string> m;
    for (char** e = environ; e && *e; ++e) {
        std::string s(*e);
        if (s.rfind("WPVOL_", 0) != 0) continue;
        auto eq = s.find('=');
        if (eq != std::string::npos) m[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return m;
}

}  // namespace wpvol
