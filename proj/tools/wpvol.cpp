// wpvol: command-line front end.
//
// Exit codes: 0 ok, 1 domain or usage error, 2 storage/IO error,
// 3 a verification check failed, 130 interrupted (cache saved first).

#include "wpvol/cli/config.hpp"
#include "wpvol/cli/report.hpp"
#include "wpvol/cli/suites.hpp"
#include "wpvol/errors.hpp"
#include "wpvol/exact/interval.hpp"
#include "wpvol/intersection/intersection.hpp"
#include "wpvol/intersection/memo_store.hpp"
#include "wpvol/intersection/tau_index.hpp"
#include "wpvol/spectral/test_function.hpp"
#include "wpvol/spectral/trace.hpp"
#include "wpvol/volumes/volumes.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace wpvol;

namespace {

enum Exit { kOk = 0, kDomain = 1, kStorage = 2, kVerifyFailed = 3, kInterrupted = 130 };

extern "C" void on_sigint(int) { request_interrupt(); }

std::vector<unsigned> parse_list_u(const std::string& s) {
    std::vector<unsigned> out;
    if (s.empty()) return out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        long v = -1;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
        }
        if (v < 0 || pos != item.size()) throw DomainError("bad index list entry '" + item + "'");
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

std::vector<Rational> parse_list_q(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    return out;
}

json interval_json(const Interval& iv) { return json::array({iv.lo_string(25), iv.hi_string(25)}); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Flags {
    std::string config_file, cache, format;
    std::optional<unsigned> precision, gmin, gmax, workers;
    std::optional<double> quad_tol;
    std::optional<std::uint64_t> seed;
    bool no_cache = false;
};

Config resolve_config(const Flags& f) {
    Config c;
    c.cache_path = default_cache_path();
    const auto env = current_env();
    std::string file = f.config_file;
    if (file.empty())
        if (auto it = env.find("WPVOL_CONFIG"); it != env.end()) file = it->second;
    if (!file.empty()) apply_config_file(c, file);
    apply_env(c, env);
    if (!f.cache.empty()) c.cache_path = f.cache;
    if (f.no_cache) c.cache_path.clear();
    if (f.precision) c.precision_bits = *f.precision;
    if (f.quad_tol) c.quad_tol = *f.quad_tol;
    if (f.gmin) c.g_min = *f.gmin;
    if (f.gmax) c.g_max = *f.gmax;
    if (f.workers) c.workers = *f.workers;
    if (!f.format.empty()) c.format = f.format;
    if (f.seed) c.seed = *f.seed;
    c.validate();
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weil-Petersson volumes, intersection numbers and trace-formula coefficients"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_option("--config", flags.config_file, "JSON config file (also WPVOL_CONFIG)");
    app.add_option("--cache", flags.cache, "cache file path");
    app.add_flag("--no-cache", flags.no_cache, "do not read or write a cache file");
    app.add_option("--precision", flags.precision, "interval precision in bits");
    app.add_option("--quad-tol", flags.quad_tol, "quadrature tolerance");
    app.add_option("--gmin", flags.gmin, "smallest genus for envelope checks");
    app.add_option("--gmax", flags.gmax, "largest genus for envelope checks");
    app.add_option("--workers", flags.workers, "worker threads");
    app.add_option("--format", flags.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", flags.seed, "seed for randomized checks");

    unsigned g = 0, n = 0;
    std::string d_list, at_list;
    auto* intersect = app.add_subcommand("intersect", "one intersection number [tau_d]_{g,n}");
    intersect->add_option("--g", g)->required();
    intersect->add_option("--n", n, "number of marked points (defaults to the length of --d)");
    intersect->add_option("--d", d_list, "comma-separated exponents");

    auto* vol = app.add_subcommand("volume", "V_{g,n} or V_{g,n}(x)");
    vol->add_option("--g", g)->required();
    vol->add_option("--n", n)->required();
    vol->add_option("--at", at_list, "comma-separated rational lengths");

    unsigned max_complexity = 6;
    auto* table = app.add_subcommand("table", "CSV of all V_{g,n} with 3g-3+n <= K");
    table->add_option("--max-complexity", max_complexity)->required();

    std::string suite;
    SuiteOptions sopt;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("name", suite, "recursions | bounds | mz | expansions | spectral | all")->required();
    verify->add_option("--suite", sopt.expansion_suite, "expansions only: a3 | a4 | wpvols | corollary | algebra");
    verify->add_option("--max-complexity", sopt.max_complexity, "recursions: largest 3g-3+n");
    verify->add_option("--bound-complexity", sopt.bound_complexity, "bounds: largest 3g-3+n");

    std::string t_range = "1..4";
    auto* trace = app.add_subcommand("trace-coefficients", "a0 and a1 of the trace expansion");
    trace->add_option("--t", t_range, "range lo..hi or a single value");

    auto* cache = app.add_subcommand("cache", "inspect or manage the intersection cache");
    cache->require_subcommand(1);
    auto* cache_stats = cache->add_subcommand("stats", "entry count and file size");
    auto* cache_clear = cache->add_subcommand("clear", "delete the cache file");
    std::string export_path;
    auto* cache_export = cache->add_subcommand("export", "dump entries as JSON");
    cache_export->add_option("--out", export_path, "output file (stdout if omitted)");

    unsigned plot_t = 1;
    std::string plot_dir = ".";
    auto* plot = app.add_subcommand("plot", "CSV data and a gnuplot script for G_t and f");
    plot->add_option("--t", plot_t);
    plot->add_option("--out", plot_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kDomain;
    }

    std::signal(SIGINT, on_sigint);

    Config cfg;
    MemoStore store;
    bool cache_loaded_ok = false;
    auto save_cache = [&] {
        if (cfg.cache_path.empty() || !cache_loaded_ok || store.misses() == 0) return;
        fs::create_directories(cfg.cache_path.parent_path().empty() ? fs::path(".") : cfg.cache_path.parent_path());
        store.save(cfg.cache_path);
    };

    try {
        cfg = resolve_config(flags);
        if (!cfg.cache_path.empty() && fs::exists(cfg.cache_path) && !cache_clear->parsed()) store.load(cfg.cache_path);
        cache_loaded_ok = true;

        int rc = kOk;
        if (intersect->parsed()) {
            std::vector<unsigned> d = parse_list_u(d_list);
            if (intersect->count("--n") == 0) n = static_cast<unsigned>(d.size());
            if (d.empty()) d.assign(n, 0);
            if (d.size() != n) throw DomainError("--d has " + std::to_string(d.size()) + " entries, --n is " + std::to_string(n));
            PiPoly v = intersection_number(TauIndex(g, d), store);
            if (cfg.format == "csv") {
                std::cout << "g,n,d,exact,lo,hi\n";
                Interval iv = eval_interval(v, cfg.precision_bits);
                std::cout << g << ',' << n << ",\"" << d_list << "\"," << to_pretty(v) << ',' << iv.lo_string(25) << ','
                          << iv.hi_string(25) << '\n';
            } else {
                emit({{"schema_version", kSchemaVersion},
                      {"g", g},
                      {"n", n},
                      {"d", d},
                      {"exact", to_pretty(v)},
                      {"pi_poly", json::parse(to_json(v))},
                      {"interval", interval_json(eval_interval(v, cfg.precision_bits))}});
            }
        } else if (vol->parsed()) {
            std::vector<Rational> x = parse_list_q(at_list);
            if (!x.empty() && x.size() != n) throw DomainError("--at needs exactly n lengths");
            PiPoly v = x.empty() ? volume(g, n, store) : volume_at(g, n, x, store);
            json at = json::array();
            for (auto& q : x) at.push_back(to_string(q));
            emit({{"schema_version", kSchemaVersion},
                  {"g", g},
                  {"n", n},
                  {"at", at},
                  {"exact", json::parse(to_json(v))},
                  {"pretty", to_pretty(v)},
                  {"interval", interval_json(eval_interval(v, cfg.precision_bits))}});
        } else if (table->parsed()) {
            for (const auto& row : volume_table(max_complexity, cfg, store)) std::cout << row << '\n';
        } else if (verify->parsed()) {
            if (!sopt.expansion_suite.empty() && suite != "expansions")
                throw DomainError("--suite applies to 'verify expansions' only");
            Report rep = run_suite(suite, cfg, sopt, store);
            if (cfg.format == "csv") {
                std::cout << "check,status,margin\n";
                for (auto& c : rep.checks) std::cout << c.name << ',' << (c.pass ? "pass" : "fail") << ',' << c.margin << '\n';
            } else {
                emit(rep.to_json());
            }
            if (!rep.pass()) rc = kVerifyFailed;
        } else if (trace->parsed()) {
            unsigned lo = 0, hi = 0;
            if (auto p = t_range.find(".."); p != std::string::npos) {
                auto a = parse_list_u(t_range.substr(0, p)), b = parse_list_u(t_range.substr(p + 2));
                if (a.size() != 1 || b.size() != 1) throw DomainError("bad --t range '" + t_range + "'");
                lo = a[0];
                hi = b[0];
            } else {
                auto a = parse_list_u(t_range);
                if (a.size() != 1) throw DomainError("bad --t '" + t_range + "'");
                lo = hi = a[0];
            }
            emit(trace_coefficients(lo, hi, std::max(cfg.quad_tol, 1e-8)));
        } else if (cache_stats->parsed()) {
            const bool exists = !cfg.cache_path.empty() && fs::exists(cfg.cache_path);
            emit({{"schema_version", kSchemaVersion},
                  {"path", cfg.cache_path.string()},
                  {"entries", store.size()},
                  {"file_bytes", exists ? fs::file_size(cfg.cache_path) : 0}});
        } else if (cache_clear->parsed()) {
            bool removed = false;
            if (!cfg.cache_path.empty()) removed = fs::remove(cfg.cache_path);
            emit({{"schema_version", kSchemaVersion}, {"path", cfg.cache_path.string()}, {"removed", removed}});
        } else if (cache_export->parsed()) {
            json entries = json::object();
            store.for_each([&](const std::string& k, const Rational& r) { entries[to_string(decode_key(k))] = to_string(r); });
            json out = {{"schema_version", kSchemaVersion},
                        {"note", "values are the rational r in r * pi^(2m), m = 3g-3+n-|d|"},
                        {"entries", entries}};
            if (export_path.empty()) {
                emit(out);
            } else {
                std::ofstream f(export_path);
                if (!(f << out.dump(2) << '\n')) throw StorageError("cannot write " + export_path);
            }
        } else if (plot->parsed()) {
            if (plot_t < 1) throw DomainError("--t must be at least 1");
            SpectralContext ctx(build_test_function());
            GeodesicKernels k = geodesic_kernels(ctx, plot_t);
            fs::create_directories(plot_dir);
            const fs::path kcsv = fs::path(plot_dir) / ("kernel_t" + std::to_string(plot_t) + ".csv");
            const fs::path fcsv = fs::path(plot_dir) / "transform.csv";
            const fs::path gp = fs::path(plot_dir) / "plot.gp";
            std::ofstream a(kcsv), b(fcsv), s(gp);
            a.precision(17);
            b.precision(17);
            a << "l,G,R\n";
            for (std::size_t i = 0; i < k.l.size(); ++i) a << k.l[i] << ',' << k.G[i] << ',' << k.R[i] << '\n';
            b << "rho,f\n";
            for (int i = 0; i <= 2000; ++i) {
                const double rho = 60.0 * i / 2000;
                b << rho << ',' << ctx.f(rho) << '\n';
            }
            s << "set datafile separator ','\nset key autotitle columnhead\nset terminal pngcairo size 900,600\n"
              << "set output 'kernel_t" << plot_t << ".png'\nset xlabel 'l'\n"
              << "plot '" << kcsv.filename().string() << "' using 1:2 with lines, '' using 1:3 with lines\n"
              << "set output 'transform.png'\nset xlabel 'rho'\nset logscale y\n"
              << "plot 'transform.csv' using 1:(abs($2)) with lines\n";
            if (!a || !b || !s) throw StorageError("cannot write plot files in " + plot_dir);
            emit({{"schema_version", kSchemaVersion},
                  {"files", {kcsv.string(), fcsv.string(), gp.string()}},
                  {"k_max", k.k_max}});
        }
        save_cache();
        return rc;
    } catch (const Interrupted&) {
        try {
            save_cache();
        } catch (const std::exception& e) {
            std::cerr << "wpvol: interrupted; cache not saved: " << e.what() << '\n';
            return kStorage;
        }
        std::cerr << "wpvol: interrupted; cache saved\n";
        return kInterrupted;
    } catch (const DomainError& e) {
        std::cerr << "wpvol: " << e.what() << '\n';
        return kDomain;
    } catch (const StorageError& e) {
        std::cerr << "wpvol: " << e.what() << '\n';
        return kStorage;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "wpvol: " << e.what() << '\n';
        return kStorage;
    } catch (const NumericError& e) {
        std::cerr << "wpvol: numeric: " << e.what() << '\n';
        return kVerifyFailed;
    }
}
