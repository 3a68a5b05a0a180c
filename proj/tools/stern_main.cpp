// stern: verify, sweep and tabulate the congruences for L(-k, chi),
// Bernoulli and Euler numbers.
//
// exit codes: 0 all verdicts hold, 1 some verdict fails, 2 bad usage or
// config, 3 internal or cache error.

#include "stern/cache.hpp"
#include "stern/config.hpp"
#include "stern/error.hpp"
#include "stern/report.hpp"
#include "stern/sweep.hpp"
#include "stern/tables.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

const char* const kSymbols[] = {"p", "m", "k", "l", "n", "q", "a", "h", "d", "ell", "limit"};

struct SymbolFlags {
    std::map<std::string, std::string> values;
    std::vector<std::string> chi;
    std::string parity;

    void attach(CLI::App* app) {
        // --h is a parameter here, so help keeps only its long form.
        app->set_help_flag("--help", "print this help message and exit");
        for (const char* name : kSymbols) {
            app->add_option(std::string("--") + name, values[name], std::string("range for ") + name +
                                                                      ": 7, 1,3,5, 0..20 or 0..20:2");
        }
        app->add_option("--chi", chi, "character key such as 2^3[0,1] (repeatable)");
        app->add_option("--parity", parity, "keep only even or odd characters")
            ->check(CLI::IsMember({"even", "odd"}));
    }

    /// Applies every given flag to the job, ignoring symbols it does not take
    /// unless strict is set.
    void apply(stern::JobSpec& job, bool strict) const {
        const auto* kind = stern::find_job_kind(job.id);
        for (const auto& [name, text] : values) {
            if (text.empty()) {
                continue;
            }
            const bool takes = kind != nullptr &&
                               std::find(kind->params.begin(), kind->params.end(), name) != kind->params.end();
            if (!takes) {
                if (strict) {
                    throw stern::ConfigError("'" + job.id + "' takes no --" + name);
                }
                continue;
            }
            job.ranges[name] = stern::parse_range(text);
        }
        if (!chi.empty()) {
            job.chi = chi;
        }
        if (!parity.empty()) {
            job.parity = parity == "even" ? stern::Parity::even : stern::Parity::odd;
        }
    }
};

struct RunFlags {
    unsigned threads = 1;
    std::string output;
    std::string cache_dir;
    bool no_cache = false;

    void attach(CLI::App* app) {
        app->add_option("--threads,-j", threads, "worker threads")->check(CLI::PositiveNumber);
        app->add_option("--output,-o", output, "report stem: writes <stem>.csv and <stem>.jsonl");
        app->add_option("--cache-dir", cache_dir, "cache directory (default $STERN_CACHE_DIR or .stern-cache)");
        app->add_flag("--no-cache", no_cache, "do not read or write the persistent cache");
    }

    void apply(stern::SweepConfig& config, const CLI::App* app) const {
        if (app->count("--threads") > 0) {
            config.threads = threads;
        }
        if (app->count("--output") > 0) {
            config.output = output;
        }
        if (app->count("--cache-dir") > 0) {
            config.cache_dir = cache_dir;
        }
        if (no_cache) {
            config.use_cache = false;
        }
    }
};

int report_exit(const stern::SweepReport& report) { return stern::all_hold(report) ? kExitOk : kExitFail; }

int run_verify(const std::string& id, const SymbolFlags& symbols, const RunFlags& run, const CLI::App* app) {
    stern::SweepConfig config;
    stern::JobSpec job;
    job.id = id;
    if (stern::find_job_kind(id) == nullptr) {
        throw stern::ConfigError("unknown congruence id '" + id + "'");
    }
    symbols.apply(job, true);
    config.jobs.push_back(std::move(job));
    run.apply(config, app);
    const auto report = stern::run_sweep(config);
    if (report.verdicts.size() <= 12) {
        stern::print_verdicts(report.verdicts, std::cout);
    } else {
        stern::print_table(report, std::cout);
    }
    if (report.verdicts.empty()) {
        std::cerr << "no grid point satisfies the hypotheses of '" << id << "'\n";
        for (const auto& reason : report.skip_reasons) {
            std::cerr << "  skipped: " << reason << '\n';
        }
        return kExitUsage;
    }
    if (!report.skip_reasons.empty() && report.verdicts.size() <= 12) {
        for (const auto& reason : report.skip_reasons) {
            std::cout << "skipped: " << reason << '\n';
        }
    }
    return report_exit(report);
}

int run_sweep_command(const std::string& path, const SymbolFlags& symbols, const RunFlags& run, const CLI::App* app) {
    auto config = stern::load_config(path);
    for (auto& job : config.jobs) {
        symbols.apply(job, false);
    }
    run.apply(config, app);
    stern::validate(config);
    const auto report = stern::run_sweep(config);
    stern::print_table(report, std::cout);
    if (config.use_cache) {
        std::cout << "cache: loaded " << report.cache_loaded << ", appended " << report.cache_appended << '\n';
    }
    if (!config.output.empty()) {
        std::cout << "wrote " << config.output << ".csv and " << config.output << ".jsonl\n";
    }
    return report_exit(report);
}

int run_table(const std::string& kind, const SymbolFlags& symbols, bool all_characters, bool csv) {
    stern::TableParams params;
    const auto value = [&](const char* name) -> const std::string& { return symbols.values.at(name); };
    params.k = stern::parse_range(value("k").empty() ? std::string("0..10") : value("k"));
    if (!value("p").empty()) {
        params.primes = stern::parse_range(value("p"));
    }
    if (!value("m").empty()) {
        params.ms = stern::parse_range(value("m"));
    }
    params.chi = symbols.chi;
    params.primitive_only = !all_characters;
    const auto table = stern::value_table(kind, params);
    if (csv) {
        stern::write_value_table_csv(table, std::cout);
    } else {
        stern::print_value_table(table, std::cout);
    }
    return kExitOk;
}

int run_cache(const std::string& command, const std::string& dir, std::size_t sample) {
    const stern::PersistentCache cache(dir);
    if (command == "stat") {
        const auto s = cache.stat();
        std::cout << "path     " << s.path << '\n'
                  << "exists   " << (s.exists ? "yes" : "no") << '\n'
                  << "lines    " << s.lines << '\n'
                  << "entries  " << s.entries << '\n'
                  << "bytes    " << s.bytes << '\n';
        return kExitOk;
    }
    if (command == "clear") {
        cache.clear();
        std::cout << "cleared " << cache.path() << '\n';
        return kExitOk;
    }
    const auto result = cache.verify(sample);
    std::cout << "checked " << result.checked << ", mismatches " << result.mismatches << '\n';
    for (const auto& key : result.mismatched_keys) {
        std::cout << "  mismatch: " << key << '\n';
    }
    return result.mismatches == 0 ? kExitOk : kExitInternal;
}

void print_ids() {
    for (const auto& kind : stern::job_kinds()) {
        std::cout << std::left << std::setw(14) << kind.id << std::setw(26);
        std::string params;
        for (const auto& p : kind.params) {
            params += (params.empty() ? "" : " ") + p;
        }
        std::cout << params << kind.summary << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Kummer-type congruences for L(-k, chi), B_k and E_k"};
    app.require_subcommand(1);

    SymbolFlags verify_symbols;
    RunFlags verify_run;
    std::string verify_id;
    auto* verify = app.add_subcommand("verify", "check one congruence over the given parameters");
    verify->add_option("id", verify_id, "congruence id (see 'stern ids')")->required();
    verify_symbols.attach(verify);
    verify_run.attach(verify);

    SymbolFlags sweep_symbols;
    RunFlags sweep_run;
    std::string config_path;
    auto* sweep = app.add_subcommand("sweep", "run every job of a JSON config");
    sweep->add_option("--config,-c", config_path, "config file")->required();
    sweep_symbols.attach(sweep);
    sweep_run.attach(sweep);

    SymbolFlags table_symbols;
    std::string table_kind;
    bool table_all = false;
    bool table_csv = false;
    auto* table = app.add_subcommand("table", "print exact values");
    table->add_option("kind", table_kind, "bernoulli, euler, generalized-bernoulli, l-values or script-l")
        ->required()
        ->check(CLI::IsMember(stern::table_kinds()));
    table_symbols.attach(table);
    table->add_flag("--all", table_all, "include imprimitive characters");
    table->add_flag("--csv", table_csv, "CSV instead of an aligned table");

    std::string cache_command;
    std::string cache_dir;
    std::size_t cache_sample = 0;
    auto* cache = app.add_subcommand("cache", "inspect the persistent B_{k,chi} cache");
    cache->add_option("command", cache_command, "stat, clear or verify")
        ->required()
        ->check(CLI::IsMember({"stat", "clear", "verify"}));
    cache->add_option("--cache-dir", cache_dir, "cache directory (default $STERN_CACHE_DIR or .stern-cache)");
    cache->add_option("--sample", cache_sample, "verify at most this many entries (0 = all)");

    auto* ids = app.add_subcommand("ids", "list congruence ids and their parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) {
            return run_verify(verify_id, verify_symbols, verify_run, verify);
        }
        if (*sweep) {
            return run_sweep_command(config_path, sweep_symbols, sweep_run, sweep);
        }
        if (*table) {
            return run_table(table_kind, table_symbols, table_all, table_csv);
        }
        if (*cache) {
            return run_cache(cache_command, cache_dir, cache_sample);
        }
        if (*ids) {
            print_ids();
            return kExitOk;
        }
    } catch (const stern::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const stern::CacheError& e) {
        std::cerr << "cache error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const stern::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
