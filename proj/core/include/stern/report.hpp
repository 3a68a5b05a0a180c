#pragma once

#include "stern/config.hpp"
#include "stern/verdict.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace stern {

struct IdSummary {
    std::size_t total = 0;
    std::size_t holds = 0;
    std::size_t fails = 0;
    /// Verdicts tagged as probes of excluded cases; never counted as fails.
    std::size_t probe_holds = 0;
    std::size_t probe_fails = 0;
    std::size_t skips = 0;
    /// Smallest margin among in-hypothesis verdicts.
    Valuation min_margin;
};

struct SweepSummary {
    std::map<std::string, IdSummary> by_id;
    IdSummary overall;
};

struct SweepReport {
    SweepConfig config;
    std::vector<CongruenceVerdict> verdicts;
    /// Out-of-hypothesis grid points per job id.
    std::map<std::string, std::size_t> skips;
    /// First few skip reasons, for single-point runs.
    std::vector<std::string> skip_reasons;
    SweepSummary summary;
    double duration_seconds = 0.0;
    std::string timestamp;
    std::size_t cache_loaded = 0;
    std::size_t cache_appended = 0;
};

/// Tallies verdicts and skips. Overall counts always equal the verdict list.
SweepSummary summarize(const std::vector<CongruenceVerdict>& verdicts,
                       const std::map<std::string, std::size_t>& skips);

/// True when no in-hypothesis verdict fails.
bool all_hold(const SweepReport& report);

/// "k=1;n=2"
std::string flatten_params(const ParamList& params);

/// One verdict as a JSON object: exact lhs/rhs as {order, coeffs} with
/// "num/den" strings.
std::string verdict_to_json(const CongruenceVerdict& v);
CongruenceVerdict verdict_from_json(const std::string& line);

/// CSV: header row, then one row per verdict. No timestamps.
void write_csv(const SweepReport& report, std::ostream& out);
/// JSONL: first line is the header (timestamp, duration), which is the only
/// run-dependent line; then the config echo, verdicts and the summary.
void write_jsonl(const SweepReport& report, std::ostream& out);
/// Writes <stem>.csv and <stem>.jsonl. Throws Error if a file cannot be opened.
void write_report_files(const SweepReport& report, const std::string& stem);

/// Aligned human-readable summary. Lists up to max_failures failing verdicts.
void print_table(const SweepReport& report, std::ostream& out, std::size_t max_failures = 20);
/// Aligned listing of individual verdicts.
void print_verdicts(const std::vector<CongruenceVerdict>& verdicts, std::ostream& out);

}  // namespace stern
