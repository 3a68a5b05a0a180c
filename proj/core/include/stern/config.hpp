#pragma once

#include "stern/characters.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stern {

/// One sweep job: a verifier id plus the parameter grid it runs over.
///
/// Ranges are keyed by the usual symbols: p, m, k, l, n, q, a, h, d, and
/// "ell" for the prime of Envall's character. A missing range falls back to
/// the job's defaults (see sweep.hpp).
struct JobSpec {
    std::string id;
    std::map<std::string, std::vector<long>> ranges;
    std::optional<Parity> parity;
    /// Explicit characters ("p^m[e...]"); when set they replace enumeration.
    std::vector<std::string> chi;
    /// Lemma jobs also emit probe verdicts for the excluded cases.
    bool probe_excluded = true;
};

struct SweepConfig {
    std::vector<JobSpec> jobs;
    /// Report path stem: <output>.csv and <output>.jsonl. Empty writes nothing.
    std::string output;
    /// Cache directory; empty means $STERN_CACHE_DIR or ".stern-cache".
    std::string cache_dir;
    bool use_cache = true;
    unsigned threads = 1;
};

/// Parses a range: "7", "1,3,5", "0..20" or "0..20:2". Throws ConfigError
/// on malformed or empty input.
std::vector<long> parse_range(const std::string& text);

/// Parses a JSON config. Top-level keys: jobs (required, non-empty), output,
/// cache_dir, use_cache, threads. Each job: id plus range keys whose values
/// are an integer, an array of integers or a range string; optional parity,
/// chi and probe_excluded. Throws ConfigError.
SweepConfig parse_config(const std::string& text);
SweepConfig load_config(const std::string& path);

/// Canonical JSON echo of a config, used in report headers.
std::string config_to_json(const SweepConfig& config);

/// Throws ConfigError for unknown ids, unknown range keys or empty ranges.
void validate(const SweepConfig& config);

}  // namespace stern
