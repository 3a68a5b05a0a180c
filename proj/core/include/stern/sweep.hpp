#pragma once

#include "stern/config.hpp"
#include "stern/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace stern {

/// A sweepable verifier: its id, the range keys it reads and the default
/// grid used for any key a job leaves out.
struct JobKind {
    std::string id;
    std::vector<std::string> params;
    std::map<std::string, std::vector<long>> defaults;
    std::string summary;
};

const std::vector<JobKind>& job_kinds();
const JobKind* find_job_kind(const std::string& id);

/// Evaluates every grid point of every job on a pool of config.threads
/// workers. Points outside a verifier's hypotheses are counted as skips.
/// Verdict order depends only on the config. When config.use_cache is set,
/// the persistent B_{k,chi} cache is loaded first and new entries are
/// appended afterwards by the calling thread alone. Writes report files when
/// config.output is set.
SweepReport run_sweep(const SweepConfig& config);

}  // namespace stern
