#include "stern/config.hpp"

#include "stern/error.hpp"
#include "stern/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stern {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

long parse_long(std::string_view text, const std::string& context) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw ConfigError("bad integer '" + std::string(text) + "' in '" + context + "'");
    }
    return value;
}

std::vector<long> range_from_json(const json& value, const std::string& key) {
    if (value.is_number_integer()) {
        return {value.get<long>()};
    }
    if (value.is_string()) {
        return parse_range(value.get<std::string>());
    }
    if (value.is_array()) {
        std::vector<long> out;
        for (const auto& item : value) {
            if (!item.is_number_integer()) {
                throw ConfigError("range '" + key + "' must hold integers");
            }
            out.push_back(item.get<long>());
        }
        if (out.empty()) {
            throw ConfigError("range '" + key + "' is empty");
        }
        return out;
    }
    throw ConfigError("range '" + key + "' must be an integer, an array or a range string");
}

Parity parse_parity(const std::string& text) {
    if (text == "even") {
        return Parity::even;
    }
    if (text == "odd") {
        return Parity::odd;
    }
    throw ConfigError("parity must be 'even' or 'odd', got '" + text + "'");
}

JobSpec parse_job(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("each job must be an object");
    }
    JobSpec job;
    for (const auto& [key, value] : j.items()) {
        if (key == "id") {
            if (!value.is_string()) {
                throw ConfigError("job id must be a string");
            }
            job.id = value.get<std::string>();
        } else if (key == "parity") {
            if (!value.is_string()) {
                throw ConfigError("parity must be a string");
            }
            job.parity = parse_parity(value.get<std::string>());
        } else if (key == "chi") {
            const auto list = value.is_array() ? value : json::array({value});
            for (const auto& item : list) {
                if (!item.is_string()) {
                    throw ConfigError("chi entries must be strings like \"2^3[0,1]\"");
                }
                job.chi.push_back(item.get<std::string>());
            }
        } else if (key == "probe_excluded") {
            if (!value.is_boolean()) {
                throw ConfigError("probe_excluded must be a boolean");
            }
            job.probe_excluded = value.get<bool>();
        } else {
            job.ranges[key] = range_from_json(value, key);
        }
    }
    if (job.id.empty()) {
        throw ConfigError("job without an id");
    }
    return job;
}

}  // namespace

std::vector<long> parse_range(const std::string& text) {
    std::vector<long> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::string rest = text.substr(dots + 2);
        const auto colon = rest.find(':');
        const long lo = parse_long(std::string_view(text).substr(0, dots), text);
        const long hi = parse_long(std::string_view(rest).substr(0, colon), text);
        const long step = colon == std::string::npos ? 1 : parse_long(std::string_view(rest).substr(colon + 1), text);
        if (step <= 0) {
            throw ConfigError("range step must be positive in '" + text + "'");
        }
        for (long v = lo; v <= hi; v += step) {
            out.push_back(v);
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(parse_long(item, text));
        }
    }
    if (out.empty()) {
        throw ConfigError("empty range '" + text + "'");
    }
    return out;
}

SweepConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    SweepConfig config;
    for (const auto& [key, value] : root.items()) {
        try {
            if (key == "jobs") {
                if (!value.is_array()) {
                    throw ConfigError("jobs must be an array");
                }
                for (const auto& job : value) {
                    config.jobs.push_back(parse_job(job));
                }
            } else if (key == "output") {
                config.output = value.get<std::string>();
            } else if (key == "cache_dir") {
                config.cache_dir = value.get<std::string>();
            } else if (key == "use_cache") {
                config.use_cache = value.get<bool>();
            } else if (key == "threads") {
                const long threads = value.get<long>();
                if (threads < 1) {
                    throw ConfigError("threads must be at least 1");
                }
                config.threads = static_cast<unsigned>(threads);
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        } catch (const json::type_error& e) {
            throw ConfigError("config key '" + key + "' has the wrong type");
        }
    }
    validate(config);
    return config;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string config_to_json(const SweepConfig& config) {
    ordered_json root;
    root["jobs"] = ordered_json::array();
    for (const auto& job : config.jobs) {
        ordered_json j;
        j["id"] = job.id;
        for (const auto& [key, values] : job.ranges) {
            j[key] = values;
        }
        if (job.parity) {
            j["parity"] = to_string(*job.parity);
        }
        if (!job.chi.empty()) {
            j["chi"] = job.chi;
        }
        j["probe_excluded"] = job.probe_excluded;
        root["jobs"].push_back(std::move(j));
    }
    root["output"] = config.output;
    root["use_cache"] = config.use_cache;
    root["threads"] = config.threads;
    return root.dump();
}

void validate(const SweepConfig& config) {
    if (config.jobs.empty()) {
        throw ConfigError("config has no jobs");
    }
    if (config.threads < 1) {
        throw ConfigError("threads must be at least 1");
    }
    for (const auto& job : config.jobs) {
        const JobKind* kind = find_job_kind(job.id);
        if (kind == nullptr) {
            throw ConfigError("unknown congruence id '" + job.id + "'");
        }
        for (const auto& [key, values] : job.ranges) {
            if (std::find(kind->params.begin(), kind->params.end(), key) == kind->params.end()) {
                throw ConfigError("job '" + job.id + "' takes no parameter '" + key + "'");
            }
            if (values.empty()) {
                throw ConfigError("job '" + job.id + "': range '" + key + "' is empty");
            }
        }
        for (const auto& text : job.chi) {
            try {
                (void)CharacterKey::parse(text);
            } catch (const std::exception&) {
                throw ConfigError("job '" + job.id + "': bad character '" + text + "'");
            }
        }
    }
}

}  // namespace stern
