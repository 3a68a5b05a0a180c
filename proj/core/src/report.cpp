#include "stern/report.hpp"

#include "stern/error.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace stern {

namespace {

using nlohmann::ordered_json;

bool is_probe(const CongruenceVerdict& v) { return v.branch && *v.branch == "probe"; }

ordered_json element_json(const CyclotomicElement& x) {
    ordered_json j;
    j["order"] = x.order();
    auto coeffs = ordered_json::array();
    for (const auto& c : x.coeffs()) {
        coeffs.push_back(c.to_string());
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

CyclotomicElement element_from_json(const ordered_json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    return CyclotomicElement::from_basis(j.at("order").get<unsigned>(), std::move(coeffs));
}

ordered_json pairs_json(const ParamList& params) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : params) {
        j[k] = v;
    }
    return j;
}

ParamList pairs_from_json(const ordered_json& j) {
    ParamList out;
    for (const auto& [k, v] : j.items()) {
        out.emplace_back(k, v.get<std::string>());
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

void tally(IdSummary& s, const CongruenceVerdict& v) {
    ++s.total;
    if (is_probe(v)) {
        ++(v.holds ? s.probe_holds : s.probe_fails);
        return;
    }
    ++(v.holds ? s.holds : s.fails);
    s.min_margin = std::min(s.min_margin, v.observed_margin);
}

ordered_json summary_json(const IdSummary& s) {
    ordered_json j;
    j["total"] = s.total;
    j["holds"] = s.holds;
    j["fails"] = s.fails;
    j["probe_holds"] = s.probe_holds;
    j["probe_fails"] = s.probe_fails;
    j["skips"] = s.skips;
    j["min_margin"] = s.min_margin.to_string();
    return j;
}

}  // namespace

SweepSummary summarize(const std::vector<CongruenceVerdict>& verdicts,
                       const std::map<std::string, std::size_t>& skips) {
    SweepSummary summary;
    for (const auto& v : verdicts) {
        tally(summary.by_id[v.id], v);
        tally(summary.overall, v);
    }
    for (const auto& [id, count] : skips) {
        summary.by_id[id].skips += count;
        summary.overall.skips += count;
    }
    return summary;
}

bool all_hold(const SweepReport& report) { return report.summary.overall.fails == 0; }

std::string flatten_params(const ParamList& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) {
            out += ';';
        }
        out += k + "=" + v;
    }
    return out;
}

std::string verdict_to_json(const CongruenceVerdict& v) {
    ordered_json j;
    j["type"] = "verdict";
    j["id"] = v.id;
    j["params"] = pairs_json(v.params);
    j["prime"] = v.prime;
    j["relation"] = to_string(v.relation);
    j["required"] = v.required_modulus_exponent;
    j["margin"] = v.observed_margin.to_string();
    j["holds"] = v.holds;
    j["branch"] = v.branch ? ordered_json(*v.branch) : ordered_json(nullptr);
    j["notes"] = pairs_json(v.notes);
    j["lhs"] = element_json(v.lhs);
    j["rhs"] = element_json(v.rhs);
    return j.dump();
}

CongruenceVerdict verdict_from_json(const std::string& line) {
    const auto j = ordered_json::parse(line);
    CongruenceVerdict v;
    v.id = j.at("id").get<std::string>();
    v.params = pairs_from_json(j.at("params"));
    v.prime = j.at("prime").get<std::uint64_t>();
    v.relation = parse_relation(j.at("relation").get<std::string>());
    v.required_modulus_exponent = j.at("required").get<long>();
    v.observed_margin = Valuation::parse(j.at("margin").get<std::string>());
    v.holds = j.at("holds").get<bool>();
    if (!j.at("branch").is_null()) {
        v.branch = j.at("branch").get<std::string>();
    }
    v.notes = pairs_from_json(j.at("notes"));
    v.lhs = element_from_json(j.at("lhs"));
    v.rhs = element_from_json(j.at("rhs"));
    return v;
}

void write_csv(const SweepReport& report, std::ostream& out) {
    out << "id,params,prime,relation,holds,required_exponent,observed_margin,branch\n";
    for (const auto& v : report.verdicts) {
        out << csv_field(v.id) << ',' << csv_field(flatten_params(v.params)) << ',' << v.prime << ','
            << to_string(v.relation) << ',' << (v.holds ? "true" : "false") << ',' << v.required_modulus_exponent
            << ',' << v.observed_margin.to_string() << ',' << csv_field(v.branch.value_or("")) << '\n';
    }
}

void write_jsonl(const SweepReport& report, std::ostream& out) {
    ordered_json header;
    header["type"] = "header";
    header["timestamp"] = report.timestamp;
    header["duration_s"] = report.duration_seconds;
    out << header.dump() << '\n';

    ordered_json config;
    config["type"] = "config";
    config["config"] = ordered_json::parse(config_to_json(report.config));
    out << config.dump() << '\n';

    for (const auto& v : report.verdicts) {
        out << verdict_to_json(v) << '\n';
    }

    ordered_json summary;
    summary["type"] = "summary";
    summary["overall"] = summary_json(report.summary.overall);
    ordered_json by_id = ordered_json::object();
    for (const auto& [id, s] : report.summary.by_id) {
        by_id[id] = summary_json(s);
    }
    summary["by_id"] = std::move(by_id);
    out << summary.dump() << '\n';
}

void write_report_files(const SweepReport& report, const std::string& stem) {
    const auto parent = std::filesystem::path(stem).parent_path();
    std::error_code ec;
    if (!parent.empty()) {
        std::filesystem::create_directories(parent, ec);
    }
    std::ofstream csv(stem + ".csv");
    if (!csv) {
        throw Error("cannot write report file " + stem + ".csv");
    }
    write_csv(report, csv);
    std::ofstream jsonl(stem + ".jsonl");
    if (!jsonl) {
        throw Error("cannot write report file " + stem + ".jsonl");
    }
    write_jsonl(report, jsonl);
    if (!csv || !jsonl) {
        throw Error("writing report files for " + stem + " failed");
    }
}

void print_table(const SweepReport& report, std::ostream& out, std::size_t max_failures) {
    out << std::left << std::setw(14) << "id" << std::right << std::setw(9) << "total" << std::setw(9) << "holds"
        << std::setw(9) << "fails" << std::setw(9) << "skips" << std::setw(13) << "probe-fails" << std::setw(12)
        << "min-margin" << '\n';
    const auto row = [&](const std::string& id, const IdSummary& s) {
        out << std::left << std::setw(14) << id << std::right << std::setw(9) << s.total << std::setw(9) << s.holds
            << std::setw(9) << s.fails << std::setw(9) << s.skips << std::setw(13) << s.probe_fails << std::setw(12)
            << (s.holds + s.fails == 0 ? std::string("-") : s.min_margin.to_string()) << '\n';
    };
    for (const auto& [id, s] : report.summary.by_id) {
        row(id, s);
    }
    row("all", report.summary.overall);

    std::size_t shown = 0;
    for (const auto& v : report.verdicts) {
        if (v.holds || is_probe(v)) {
            continue;
        }
        if (shown == 0) {
            out << "\nfailing verdicts:\n";
        }
        if (shown++ == max_failures) {
            out << "  ...\n";
            break;
        }
        out << "  " << v.key() << "  margin " << v.observed_margin.to_string() << " vs required "
            << v.required_modulus_exponent << " (" << to_string(v.relation) << ")\n";
    }
    std::ostringstream tail;
    tail << std::fixed << std::setprecision(3) << report.duration_seconds;
    out << "\n" << report.verdicts.size() << " verdicts in " << tail.str() << " s\n";
}

void print_verdicts(const std::vector<CongruenceVerdict>& verdicts, std::ostream& out) {
    std::size_t width = 4;
    for (const auto& v : verdicts) {
        width = std::max(width, v.key().size());
    }
    for (const auto& v : verdicts) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << v.key() << (v.holds ? "holds" : "FAILS")
            << "  p=" << v.prime << "  " << to_string(v.relation) << " mod p^" << v.required_modulus_exponent
            << "  margin=" << v.observed_margin.to_string();
        if (v.branch) {
            out << "  branch=" << *v.branch;
        }
        out << '\n' << "    lhs = " << v.lhs.to_string() << '\n' << "    rhs = " << v.rhs.to_string() << '\n';
        for (const auto& [k, n] : v.notes) {
            out << "    " << k << " = " << n << '\n';
        }
    }
}

}  // namespace stern
