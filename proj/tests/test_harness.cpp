#include "stern/bernoulli.hpp"
#include "stern/cache.hpp"
#include "stern/config.hpp"
#include "stern/error.hpp"
#include "stern/report.hpp"
#include "stern/sweep.hpp"
#include "stern/tables.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace stern;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("stern-test-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string jsonl_without_header(const SweepReport& report) {
    std::ostringstream out;
    write_jsonl(report, out);
    const auto text = out.str();
    return text.substr(text.find('\n') + 1);
}

std::vector<std::string> sorted_keys(const std::vector<CongruenceVerdict>& verdicts) {
    std::vector<std::string> keys;
    for (const auto& v : verdicts) {
        keys.push_back(verdict_to_json(v));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

const char* kSmallConfig = R"({
  "jobs": [
    {"id": "1.3", "k": "0..10:2", "n": "1..4", "q": [1, 3]},
    {"id": "1.4", "m": [3, 4], "k": "0..6", "n": [1, 2], "q": 1},
    {"id": "3.2", "p": [3], "m": [1, 2], "k": "0..6", "n": [2, 3], "a": [2, 7]}
  ],
  "use_cache": false
})";

}  // namespace

TEST(Config, ParseRange) {
    EXPECT_EQ(parse_range("7"), (std::vector<long>{7}));
    EXPECT_EQ(parse_range("1,3,5"), (std::vector<long>{1, 3, 5}));
    EXPECT_EQ(parse_range("0..4"), (std::vector<long>{0, 1, 2, 3, 4}));
    EXPECT_EQ(parse_range("0..6:3"), (std::vector<long>{0, 3, 6}));
    EXPECT_THROW(parse_range(""), ConfigError);
    EXPECT_THROW(parse_range("5..1"), ConfigError);
    EXPECT_THROW(parse_range("1..5:0"), ConfigError);
    EXPECT_THROW(parse_range("a..b"), ConfigError);
}

TEST(Config, ParseAndValidate) {
    const auto config = parse_config(kSmallConfig);
    ASSERT_EQ(config.jobs.size(), 3U);
    EXPECT_EQ(config.jobs[0].ranges.at("q"), (std::vector<long>{1, 3}));
    EXPECT_FALSE(config.use_cache);
    EXPECT_EQ(config.threads, 1U);
    EXPECT_NO_THROW(validate(config));
    EXPECT_EQ(parse_config(config_to_json(config)).jobs.size(), 3U);
}

TEST(Config, Errors) {
    EXPECT_THROW(parse_config("{"), ConfigError);
    EXPECT_THROW(parse_config(R"({"jobs": []})"), ConfigError);
    EXPECT_THROW(validate(parse_config(R"({"jobs": [{"id": "nope"}]})")), ConfigError);
    EXPECT_THROW(validate(parse_config(R"({"jobs": [{"id": "1.3", "z": 1}]})")), ConfigError);
    EXPECT_THROW(parse_config(R"({"jobs": [{"id": "1.3", "k": []}]})"), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/stern.json"), ConfigError);
}

TEST(Sweep, SmallConfigHolds) {
    const auto report = run_sweep(parse_config(kSmallConfig));
    EXPECT_TRUE(all_hold(report));
    EXPECT_EQ(report.summary.overall.total, report.verdicts.size());
    EXPECT_EQ(report.summary.overall.fails, 0U);
    EXPECT_GT(report.summary.by_id.at("1.3").holds, 0U);
    EXPECT_GT(report.summary.by_id.at("1.4").holds, 0U);
    EXPECT_GT(report.skips.at("1.4"), 0U);  // the wrong-parity half of the k range
}

TEST(Sweep, ParallelMatchesSerial) {
    auto config = parse_config(kSmallConfig);
    const auto serial = run_sweep(config);
    BernoulliCache::global().clear();
    config.threads = 4;
    const auto parallel = run_sweep(config);
    EXPECT_EQ(parallel.verdicts, serial.verdicts);
    EXPECT_EQ(sorted_keys(parallel.verdicts), sorted_keys(serial.verdicts));
}

TEST(Report, DeterministicApartFromHeader) {
    const auto config = parse_config(kSmallConfig);
    const auto a = run_sweep(config);
    BernoulliCache::global().clear();
    const auto b = run_sweep(config);
    EXPECT_EQ(jsonl_without_header(a), jsonl_without_header(b));
    std::ostringstream ca;
    std::ostringstream cb;
    write_csv(a, ca);
    write_csv(b, cb);
    EXPECT_EQ(ca.str(), cb.str());
    EXPECT_EQ(ca.str().substr(0, ca.str().find('\n')),
              "id,params,prime,relation,holds,required_exponent,observed_margin,branch");
}

TEST(Report, FilesAreWritten) {
    const auto dir = scratch_dir("report");
    auto config = parse_config(kSmallConfig);
    config.output = (dir / "out").string();
    const auto report = run_sweep(config);
    ASSERT_TRUE(fs::exists(dir / "out.csv"));
    ASSERT_TRUE(fs::exists(dir / "out.jsonl"));
    std::ifstream in(dir / "out.jsonl");
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        ++lines;
    }
    // header, config, verdicts, summary
    EXPECT_EQ(lines, report.verdicts.size() + 3);
    fs::remove_all(dir);
}

TEST(Report, VerdictJsonRoundTrip) {
    const auto report = run_sweep(parse_config(kSmallConfig));
    for (const auto& v : report.verdicts) {
        ASSERT_EQ(verdict_from_json(verdict_to_json(v)), v) << v.key();
    }
    EXPECT_EQ(flatten_params({{"k", "1"}, {"n", "2"}}), "k=1;n=2");
}

TEST(Cache, SweepPopulatesAndVerifies) {
    const auto dir = scratch_dir("cache");
    auto config = parse_config(kSmallConfig);
    config.use_cache = true;
    config.cache_dir = dir.string();
    BernoulliCache::global().clear();
    const auto first = run_sweep(config);
    EXPECT_GT(first.cache_appended, 0U);

    const PersistentCache cache(dir.string());
    const auto stat = cache.stat();
    EXPECT_TRUE(stat.exists);
    EXPECT_EQ(stat.entries, first.cache_appended);
    const auto check = cache.verify();
    EXPECT_EQ(check.checked, stat.entries);
    EXPECT_EQ(check.mismatches, 0U);

    BernoulliCache::global().clear();
    const auto second = run_sweep(config);
    EXPECT_EQ(second.cache_loaded, stat.entries);
    EXPECT_EQ(second.cache_appended, 0U);
    EXPECT_EQ(second.verdicts, first.verdicts);

    cache.clear();
    EXPECT_EQ(cache.stat().entries, 0U);
    fs::remove_all(dir);
}

TEST(Cache, RecordsRoundTripAndLastEntryWins) {
    const auto dir = scratch_dir("records");
    const PersistentCache cache(dir.string());
    const auto chi = make_character(CharacterKey::parse("2^3[0,1]"));
    CacheEntry e{chi.key(), 3, generalized_bernoulli(4, chi)};
    EXPECT_EQ(parse_cache_record(cache_record(e)).value, e.value);
    CacheEntry stale = e;
    stale.value = CyclotomicElement(Rational(7));
    cache.append({stale, e});
    const auto loaded = cache.load();
    ASSERT_EQ(loaded.size(), 1U);
    EXPECT_EQ(loaded[0].value, CyclotomicElement(Rational(-44)));
    EXPECT_EQ(cache.verify().mismatches, 0U);

    cache.clear();
    cache.append({e, stale});
    const auto check = cache.verify();
    EXPECT_EQ(check.mismatches, 1U);
    fs::remove_all(dir);
}

TEST(Cache, CorruptFileIsReported) {
    const auto dir = scratch_dir("corrupt");
    const PersistentCache cache(dir.string());
    {
        std::ofstream out(cache.path());
        out << "{\"chi\":\"2^3[0,1]\",\"k\":\n";
    }
    EXPECT_THROW(cache.load(), CacheError);
    fs::remove_all(dir);
}

TEST(Cache, DirectoryResolution) {
    EXPECT_EQ(resolve_cache_dir("/tmp/x"), "/tmp/x");
    ::setenv("STERN_CACHE_DIR", "/tmp/from-env", 1);
    EXPECT_EQ(resolve_cache_dir(""), "/tmp/from-env");
    ::unsetenv("STERN_CACHE_DIR");
    EXPECT_EQ(resolve_cache_dir(""), ".stern-cache");
}

TEST(Tables, Examples) {
    TableParams params;
    params.k = {8};
    auto euler = value_table("euler", params);
    ASSERT_EQ(euler.rows.size(), 1U);
    EXPECT_EQ(euler.rows[0][1], "1385");

    params.k = {1, 3};
    params.chi = {"2^3[0,1]"};
    const auto script = value_table("script-l", params);
    ASSERT_EQ(script.rows.size(), 2U);
    EXPECT_EQ(script.rows[0][2], "-2");
    EXPECT_EQ(script.rows[1][2], "22");

    params.k = {1};
    params.chi = {"chi-4"};
    const auto lv = value_table("l-values", params);
    ASSERT_EQ(lv.rows.size(), 1U);
    EXPECT_EQ(lv.rows[0][2].rfind("undefined:", 0), 0U);

    EXPECT_THROW(value_table("nope", params), ConfigError);
    params.k.clear();
    EXPECT_THROW(value_table("euler", params), ConfigError);
}

TEST(JobKinds, EveryKindHasDefaultsForItsParams) {
    for (const auto& kind : job_kinds()) {
        for (const auto& [key, values] : kind.defaults) {
            EXPECT_NE(std::find(kind.params.begin(), kind.params.end(), key), kind.params.end())
                << kind.id << " " << key;
            EXPECT_FALSE(values.empty());
        }
    }
    EXPECT_NE(find_job_kind("1.4"), nullptr);
    EXPECT_EQ(find_job_kind("nope"), nullptr);
}
