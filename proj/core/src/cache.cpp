#include "stern/cache.hpp"

#include "stern/bernoulli.hpp"
#include "stern/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

namespace stern {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

using EntryKey = std::pair<CharacterKey, unsigned>;

std::string entry_label(const CharacterKey& chi, unsigned k) { return chi.to_string() + " k=" + std::to_string(k); }

}  // namespace

std::string resolve_cache_dir(const std::string& dir) {
    if (!dir.empty()) {
        return dir;
    }
    if (const char* env = std::getenv("STERN_CACHE_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ".stern-cache";
}

std::string cache_record(const CacheEntry& entry) {
    ordered_json j;
    j["chi"] = entry.chi.to_string();
    j["p"] = entry.chi.p;
    j["m"] = entry.chi.m;
    j["e"] = entry.chi.exponents;
    j["k"] = entry.k;
    j["order"] = entry.value.order();
    auto coeffs = json::array();
    for (const auto& c : entry.value.coeffs()) {
        coeffs.push_back(c.to_string());
    }
    j["b"] = std::move(coeffs);
    return j.dump();
}

CacheEntry parse_cache_record(const std::string& line) {
    const json j = json::parse(line);
    CacheEntry entry;
    entry.chi.p = j.at("p").get<std::uint64_t>();
    entry.chi.m = j.at("m").get<unsigned>();
    entry.chi.exponents = j.at("e").get<std::vector<std::uint64_t>>();
    entry.k = j.at("k").get<unsigned>();
    if (j.contains("chi") && j.at("chi").get<std::string>() != entry.chi.to_string()) {
        throw CacheError("character label disagrees with p, m, e");
    }
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("b")) {
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    entry.value = CyclotomicElement::from_basis(j.at("order").get<unsigned>(), std::move(coeffs));
    return entry;
}

PersistentCache::PersistentCache(std::string dir)
    : dir_(resolve_cache_dir(dir)), path_((fs::path(dir_) / "bernoulli.jsonl").string()) {}

std::vector<CacheEntry> PersistentCache::load() const {
    std::ifstream in(path_);
    if (!in) {
        return {};
    }
    std::map<EntryKey, CacheEntry> latest;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) {
            continue;
        }
        try {
            auto entry = parse_cache_record(line);
            EntryKey key{entry.chi, entry.k};
            latest.insert_or_assign(std::move(key), std::move(entry));
        } catch (const std::exception& e) {
            std::string label = "?";
            try {
                const json j = json::parse(line);
                label = j.value("chi", std::string("?")) + " k=" + std::to_string(j.value("k", -1));
            } catch (const std::exception&) {
            }
            throw CacheError("corrupt cache record at " + path_ + ":" + std::to_string(number) + " (key " + label +
                             "): " + e.what());
        }
    }
    std::vector<CacheEntry> out;
    out.reserve(latest.size());
    for (auto& [key, entry] : latest) {
        out.push_back(std::move(entry));
    }
    return out;
}

std::size_t PersistentCache::load_into_memory() const {
    auto& memo = BernoulliCache::global();
    const auto entries = load();
    for (const auto& entry : entries) {
        memo.store(entry.chi, entry.k + 1, entry.value);
    }
    return entries.size();
}

void PersistentCache::append(const std::vector<CacheEntry>& entries) const {
    if (entries.empty()) {
        return;
    }
    std::error_code ec;
    fs::create_directories(dir_, ec);
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        throw CacheError("cannot open cache file " + path_ + " for appending");
    }
    for (const auto& entry : entries) {
        out << cache_record(entry) << '\n';
    }
    if (!out) {
        throw CacheError("write to cache file " + path_ + " failed");
    }
}

std::size_t PersistentCache::append_new_from_memory() const {
    std::set<EntryKey> known;
    for (const auto& entry : load()) {
        known.emplace(entry.chi, entry.k);
    }
    std::vector<CacheEntry> fresh;
    for (const auto& [key, value] : BernoulliCache::global().generalized_snapshot()) {
        if (key.second == 0) {
            continue;
        }
        const unsigned k = key.second - 1;
        if (!known.contains({key.first, k})) {
            fresh.push_back({key.first, k, value});
        }
    }
    append(fresh);
    return fresh.size();
}

CacheStat PersistentCache::stat() const {
    CacheStat s;
    s.path = path_;
    std::error_code ec;
    s.exists = fs::exists(path_, ec);
    if (!s.exists) {
        return s;
    }
    s.bytes = fs::file_size(path_, ec);
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            ++s.lines;
        }
    }
    s.entries = load().size();
    return s;
}

void PersistentCache::clear() const {
    std::error_code ec;
    fs::remove(path_, ec);
    if (ec) {
        throw CacheError("cannot remove cache file " + path_ + ": " + ec.message());
    }
}

CacheVerifyResult PersistentCache::verify(std::size_t sample) const {
    const auto entries = load();
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    if (sample != 0 && sample < entries.size()) {
        std::mt19937_64 rng(0x5eed);
        std::shuffle(order.begin(), order.end(), rng);
        order.resize(sample);
        std::sort(order.begin(), order.end());
    }
    CacheVerifyResult result;
    for (const auto i : order) {
        const auto& entry = entries[i];
        ++result.checked;
        const auto chi = make_character(entry.chi);
        if (!(generalized_bernoulli_uncached(entry.k + 1, chi) == entry.value)) {
            ++result.mismatches;
            result.mismatched_keys.push_back(entry_label(entry.chi, entry.k));
        }
    }
    return result;
}

}  // namespace stern
