#pragma once

#include "stern/characters.hpp"
#include "stern/cyclotomic.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stern {

/// Persistent store of B_{k+1,chi}, one JSON record per line:
///   {"chi":"2^3[0,1]","p":2,"m":3,"e":[0,1],"k":0,"order":2,"b":["1","0"]}
/// The file is append-only; on duplicate keys the last line wins.
struct CacheEntry {
    CharacterKey chi;
    /// L(-k, chi) index: the record holds B_{k+1,chi}.
    unsigned k = 0;
    CyclotomicElement value;
};

struct CacheStat {
    std::string path;
    bool exists = false;
    std::size_t lines = 0;
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
};

struct CacheVerifyResult {
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> mismatched_keys;
};

/// Directory from the argument, else $STERN_CACHE_DIR, else ".stern-cache".
std::string resolve_cache_dir(const std::string& dir);

class PersistentCache {
public:
    explicit PersistentCache(std::string dir);

    const std::string& path() const { return path_; }

    /// Entries with duplicates resolved. Throws CacheError naming the line
    /// and key of the first corrupt record.
    std::vector<CacheEntry> load() const;
    /// Seeds BernoulliCache::global() with the file's entries; returns their count.
    std::size_t load_into_memory() const;
    /// Appends every B_{j,chi} (j >= 1) in BernoulliCache::global() that the
    /// file does not already hold. Returns the number of new lines.
    std::size_t append_new_from_memory() const;
    void append(const std::vector<CacheEntry>& entries) const;

    CacheStat stat() const;
    void clear() const;
    /// Recomputes up to sample entries (all when sample is 0) from the
    /// uncached closed form and compares exactly. Sampling uses a fixed seed.
    CacheVerifyResult verify(std::size_t sample = 0) const;

private:
    std::string dir_;
    std::string path_;
};

std::string cache_record(const CacheEntry& entry);
CacheEntry parse_cache_record(const std::string& line);

}  // namespace stern
