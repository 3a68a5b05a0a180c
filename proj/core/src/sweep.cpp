#include "stern/sweep.hpp"

#include "stern/cache.hpp"
#include "stern/congruences.hpp"
#include "stern/error.hpp"
#include "stern/lemmas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>

namespace stern {

namespace {

using Range = std::vector<long>;

Range span(long lo, long hi, long step = 1) {
    Range out;
    for (long v = lo; v <= hi; v += step) {
        out.push_back(v);
    }
    return out;
}

// Grid over the prime powers of chi-based jobs; p = 2 jobs fix p.
const Range kThm12Primes{3, 5, 7};

}  // namespace

const std::vector<JobKind>& job_kinds() {
    static const std::vector<JobKind> kinds{
        {"kummer", {"p", "k", "l", "n"},
         {{"p", {5, 7, 11}}, {"k", span(2, 20, 2)}, {"l", span(2, 40, 2)}, {"n", {1, 2}}},
         "classical Kummer congruence for B_k / k"},
        {"1.1", {"ell", "m", "p", "k", "l", "n"},
         {{"ell", {3}}, {"m", {1, 2}}, {"p", {5, 7}}, {"k", span(1, 8)}, {"l", span(1, 30)}, {"n", {1}}},
         "Envall: twisted Kummer congruence, chi of conductor ell^m"},
        {"1.2", {"p", "k", "l"}, {{"p", {3, 5, 7}}, {"k", span(2, 20, 2)}, {"l", span(2, 40, 2)}},
         "Euler-Kummer: E_k == E_l mod p"},
        {"1.3", {"k", "n", "q"}, {{"k", span(0, 20, 2)}, {"n", span(1, 6)}, {"q", {1, 3, 5}}},
         "Stern: E_{k+2^n q} == E_k + 2^n mod 2^(n+1)"},
        {"1.3iff", {"k", "l", "n"}, {{"k", span(0, 20, 2)}, {"l", span(0, 20, 2)}, {"n", span(1, 4)}},
         "Stern, iff form: E_k == E_l mod 2^n iff k == l mod 2^n"},
        {"1.4", {"m", "k", "n", "q"}, {{"m", span(3, 5)}, {"k", span(0, 20)}, {"n", span(1, 3)}, {"q", {1, 3}}},
         "script-L Kummer congruence for p = 2"},
        {"1.5", {"m", "k", "l", "n"}, {{"m", span(3, 5)}, {"k", span(0, 20)}, {"l", span(0, 20)}, {"n", span(1, 3)}},
         "script-L_k == script-L_l mod 2^(n+2) iff k == l mod 2^n"},
        {"thm12", {"p", "m", "k", "n", "q"},
         {{"p", kThm12Primes}, {"m", {1, 2}}, {"k", span(0, 12)}, {"n", {1, 2}}, {"q", {1, 2}}},
         "odd p, both branches"},
        {"1.6", {"p", "m", "k", "n", "q"},
         {{"p", kThm12Primes}, {"m", {1, 2}}, {"k", span(0, 12)}, {"n", {1, 2}}, {"q", {1, 2}}},
         "odd p, unit branch: L(-k - phi(p^n) q) == L(-k) mod p^n"},
        {"1.7", {"p", "m", "k", "n", "q"},
         {{"p", kThm12Primes}, {"m", {2}}, {"k", span(0, 12)}, {"n", {1, 2}}, {"q", {1, 2}}},
         "odd p, non-unit branch: script-L congruence with the p^n q term"},
        {"1.8", {"p", "m", "k", "h", "n"},
         {{"p", kThm12Primes}, {"m", {2}}, {"k", span(0, 12)}, {"h", span(0, 9)}, {"n", span(1, 3)}},
         "odd p: script-L_{k+(p-1)h} == script-L_k mod p^n iff h == 0 mod p^(n-1)"},
        {"voronoi", {"a", "p", "k"}, {{"p", {5, 7, 11}}, {"a", span(1, 10)}, {"k", span(2, 12, 2)}},
         "Voronoi's congruence for B_k"},
        {"3.1", {"k", "n"}, {{"k", span(0, 12, 2)}, {"n", span(1, 5)}}, "Sun's congruence for E_k"},
        {"3.2", {"p", "m", "k", "n", "a"},
         {{"p", {2, 3, 5}}, {"m", span(1, 3)}, {"k", span(0, 12)}, {"n", span(1, 4)}, {"a", {-1, 7, 11, 13}}},
         "twisted Voronoi congruence for L(-k, chi)"},
        {"lerch", {"a", "n"}, {{"n", {5, 8, 9, 16, 27}}, {"a", span(1, 27)}}, "Lerch's Fermat quotient formula"},
        {"nondiv", {"p", "m", "d"}, {{"p", {2, 3, 5, 7}}, {"m", {2, 3}}, {"d", span(0, 5)}},
         "script-L_d is not divisible by p (4 when p = 2)"},
        {"floor-parity", {"m"}, {{"m", span(3, 6)}}, "parity of the floor count"},
        {"2.1", {"p", "m", "n", "k", "limit"},
         {{"p", {2, 3, 5}}, {"m", span(1, 3)}, {"n", span(1, 4)}, {"k", span(0, 12)}, {"limit", {32}}},
         "S_k(p^n) == p^(n-m) S_k(p^m) mod p^n"},
        {"2.2", {"p", "m", "n", "k", "a", "limit"},
         {{"p", {2, 3, 5}}, {"m", span(1, 3)}, {"n", span(1, 4)}, {"k", span(0, 12)}, {"limit", {32}}},
         "(1 - chi(a) a^k) S_k(p^m) == 0 mod p^m, with the corollary"},
        {"2.3", {"p", "m", "limit"}, {{"p", {2, 3, 5, 7}}, {"m", span(2, 6)}, {"limit", {81}}},
         "orders of chi(p^(m-k) + 1) and chi(5)"},
        {"2.4", {"p", "m", "n", "k", "limit"},
         {{"p", {2, 3, 5}}, {"m", span(1, 3)}, {"n", span(1, 4)}, {"k", span(0, 12)}, {"limit", {32}}},
         "S_k(p^n) == 0 mod p^(n-1), and mod 2^n for p = 2"},
    };
    return kinds;
}

const JobKind* find_job_kind(const std::string& id) {
    for (const auto& kind : job_kinds()) {
        if (kind.id == id) {
            return &kind;
        }
    }
    return nullptr;
}

namespace {

struct TaskOutput {
    std::vector<CongruenceVerdict> verdicts;
    std::size_t skips = 0;
    std::string reason;
};

struct Task {
    std::string job;
    std::function<std::vector<CongruenceVerdict>()> run;
};

class Grid {
public:
    Grid(const JobSpec& job, const JobKind& kind) : job_(job), kind_(kind) {}

    const Range& operator[](const std::string& key) const {
        if (const auto it = job_.ranges.find(key); it != job_.ranges.end()) {
            return it->second;
        }
        return kind_.defaults.at(key);
    }

    unsigned u(const std::string& key, long value) const {
        if (value < 0) {
            throw ConfigError("job '" + job_.id + "': " + key + " must be non-negative");
        }
        return static_cast<unsigned>(value);
    }

    long max(const std::string& key) const {
        const auto& r = (*this)[key];
        return *std::max_element(r.begin(), r.end());
    }

    /// Characters of the job: explicit keys, or every character mod p^m
    /// (primitive ones only when asked), filtered by parity.
    std::vector<DirichletCharacter> characters(long p, long m, bool primitive_only) const {
        std::vector<DirichletCharacter> out;
        if (!job_.chi.empty()) {
            for (const auto& text : job_.chi) {
                const auto key = CharacterKey::parse(text);
                if (key.p == static_cast<std::uint64_t>(p) && key.m == static_cast<unsigned>(m)) {
                    out.push_back(make_character(key));
                }
            }
        } else {
            if (p < 2 || m < 1 || !is_prime(static_cast<std::uint64_t>(p))) {
                return {};
            }
            std::uint64_t modulus = 1;
            for (long i = 0; i < m; ++i) {
                modulus *= static_cast<std::uint64_t>(p);
            }
            if (modulus < 3) {
                return {};
            }
            out = primitive_only ? enumerate_primitive(static_cast<std::uint64_t>(p), static_cast<unsigned>(m))
                                 : enumerate_characters(static_cast<std::uint64_t>(p), static_cast<unsigned>(m));
        }
        if (job_.parity) {
            std::erase_if(out, [&](const DirichletCharacter& chi) { return chi.parity() != *job_.parity; });
        }
        if (primitive_only) {
            std::erase_if(out, [](const DirichletCharacter& chi) { return !chi.is_primitive(); });
        }
        return out;
    }

    /// Characters for every (p, m) of the grid with p taken from the given range.
    std::vector<DirichletCharacter> all_characters(const Range& primes, bool primitive_only) const {
        std::vector<DirichletCharacter> out;
        if (!job_.chi.empty()) {
            for (const auto& text : job_.chi) {
                out.push_back(make_character(CharacterKey::parse(text)));
            }
            if (job_.parity) {
                std::erase_if(out, [&](const DirichletCharacter& chi) { return chi.parity() != *job_.parity; });
            }
            return out;
        }
        for (const long p : primes) {
            for (const long m : (*this)["m"]) {
                auto chars = characters(p, m, primitive_only);
                out.insert(out.end(), chars.begin(), chars.end());
            }
        }
        return out;
    }

private:
    const JobSpec& job_;
    const JobKind& kind_;
};

using One = std::function<CongruenceVerdict()>;

void add(std::vector<Task>& tasks, const std::string& job, One f) {
    tasks.push_back({job, [f = std::move(f)] { return std::vector<CongruenceVerdict>{f()}; }});
}

void expand_job(const JobSpec& job, std::vector<Task>& tasks) {
    const JobKind& kind = *find_job_kind(job.id);
    const Grid g(job, kind);
    const std::string& id = job.id;

    if (id == "kummer") {
        for (long p : g["p"]) for (long k : g["k"]) for (long l : g["l"]) for (long n : g["n"]) {
            add(tasks, id, [=] { return verify_kummer_classical(g.u("p", p), g.u("k", k), g.u("l", l), g.u("n", n)); });
        }
    } else if (id == "1.1") {
        for (const auto& chi : g.all_characters(g["ell"], false)) {
            for (long p : g["p"]) for (long k : g["k"]) for (long l : g["l"]) for (long n : g["n"]) {
                add(tasks, id, [=] { return verify_envall(chi, g.u("p", p), g.u("k", k), g.u("l", l), g.u("n", n)); });
            }
        }
    } else if (id == "1.2") {
        for (long p : g["p"]) for (long k : g["k"]) for (long l : g["l"]) {
            add(tasks, id, [=] { return verify_euler_kummer(g.u("p", p), g.u("k", k), g.u("l", l)); });
        }
    } else if (id == "1.3") {
        for (long k : g["k"]) for (long n : g["n"]) for (long q : g["q"]) {
            add(tasks, id, [=] { return verify_stern(g.u("k", k), g.u("n", n), g.u("q", q)); });
        }
    } else if (id == "1.3iff") {
        for (long k : g["k"]) for (long l : g["l"]) for (long n : g["n"]) {
            add(tasks, id, [=] { return verify_stern_iff(g.u("k", k), g.u("l", l), g.u("n", n)); });
        }
    } else if (id == "1.4") {
        for (const auto& chi : g.all_characters({2}, true)) {
            for (long k : g["k"]) for (long n : g["n"]) for (long q : g["q"]) {
                add(tasks, id, [=] { return verify_thm11(chi, g.u("k", k), g.u("n", n), g.u("q", q)); });
            }
        }
    } else if (id == "1.5") {
        for (const auto& chi : g.all_characters({2}, true)) {
            for (long k : g["k"]) for (long l : g["l"]) for (long n : g["n"]) {
                add(tasks, id, [=] { return verify_thm11_iff(chi, g.u("k", k), g.u("l", l), g.u("n", n)); });
            }
        }
    } else if (id == "thm12" || id == "1.6" || id == "1.7") {
        for (const auto& chi : g.all_characters(g["p"], true)) {
            for (long k : g["k"]) for (long n : g["n"]) for (long q : g["q"]) {
                add(tasks, id, [=] {
                    auto v = verify_thm12(chi, g.u("k", k), g.u("n", n), g.u("q", q));
                    if (id != "thm12" && v.id != id) {
                        throw DomainError("thm 1.2: point lies in the other branch");
                    }
                    return v;
                });
            }
        }
    } else if (id == "1.8") {
        for (const auto& chi : g.all_characters(g["p"], true)) {
            for (long k : g["k"]) for (long n : g["n"]) for (long h : g["h"]) {
                add(tasks, id, [=] { return verify_thm12_iff(chi, g.u("k", k), g.u("h", h), g.u("n", n)); });
            }
        }
    } else if (id == "voronoi") {
        for (long p : g["p"]) for (long a : g["a"]) for (long k : g["k"]) {
            add(tasks, id, [=] { return verify_voronoi(a, g.u("p", p), g.u("k", k)); });
        }
    } else if (id == "3.1") {
        for (long k : g["k"]) for (long n : g["n"]) {
            add(tasks, id, [=] { return verify_sun(g.u("k", k), g.u("n", n)); });
        }
    } else if (id == "3.2") {
        for (const auto& chi : g.all_characters(g["p"], false)) {
            for (long n : g["n"]) for (long a : g["a"]) for (long k : g["k"]) {
                add(tasks, id, [=] { return verify_thm31(chi, a, g.u("k", k), g.u("n", n)); });
            }
        }
    } else if (id == "lerch") {
        for (long n : g["n"]) for (long a : g["a"]) {
            add(tasks, id, [=] { return verify_lerch(a, g.u("n", n)); });
        }
    } else if (id == "nondiv") {
        for (const auto& chi : g.all_characters(g["p"], true)) {
            for (long d : g["d"]) {
                add(tasks, id, [=] { return check_nondivisibility(chi, g.u("d", d)); });
            }
        }
    } else if (id == "floor-parity") {
        for (long m : g["m"]) {
            add(tasks, id, [=] { return verify_floor_count_parity(g.u("m", m)); });
        }
    } else {
        // Lemma jobs run one (p, m) slice per task.
        for (long p : g["p"]) {
            for (long m : g["m"]) {
                LemmaGrid grid;
                grid.primes = {g.u("p", p)};
                grid.m_min = grid.m_max = g.u("m", m);
                grid.max_modulus = g.u("limit", g.max("limit"));
                grid.probe_excluded = job.probe_excluded;
                if (id != "2.3") {
                    grid.n_max = g.u("n", g.max("n"));
                    grid.k_max = g.u("k", g.max("k"));
                }
                if (id == "2.2" && job.ranges.contains("a")) {
                    grid.a.assign(g["a"].begin(), g["a"].end());
                }
                tasks.push_back({id, [id, grid, &job] {
                                     auto out = check_lemma_sweep(id, grid);
                                     if (!job.chi.empty() || job.parity) {
                                         std::erase_if(out, [&](const CongruenceVerdict& v) {
                                             const auto key = CharacterKey::parse(v.param("chi"));
                                             const auto chi = make_character(key);
                                             if (job.parity && chi.parity() != *job.parity) {
                                                 return true;
                                             }
                                             return !job.chi.empty() &&
                                                    std::find(job.chi.begin(), job.chi.end(), key.to_string()) ==
                                                        job.chi.end();
                                         });
                                     }
                                     return out;
                                 }});
            }
        }
    }
}

TaskOutput run_task(const Task& task) {
    TaskOutput out;
    try {
        out.verdicts = task.run();
    } catch (const DomainError& e) {
        out.skips = 1;
        out.reason = e.what();
    }
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.config = config;
    report.timestamp = utc_timestamp();

    std::optional<PersistentCache> cache;
    if (config.use_cache) {
        cache.emplace(config.cache_dir);
        report.cache_loaded = cache->load_into_memory();
    }

    std::vector<Task> tasks;
    for (const auto& job : config.jobs) {
        expand_job(job, tasks);
    }

    std::vector<TaskOutput> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                slots[i] = run_task(tasks[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = tasks.size();
            }
        }
    };
    const unsigned width = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(tasks.size())));
    if (width == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(width);
        for (unsigned t = 0; t < width; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto& slot = slots[i];
        report.skips[tasks[i].job] += slot.skips;
        if (!slot.reason.empty() && report.skip_reasons.size() < 16) {
            report.skip_reasons.push_back(tasks[i].job + ": " + slot.reason);
        }
        std::move(slot.verdicts.begin(), slot.verdicts.end(), std::back_inserter(report.verdicts));
    }
    for (auto it = report.skips.begin(); it != report.skips.end();) {
        it = it->second == 0 ? report.skips.erase(it) : std::next(it);
    }
    report.summary = summarize(report.verdicts, report.skips);

    if (cache) {
        report.cache_appended = cache->append_new_from_memory();
    }
    report.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!config.output.empty()) {
        write_report_files(report, config.output);
    }
    return report;
}

}  // namespace stern
