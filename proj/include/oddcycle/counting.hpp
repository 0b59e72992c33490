#pragma once

#include "oddcycle/bigint.hpp"
#include "oddcycle/cycle.hpp"
#include "oddcycle/polytope.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace oddcycle {

enum class CountMode { Closed, Interior };

inline const char* count_mode_name(CountMode mode) {
    return mode == CountMode::Closed ? "closed" : "interior";
}

inline CountMode parse_count_mode(const std::string& name) {
    if (name == "closed") return CountMode::Closed;
    if (name == "interior") return CountMode::Interior;
    throw std::invalid_argument("unknown count mode: " + name);
}

/// Thrown when a brute-force enumeration would exceed its candidate
/// budget; callers are expected to fall back to count_dp.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr unsigned long long kDefaultBruteforceBudget = 100'000'000ull;

/// Independent oracle: iterates every integer vector in [0, n]^(2s+1) and
/// counts those inside nQ (closed) or strictly inside (interior).  Exact
/// but exponential; refuses when (n+1)^(2s+1) exceeds the budget.
inline BigInt count_bruteforce(const CycleInstance& inst, long long n, CountMode mode,
                               unsigned long long budget = kDefaultBruteforceBudget) {
    if (n < 0) throw std::invalid_argument("dilation must be non-negative");
    if (n == 0) return mode == CountMode::Closed ? 1 : 0;  // 0*Q is the origin

    BigInt candidates = 1;
    for (int i = 0; i < inst.n_vertices; ++i) candidates *= (n + 1);
    if (candidates > budget)
        throw BudgetExceeded("brute-force count needs " + candidates.str() +
                             " candidates, budget is " + std::to_string(budget));

    const HalfspaceSystem sys = build_Q(inst, n);
    const Containment containment =
        mode == CountMode::Closed ? Containment::Closed : Containment::Strict;
    BigInt total = 0;
    std::vector<long long> p(inst.n_vertices, 0);
    while (true) {
        if (contains(sys, p, containment)) ++total;
        int i = inst.n_vertices - 1;
        while (i >= 0 && p[i] == n) { p[i] = 0; --i; }
        if (i < 0) break;
        ++p[i];
    }
    return total;
}

/// Exact lattice-point count of nQ via a transfer-style dynamic program.
/// The cycle is broken by conditioning on x_1 = a; positions 2..2s+1 are
/// swept with state (current coordinate value, running sum), enforcing
/// the adjacent-pair bound, the per-coordinate box, the wrap-around pair
/// against x_1 and the global rank bound.  Interior counting reuses the
/// same sweep with every bound tightened by one, which is valid because
/// an interior point of a full-dimensional polytope is strict on every
/// valid inequality, redundant rows included.
inline BigInt count_dp(const CycleInstance& inst, long long n, CountMode mode) {
    if (n < 0) throw std::invalid_argument("dilation must be non-negative");
    const int positions = inst.n_vertices;
    const bool interior = (mode == CountMode::Interior);
    const long long lo = interior ? 1 : 0;
    const long long hi = interior ? n - 1 : n;
    const long long pair_bound = interior ? n - 1 : n;
    const long long sum_bound = interior ? static_cast<long long>(inst.s) * n - 1
                                         : static_cast<long long>(inst.s) * n;
    if (hi < lo || sum_bound < lo) return 0;

    const std::size_t sums = static_cast<std::size_t>(sum_bound) + 1;
    const std::size_t vals = static_cast<std::size_t>(hi) + 1;
    std::vector<BigInt> cur(vals * sums), nxt(vals * sums);
    const auto at = [sums](std::vector<BigInt>& t, long long v, long long sigma) -> BigInt& {
        return t[static_cast<std::size_t>(v) * sums + static_cast<std::size_t>(sigma)];
    };

    BigInt total = 0;
    for (long long a = lo; a <= std::min(hi, sum_bound); ++a) {
        for (auto& x : cur) x = 0;
        at(cur, a, a) = 1;
        for (int pos = 2; pos <= positions; ++pos) {
            for (auto& x : nxt) x = 0;
            for (long long v = lo; v <= hi; ++v) {
                for (long long sigma = v; sigma <= sum_bound; ++sigma) {
                    const BigInt& c = at(cur, v, sigma);
                    if (c == 0) continue;
                    const long long w_max = std::min({hi, pair_bound - v, sum_bound - sigma});
                    for (long long w = lo; w <= w_max; ++w) at(nxt, w, sigma + w) += c;
                }
            }
            cur.swap(nxt);
        }
        for (long long v = lo; v <= hi; ++v) {
            if (v + a > pair_bound) continue;  // wrap-around pair {2s+1, 1}
            for (long long sigma = v; sigma <= sum_bound; ++sigma) total += at(cur, v, sigma);
        }
    }
    return total;
}

/// Persistent count cache, keyed by (s, n, mode).  Line-delimited JSON
/// records with counts as decimal strings; concurrent readers, single
/// writer.  When backed by a file, every newly stored count is appended
/// immediately.
class EhrhartCache {
public:
    EhrhartCache() = default;

    explicit EhrhartCache(const std::filesystem::path& file) : path_(file) {
        if (std::filesystem::exists(file)) load(file);
        out_.open(file, std::ios::app);
        if (!out_) throw std::runtime_error("cannot open cache file: " + file.string());
    }

    EhrhartCache(const EhrhartCache&) = delete;
    EhrhartCache& operator=(const EhrhartCache&) = delete;

    std::optional<BigInt> lookup(int s, long long n, CountMode mode) const {
        std::shared_lock lock(mutex_);
        const auto it = entries_.find({s, n, static_cast<int>(mode)});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void store(int s, long long n, CountMode mode, const BigInt& count) {
        std::unique_lock lock(mutex_);
        const Key key{s, n, static_cast<int>(mode)};
        const auto it = entries_.find(key);
        if (it != entries_.end()) {
            if (it->second != count)
                throw std::runtime_error("cache integrity failure: conflicting counts for s=" +
                                         std::to_string(s) + " n=" + std::to_string(n));
            return;
        }
        entries_.emplace(key, count);
        if (out_.is_open()) {
            out_ << record_line(s, n, mode, count) << '\n';
            out_.flush();
        }
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return entries_.size();
    }

    /// Snapshot of all entries in key order, for `cache inspect`.
    std::vector<std::tuple<int, long long, CountMode, BigInt>> snapshot() const {
        std::shared_lock lock(mutex_);
        std::vector<std::tuple<int, long long, CountMode, BigInt>> out;
        out.reserve(entries_.size());
        for (const auto& [key, value] : entries_)
            out.emplace_back(std::get<0>(key), std::get<1>(key),
                             static_cast<CountMode>(std::get<2>(key)), value);
        return out;
    }

    static std::string record_line(int s, long long n, CountMode mode, const BigInt& count) {
        return std::string("{\"s\":") + std::to_string(s) + ",\"n\":" + std::to_string(n) +
               ",\"mode\":\"" + count_mode_name(mode) + "\",\"count\":\"" + count.str() + "\"}";
    }

private:
    using Key = std::tuple<int, long long, int>;

    void load(const std::filesystem::path& file) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot read cache file: " + file.string());
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            nlohmann::json record;
            try {
                record = nlohmann::json::parse(line);
                const int s = record.at("s").get<int>();
                const long long n = record.at("n").get<long long>();
                const CountMode mode = parse_count_mode(record.at("mode").get<std::string>());
                const BigInt count = parse_decimal(record.at("count").get<std::string>());
                const Key key{s, n, static_cast<int>(mode)};
                const auto it = entries_.find(key);
                if (it != entries_.end() && it->second != count)
                    throw std::runtime_error("conflicting duplicate record");
                entries_.emplace(key, count);
            } catch (const std::exception& e) {
                throw std::runtime_error("malformed cache record at " + file.string() + ":" +
                                         std::to_string(line_no) + ": " + e.what());
            }
        }
    }

    std::map<Key, BigInt> entries_;
    mutable std::shared_mutex mutex_;
    std::filesystem::path path_;
    std::ofstream out_;
};

/// Cache-aware count: consult the cache first, fall back to count_dp and
/// record the result.  A null cache means plain recomputation.
inline BigInt count_lattice_points(const CycleInstance& inst, long long n, CountMode mode,
                                   EhrhartCache* cache = nullptr) {
    if (cache) {
        if (auto hit = cache->lookup(inst.s, n, mode)) return *hit;
    }
    BigInt value = count_dp(inst, n, mode);
    if (cache) cache->store(inst.s, n, mode, value);
    return value;
}

/// Exact closed and interior counts of nQ for n = 0..N.
struct EhrhartTable {
    int s = 0;
    std::vector<BigInt> closed;
    std::vector<BigInt> interior;
};

/// Fills the Ehrhart table for n = 0..N via the dynamic program, using
/// the cache when provided, and validates the structural invariants
/// (H(0) = 1, I(0) = 0, monotone closed counts, I <= H, H(1) equals the
/// Lucas number).  An invariant failure means a counting bug and raises.
inline EhrhartTable ehrhart_table(const CycleInstance& inst, long long N,
                                  EhrhartCache* cache = nullptr) {
    if (N < 0) throw std::invalid_argument("table limit must be non-negative");
    EhrhartTable table;
    table.s = inst.s;
    table.closed.reserve(N + 1);
    table.interior.reserve(N + 1);
    for (long long n = 0; n <= N; ++n) {
        table.closed.push_back(count_lattice_points(inst, n, CountMode::Closed, cache));
        table.interior.push_back(count_lattice_points(inst, n, CountMode::Interior, cache));
    }

    if (table.closed[0] != 1) throw std::logic_error("counting bug: H(0) != 1");
    if (table.interior[0] != 0) throw std::logic_error("counting bug: I(0) != 0");
    for (long long n = 0; n <= N; ++n) {
        if (n > 0 && table.closed[n] < table.closed[n - 1])
            throw std::logic_error("counting bug: closed counts not monotone");
        if (table.interior[n] > table.closed[n])
            throw std::logic_error("counting bug: interior count exceeds closed count");
    }
    if (N >= 1 && table.closed[1] != lucas_number(inst.n_vertices))
        throw std::logic_error("counting bug: H(1) differs from the stable-set count");
    return table;
}

/// Smallest dilation factor whose dilate has an interior lattice point.
/// Always at most 2s+2 (the ring dimension) for this family.
inline int codegree(const CycleInstance& inst, EhrhartCache* cache = nullptr) {
    for (int n = 1; n <= inst.ring_dim; ++n)
        if (count_lattice_points(inst, n, CountMode::Interior, cache) > 0) return n;
    throw std::logic_error("counting bug: no interior point up to dilation 2s+2");
}

}  // namespace oddcycle
