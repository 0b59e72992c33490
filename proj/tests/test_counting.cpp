#include "oddcycle/counting.hpp"

#include "oddcycle/bigint.hpp"
#include "oddcycle/cycle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <thread>
#include <vector>

using namespace oddcycle;

namespace {

// Rotated copy of the defining system: coordinate i plays the role of
// i + shift.  A label-symmetric construction must count the same points.
HalfspaceSystem rotated_Q(const CycleInstance& inst, long long n, int shift) {
    HalfspaceSystem sys = build_Q(inst, n);
    const int d = inst.n_vertices;
    for (auto& row : sys.rows) {
        std::vector<long long> rotated(d);
        for (int i = 0; i < d; ++i) rotated[(i + shift) % d] = row.normal[i];
        row.normal = std::move(rotated);
    }
    return sys;
}

BigInt bruteforce_over(const HalfspaceSystem& sys, long long n, Containment mode) {
    BigInt total = 0;
    std::vector<long long> p(sys.dim, 0);
    while (true) {
        if (contains(sys, p, mode)) ++total;
        int i = sys.dim - 1;
        while (i >= 0 && p[i] == n) { p[i] = 0; --i; }
        if (i < 0) break;
        ++p[i];
    }
    return total;
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name)
        : path(std::filesystem::temp_directory_path() /
               (name + "-" + std::to_string(::getpid()) + ".jsonl")) {
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("dynamic program agrees with the brute-force oracle on the full grid", "[counting]") {
    for (int s = 1; s <= 3; ++s) {
        const CycleInstance inst(s);
        for (long long n = 0; n <= 4; ++n) {
            for (const CountMode mode : {CountMode::Closed, CountMode::Interior}) {
                INFO("s=" << s << " n=" << n << " mode=" << count_mode_name(mode));
                CHECK(count_dp(inst, n, mode) == count_bruteforce(inst, n, mode));
            }
        }
    }
}

TEST_CASE("frozen count examples", "[counting]") {
    const CycleInstance inst2(2);
    CHECK(count_bruteforce(inst2, 1, CountMode::Closed) == 11);
    CHECK(count_bruteforce(inst2, 2, CountMode::Closed) == 56);
    CHECK(count_bruteforce(inst2, 2, CountMode::Interior) == 0);
    CHECK(count_dp(inst2, 2, CountMode::Closed) == 56);
    CHECK(count_dp(CycleInstance(3), 3, CountMode::Interior) == 1);
}

TEST_CASE("the triangle case counts simplex points", "[counting]") {
    const CycleInstance inst(1);
    for (long long k = 0; k <= 6; ++k) {
        const BigInt expected = binomial(k + 3, 3);
        CHECK(count_dp(inst, k, CountMode::Closed) == expected);
        CHECK(count_bruteforce(inst, k, CountMode::Closed) == expected);
    }
}

TEST_CASE("counts are invariant under rotating the coordinate roles", "[counting]") {
    const CycleInstance inst(2);
    for (long long n = 1; n <= 3; ++n) {
        const BigInt reference = count_dp(inst, n, CountMode::Closed);
        const BigInt reference_interior = count_dp(inst, n, CountMode::Interior);
        for (int shift = 0; shift < inst.n_vertices; ++shift) {
            CHECK(bruteforce_over(rotated_Q(inst, n, shift), n, Containment::Closed) == reference);
            CHECK(bruteforce_over(rotated_Q(inst, n, shift), n, Containment::Strict) ==
                  reference_interior);
        }
    }
}

TEST_CASE("brute force refuses beyond its budget", "[counting]") {
    CHECK_THROWS_AS(count_bruteforce(CycleInstance(3), 10, CountMode::Closed, /*budget=*/1000),
                    BudgetExceeded);
    // and the refusal names the size of the problem
    try {
        count_bruteforce(CycleInstance(3), 10, CountMode::Closed, 1000);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("ehrhart tables match spec values", "[counting]") {
    const auto t1 = ehrhart_table(CycleInstance(1), 4);
    CHECK(t1.closed == std::vector<BigInt>{1, 4, 10, 20, 35});
    const auto t2 = ehrhart_table(CycleInstance(2), 3);
    CHECK(t2.closed == std::vector<BigInt>{1, 11, 56, 192});
    const auto t3 = ehrhart_table(CycleInstance(3), 1);
    CHECK(t3.closed == std::vector<BigInt>{1, 29});
}

TEST_CASE("interior counts vanish below the codegree", "[counting]") {
    for (int s = 1; s <= 6; ++s) {
        const CycleInstance inst(s);
        CHECK(count_dp(inst, 1, CountMode::Interior) == 0);
        CHECK(count_dp(inst, 2, CountMode::Interior) == 0);
        CHECK(codegree(inst) == (s == 1 ? 4 : 3));
    }
}

TEST_CASE("cache round trip through the backing file", "[counting]") {
    TempFile file("oddcycle-cache-roundtrip");
    {
        EhrhartCache cache(file.path);
        const CycleInstance inst(2);
        ehrhart_table(inst, 3, &cache);
        CHECK(cache.size() == 8);
    }
    EhrhartCache reloaded(file.path);
    CHECK(reloaded.size() == 8);
    REQUIRE(reloaded.lookup(2, 2, CountMode::Closed).has_value());
    CHECK(*reloaded.lookup(2, 2, CountMode::Closed) == 56);
    CHECK_FALSE(reloaded.lookup(2, 4, CountMode::Closed).has_value());
}

TEST_CASE("malformed cache records are hard errors", "[counting]") {
    TempFile file("oddcycle-cache-malformed");
    {
        std::ofstream out(file.path);
        out << "{\"s\":2,\"n\":1,\"mode\":\"closed\",\"count\":\"11\"}\n";
        out << "not json at all\n";
    }
    CHECK_THROWS_AS(EhrhartCache(file.path), std::runtime_error);
}

TEST_CASE("conflicting cached counts are an integrity failure", "[counting]") {
    TempFile file("oddcycle-cache-conflict");
    {
        std::ofstream out(file.path);
        out << "{\"s\":2,\"n\":1,\"mode\":\"closed\",\"count\":\"11\"}\n";
        out << "{\"s\":2,\"n\":1,\"mode\":\"closed\",\"count\":\"12\"}\n";
    }
    CHECK_THROWS_AS(EhrhartCache(file.path), std::runtime_error);
}

TEST_CASE("a poisoned cache is caught by the table invariants", "[counting]") {
    TempFile file("oddcycle-cache-poisoned");
    {
        std::ofstream out(file.path);
        // wrong H(1): the stable-set count of C_5 is 11
        out << "{\"s\":2,\"n\":1,\"mode\":\"closed\",\"count\":\"10\"}\n";
    }
    EhrhartCache cache(file.path);
    CHECK_THROWS_AS(ehrhart_table(CycleInstance(2), 5, &cache), std::logic_error);
}

TEST_CASE("counts serialize as decimal strings", "[counting]") {
    CHECK(EhrhartCache::record_line(2, 3, CountMode::Interior, BigInt(1)) ==
          "{\"s\":2,\"n\":3,\"mode\":\"interior\",\"count\":\"1\"}");
    CHECK(parse_decimal("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
    CHECK_THROWS_AS(parse_decimal("12x3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
}

TEST_CASE("concurrent readers and writers stay consistent", "[counting][concurrency]") {
    TempFile file("oddcycle-cache-threads");
    EhrhartCache cache(file.path);
    const CycleInstance inst(3);
    std::vector<EhrhartTable> tables(4);
    {
        std::vector<std::thread> workers;
        for (auto& slot : tables)
            workers.emplace_back([&slot, &inst, &cache] { slot = ehrhart_table(inst, 7, &cache); });
        for (auto& w : workers) w.join();
    }
    for (const auto& table : tables) {
        CHECK(table.closed == tables.front().closed);
        CHECK(table.interior == tables.front().interior);
    }
    CHECK(cache.size() == 16);
}
