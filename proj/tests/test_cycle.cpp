#include "oddcycle/cycle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace oddcycle;

namespace {

// Independent oracle: enumerate all 2^(2s+1) subsets and keep those that
// contain no edge.  Only feasible for small s, which is the point.
std::vector<std::vector<int>> bruteforce_stable_sets(int s) {
    const CycleInstance inst(s);
    const auto edge_list = edges(inst);
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << inst.n_vertices); ++mask) {
        bool stable = true;
        for (const auto& [a, b] : edge_list) {
            if ((mask >> (a - 1) & 1u) && (mask >> (b - 1) & 1u)) {
                stable = false;
                break;
            }
        }
        if (!stable) continue;
        std::vector<int> members;
        for (int v = 1; v <= inst.n_vertices; ++v)
            if (mask >> (v - 1) & 1u) members.push_back(v);
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace

TEST_CASE("edge list of the odd cycle", "[cycle]") {
    using P = std::pair<int, int>;
    CHECK(edges(CycleInstance(1)) == std::vector<P>{{1, 2}, {2, 3}, {3, 1}});
    CHECK(edges(CycleInstance(2)) == std::vector<P>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    const auto e7 = edges(CycleInstance(3));
    CHECK(e7.size() == 7);
    CHECK(e7.back() == P{7, 1});
}

TEST_CASE("instance validation and derived constants", "[cycle]") {
    CHECK_THROWS_AS(CycleInstance(0), std::invalid_argument);
    CHECK_THROWS_AS(CycleInstance(-2), std::invalid_argument);
    const CycleInstance inst(4);
    CHECK(inst.n_vertices == 9);
    CHECK(inst.ring_dim == 10);
}

TEST_CASE("stable set enumeration matches the brute-force oracle", "[cycle]") {
    for (int s = 1; s <= 4; ++s) {
        const auto enumerated = enumerate_stable_sets(CycleInstance(s));
        std::set<std::vector<int>> got;
        for (const auto& w : enumerated) got.insert(w.members);
        REQUIRE(got.size() == enumerated.size());  // no duplicates

        const auto expected_sets = bruteforce_stable_sets(s);
        std::set<std::vector<int>> expected(expected_sets.begin(), expected_sets.end());
        CHECK(got == expected);
    }
}

TEST_CASE("enumeration order is lexicographic with the empty set first", "[cycle]") {
    const auto sets = enumerate_stable_sets(CycleInstance(3));
    REQUIRE_FALSE(sets.empty());
    CHECK(sets.front().members.empty());
    for (std::size_t i = 1; i < sets.size(); ++i)
        CHECK(std::lexicographical_compare(sets[i - 1].members.begin(), sets[i - 1].members.end(),
                                           sets[i].members.begin(), sets[i].members.end()));
}

TEST_CASE("stable set counts are Lucas numbers", "[cycle]") {
    CHECK(enumerate_stable_sets(CycleInstance(1)).size() == 4);
    CHECK(enumerate_stable_sets(CycleInstance(2)).size() == 11);
    CHECK(enumerate_stable_sets(CycleInstance(3)).size() == 29);
    CHECK(lucas_number(3) == 4);
    CHECK(lucas_number(5) == 11);
    CHECK(lucas_number(7) == 29);
    CHECK(lucas_number(9) == 76);
    CHECK(lucas_number(11) == 199);
    for (int s = 1; s <= 8; ++s)
        CHECK(enumerate_stable_sets(CycleInstance(s)).size() ==
              static_cast<std::size_t>(lucas_number(2 * s + 1)));
}

TEST_CASE("every enumerated set is stable and no larger than s", "[cycle]") {
    for (int s = 1; s <= 6; ++s) {
        const CycleInstance inst(s);
        std::size_t max_size = 0;
        for (const auto& w : enumerate_stable_sets(inst)) {
            CHECK(is_stable(inst, w.members));
            max_size = std::max(max_size, w.members.size());
        }
        CHECK(max_size == static_cast<std::size_t>(s));
    }
}

TEST_CASE("singletons and the empty set are always stable", "[cycle]") {
    const CycleInstance inst(3);
    std::set<std::vector<int>> got;
    for (const auto& w : enumerate_stable_sets(inst)) got.insert(w.members);
    CHECK(got.count({}) == 1);
    for (int v = 1; v <= inst.n_vertices; ++v) CHECK(got.count({v}) == 1);
}

TEST_CASE("generator exponent vectors", "[cycle]") {
    const auto vec3 = generator_exponents(CycleInstance(1));
    // enumeration order: {}, {1}, {2}, {3}
    REQUIRE(vec3.size() == 4);
    CHECK(vec3[0] == std::vector<long long>{0, 0, 0, 1});
    CHECK(vec3[2] == std::vector<long long>{0, 1, 0, 1});

    const auto vec5 = generator_exponents(CycleInstance(2));
    const auto sets5 = enumerate_stable_sets(CycleInstance(2));
    REQUIRE(vec5.size() == sets5.size());
    bool found = false;
    for (std::size_t i = 0; i < sets5.size(); ++i) {
        if (sets5[i].members == std::vector<int>{1, 3}) {
            CHECK(vec5[i] == std::vector<long long>{1, 0, 1, 0, 0, 1});
            found = true;
        }
    }
    CHECK(found);

    std::set<std::vector<long long>> distinct(vec5.begin(), vec5.end());
    CHECK(distinct.size() == vec5.size());
    for (const auto& v : vec5) CHECK(v.back() == 1);
}
