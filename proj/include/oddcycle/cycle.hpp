#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace oddcycle {

/// The odd cycle C_{2s+1} on vertices 1..2s+1, together with the two
/// derived constants used throughout: the vertex count and the Krull
/// dimension 2s+2 of the associated toric ring (one more than the
/// dimension of the stable set polytope).
struct CycleInstance {
    int s;
    int n_vertices;  // 2s+1
    int ring_dim;    // 2s+2

    explicit CycleInstance(int s_) : s(s_), n_vertices(2 * s_ + 1), ring_dim(2 * s_ + 2) {
        if (s_ < 1) throw std::invalid_argument("cycle parameter s must be >= 1");
    }
};

/// A stable (independent) set of the cycle, kept as a sorted vertex list.
struct StableSet {
    std::vector<int> members;
};

/// Edge list of C_{2s+1}: {1,2}, {2,3}, ..., {2s,2s+1}, {2s+1,1}.
inline std::vector<std::pair<int, int>> edges(const CycleInstance& inst) {
    std::vector<std::pair<int, int>> result;
    result.reserve(inst.n_vertices);
    for (int i = 1; i <= 2 * inst.s; ++i) result.emplace_back(i, i + 1);
    result.emplace_back(inst.n_vertices, 1);
    return result;
}

/// True iff the sorted vertex list contains no edge of the cycle.
inline bool is_stable(const CycleInstance& inst, const std::vector<int>& members) {
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
        if (members[i + 1] == members[i] + 1) return false;
    if (members.size() >= 2 && members.front() == 1 && members.back() == inst.n_vertices)
        return false;
    return true;
}

namespace detail {
inline void extend_stable(const CycleInstance& inst, std::vector<int>& prefix,
                          int next, std::vector<StableSet>& out) {
    out.push_back(StableSet{prefix});
    const bool has_vertex_one = !prefix.empty() && prefix.front() == 1;
    for (int v = next; v <= inst.n_vertices; ++v) {
        if (v == inst.n_vertices && has_vertex_one) continue;  // wrap-around edge {2s+1, 1}
        prefix.push_back(v);
        extend_stable(inst, prefix, v + 2, out);
        prefix.pop_back();
    }
}
}  // namespace detail

/// All stable sets of C_{2s+1}, each exactly once, in lexicographic order
/// of the sorted member lists with the empty set first.  Backtracks over
/// vertices (next candidate is previous + 2) so nothing near 2^(2s+1)
/// is ever materialized; the count is the Lucas number L_{2s+1}.
inline std::vector<StableSet> enumerate_stable_sets(const CycleInstance& inst) {
    std::vector<StableSet> out;
    std::vector<int> prefix;
    detail::extend_stable(inst, prefix, 1, out);
    return out;
}

/// Exponent vectors of the toric-ring generators: for each stable set W
/// the 0/1 vector (indicator of W, 1) of length 2s+2.  Order matches
/// enumerate_stable_sets.
inline std::vector<std::vector<long long>> generator_exponents(const CycleInstance& inst) {
    std::vector<std::vector<long long>> out;
    const auto sets = enumerate_stable_sets(inst);
    out.reserve(sets.size());
    for (const auto& w : sets) {
        std::vector<long long> v(inst.ring_dim, 0);
        for (int member : w.members) v[member - 1] = 1;
        v[inst.ring_dim - 1] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

/// Lucas numbers: L_1 = 1, L_2 = 3, L_k = L_{k-1} + L_{k-2}.  L_{2s+1}
/// counts the stable sets of C_{2s+1}.
inline long long lucas_number(int k) {
    if (k < 1 || k > 90) throw std::invalid_argument("lucas_number supports 1 <= k <= 90");
    long long a = 1, b = 3;  // L_1, L_2
    if (k == 1) return a;
    for (int i = 2; i < k; ++i) {
        long long next = a + b;
        a = b;
        b = next;
    }
    return b;
}

}  // namespace oddcycle
