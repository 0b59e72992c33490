#pragma once

#include "oddcycle/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddcycle {

enum class VerdictKind { OSequence, Flawless, Symmetric, ConjectureShape };

inline const char* verdict_kind_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::OSequence: return "o_sequence";
        case VerdictKind::Flawless: return "flawless";
        case VerdictKind::Symmetric: return "symmetric";
        case VerdictKind::ConjectureShape: return "conjecture_shape";
    }
    return "?";
}

struct Witness {
    std::size_t index;
    std::string explanation;
};

/// Result of one sequence check; holds exactly when no witness of a
/// violated condition was found.
struct Verdict {
    VerdictKind kind;
    bool holds;
    std::vector<Witness> witnesses;
};

namespace detail {
inline Verdict make_verdict(VerdictKind kind, std::vector<Witness> witnesses) {
    return Verdict{kind, witnesses.empty(), std::move(witnesses)};
}

/// Largest a with C(a, k) <= value, for value >= 1, k >= 1.  Exponential
/// then binary search; the greedy Macaulay representation needs this to
/// stay fast even for seven-digit coefficients.
inline long long greedy_binomial_top(const BigInt& value, long long k) {
    long long lo = k;  // C(k, k) = 1 <= value
    long long hi = k + 1;
    while (binomial(hi, k) <= value) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        const long long mid = lo + (hi - lo) / 2;
        if (binomial(mid, k) <= value) lo = mid;
        else hi = mid;
    }
    return lo;
}
}  // namespace detail

/// Macaulay upper bound h^<i>: write h = C(a_i, i) + C(a_{i-1}, i-1) + ...
/// greedily from the top (the representation is unique, and the a_k are
/// strictly decreasing), then bump every binomial to C(a_k + 1, k + 1).
inline BigInt macaulay_bound(const BigInt& h, long long i) {
    if (h < 0) throw std::invalid_argument("macaulay_bound needs a non-negative value");
    if (i < 1) throw std::invalid_argument("macaulay_bound needs i >= 1");
    if (h == 0) return 0;
    BigInt remainder = h;
    BigInt bound = 0;
    long long k = i;
    long long previous_top = -1;
    while (remainder > 0) {
        if (k < 1) throw std::logic_error("Macaulay representation did not terminate");
        const long long a = detail::greedy_binomial_top(remainder, k);
        if (previous_top >= 0 && a >= previous_top)
            throw std::logic_error("Macaulay representation lost strict monotonicity");
        previous_top = a;
        remainder -= binomial(a, k);
        bound += binomial(a + 1, k + 1);
        --k;
    }
    return bound;
}

/// O-sequence test by Macaulay's numerical characterization: once an
/// entry is zero everything after it must be zero, and otherwise
/// h_{i+1} <= h_i^<i>.  Input must start with h_0 = 1.
inline Verdict macaulay_check(const std::vector<BigInt>& h) {
    if (h.empty()) throw std::invalid_argument("macaulay_check: empty sequence");
    if (h[0] != 1) throw std::invalid_argument("macaulay_check: h_0 must equal 1");
    std::vector<Witness> witnesses;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        if (h[i] < 0 || h[i + 1] < 0)
            throw std::invalid_argument("macaulay_check: negative entry");
        if (i == 0) continue;  // h_1 is unconstrained beyond non-negativity
        if (h[i] == 0) {
            if (h[i + 1] != 0) {
                witnesses.push_back({i + 1, "h_" + std::to_string(i + 1) + " = " + h[i + 1].str() +
                                                " follows the zero entry h_" + std::to_string(i)});
            }
            continue;
        }
        const BigInt bound = macaulay_bound(h[i], static_cast<long long>(i));
        if (h[i + 1] > bound) {
            witnesses.push_back({i + 1, "h_" + std::to_string(i + 1) + " = " + h[i + 1].str() +
                                            " exceeds the Macaulay bound " + bound.str() +
                                            " from h_" + std::to_string(i) + " = " + h[i].str()});
        }
    }
    return detail::make_verdict(VerdictKind::OSequence, std::move(witnesses));
}

/// Flawlessness: (i) h_i <= h_{t-i} for i <= t/2 and (ii) the first half
/// is non-decreasing.  Reports the first failing index and condition.
inline Verdict flawless_check(const std::vector<BigInt>& h) {
    if (h.empty()) throw std::invalid_argument("flawless_check: empty sequence");
    if (h.back() == 0) throw std::invalid_argument("flawless_check: trailing entry must be nonzero");
    const std::size_t t = h.size() - 1;
    std::vector<Witness> witnesses;
    for (std::size_t i = 0; i <= t / 2 && witnesses.empty(); ++i) {
        if (h[i] > h[t - i]) {
            witnesses.push_back({i, "condition (i): h_" + std::to_string(i) + " = " + h[i].str() +
                                        " > h_" + std::to_string(t - i) + " = " + h[t - i].str()});
            break;
        }
        if (i >= 1 && h[i - 1] > h[i]) {
            witnesses.push_back({i, "condition (ii): h_" + std::to_string(i - 1) + " = " +
                                        h[i - 1].str() + " > h_" + std::to_string(i) + " = " +
                                        h[i].str()});
        }
    }
    return detail::make_verdict(VerdictKind::Flawless, std::move(witnesses));
}

/// Symmetry h_i = h_{t-i}, the Gorenstein criterion for Cohen-Macaulay
/// domains.
inline Verdict symmetry_check(const std::vector<BigInt>& h) {
    const std::size_t t = h.empty() ? 0 : h.size() - 1;
    std::vector<Witness> witnesses;
    for (std::size_t i = 0; !h.empty() && i <= t / 2; ++i) {
        if (h[i] != h[t - i])
            witnesses.push_back({i, "h_" + std::to_string(i) + " = " + h[i].str() + " != h_" +
                                        std::to_string(t - i) + " = " + h[t - i].str()});
    }
    return detail::make_verdict(VerdictKind::Symmetric, std::move(witnesses));
}

/// The conjectured shape for the h-vector of K[C_{2s+1}]: length 2s,
/// h_0 = 1, (i) non-decreasing first half h_0 <= ... <= h_{s-1},
/// (ii) h_{2s-1} = h_0 and h_{2s-2} = h_1, (iii) h_{2s-1-i} = h_i + (-1)^i
/// for 2 <= i <= s-1 (vacuous for s <= 2).  Malformed lengths are shape
/// failures, not errors.
inline Verdict conjecture_check(const std::vector<BigInt>& h, int s) {
    if (s < 1) throw std::invalid_argument("conjecture_check: s must be positive");
    std::vector<Witness> witnesses;
    const std::size_t expected = static_cast<std::size_t>(2 * s);
    if (h.size() != expected) {
        std::string got = "(";
        for (std::size_t i = 0; i < h.size(); ++i) got += (i ? ", " : "") + h[i].str();
        got += ")";
        witnesses.push_back({0, "length " + std::to_string(h.size()) + " != 2s = " +
                                    std::to_string(expected) + " for " + got});
        return detail::make_verdict(VerdictKind::ConjectureShape, std::move(witnesses));
    }
    if (h[0] != 1) witnesses.push_back({0, "h_0 = " + h[0].str() + " != 1"});
    for (int i = 1; i <= s - 1; ++i) {
        if (h[i - 1] > h[i])
            witnesses.push_back({static_cast<std::size_t>(i),
                                 "condition (i): h_" + std::to_string(i - 1) + " = " +
                                     h[i - 1].str() + " > h_" + std::to_string(i) + " = " +
                                     h[i].str()});
    }
    if (h[expected - 1] != h[0])
        witnesses.push_back({expected - 1, "condition (ii): h_" + std::to_string(expected - 1) +
                                               " = " + h[expected - 1].str() + " != h_0 = " +
                                               h[0].str()});
    if (h[expected - 2] != h[1])
        witnesses.push_back({expected - 2, "condition (ii): h_" + std::to_string(expected - 2) +
                                               " = " + h[expected - 2].str() + " != h_1 = " +
                                               h[1].str()});
    for (int i = 2; i <= s - 1; ++i) {
        const BigInt expected_value = h[i] + (i % 2 == 0 ? 1 : -1);
        const std::size_t mirror = expected - 1 - static_cast<std::size_t>(i);
        if (h[mirror] != expected_value)
            witnesses.push_back({mirror, "condition (iii): h_" + std::to_string(mirror) + " = " +
                                             h[mirror].str() + " != h_" + std::to_string(i) +
                                             (i % 2 == 0 ? " + 1 = " : " - 1 = ") +
                                             expected_value.str()});
    }
    return detail::make_verdict(VerdictKind::ConjectureShape, std::move(witnesses));
}

namespace detail {
/// Monomials of a given degree over r variables, as exponent vectors in
/// lexicographic order.
inline std::vector<std::vector<int>> monomials_of_degree(int r, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> expo(r, 0);
    const auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == r - 1) {
            expo[var] = remaining;
            out.push_back(expo);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            expo[var] = e;
            self(self, var + 1, remaining - e);
        }
    };
    if (r == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

inline bool shadow_contained(const std::vector<int>& mono,
                             const std::vector<std::vector<int>>& level_below) {
    for (std::size_t v = 0; v < mono.size(); ++v) {
        if (mono[v] == 0) continue;
        std::vector<int> divisor = mono;
        --divisor[v];
        if (std::find(level_below.begin(), level_below.end(), divisor) == level_below.end())
            return false;
    }
    return true;
}

inline bool extend_order_ideal(const std::vector<BigInt>& h, std::size_t level,
                               const std::vector<std::vector<int>>& chosen_below, int r) {
    if (level >= h.size()) return true;
    const std::size_t want = static_cast<std::size_t>(h[level].convert_to<long long>());
    std::vector<std::vector<int>> allowed;
    for (auto& mono : monomials_of_degree(r, static_cast<int>(level)))
        if (shadow_contained(mono, chosen_below)) allowed.push_back(std::move(mono));
    if (allowed.size() < want) return false;
    if (want == 0) {
        // all later levels must be zero as well; an empty level kills every multiple
        for (std::size_t j = level; j < h.size(); ++j)
            if (h[j] != 0) return false;
        return true;
    }
    std::vector<std::size_t> pick(want);
    const auto rec = [&](auto&& self, std::size_t slot, std::size_t from) -> bool {
        if (slot == want) {
            std::vector<std::vector<int>> chosen;
            chosen.reserve(want);
            for (std::size_t k : pick) chosen.push_back(allowed[k]);
            return extend_order_ideal(h, level + 1, chosen, r);
        }
        for (std::size_t k = from; k + (want - slot) <= allowed.size(); ++k) {
            pick[slot] = k;
            if (self(self, slot + 1, k + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}
}  // namespace detail

/// Exhaustive cross-validation oracle for macaulay_check on small inputs:
/// decides whether some order ideal of monomials has exactly h_j elements
/// in each degree j, by searching level subsets whose divisors all lie in
/// the previous level.  Supported range: h_1 <= 3 variables, degree <= 5.
inline bool order_ideal_exists(const std::vector<BigInt>& h) {
    if (h.empty()) throw std::invalid_argument("order_ideal_exists: empty sequence");
    if (h[0] != 1) return false;  // every non-empty order ideal contains 1
    for (const auto& v : h)
        if (v < 0) throw std::invalid_argument("order_ideal_exists: negative entry");
    if (h.size() == 1) return true;
    if (h[1] > 3 || h.size() > 6)
        throw std::domain_error("order_ideal_exists supports h_1 <= 3 and degree <= 5");
    const int r = static_cast<int>(h[1].convert_to<long long>());
    // the degree-1 monomials of an order ideal are exactly the variables it uses
    std::vector<std::vector<int>> level_one = detail::monomials_of_degree(r, 1);
    if (h.size() == 2) return true;
    return detail::extend_order_ideal(h, 2, level_one, r);
}

}  // namespace oddcycle
