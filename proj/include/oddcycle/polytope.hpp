#pragma once

#include "oddcycle/cycle.hpp"
#include "oddcycle/linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddcycle {

/// Which inequality family a row came from.  Tags survive dilation and
/// translation so the rank row can still be identified in 3Q - (1,...,1);
/// Translated marks rows of systems assembled from raw data.
enum class RowTag { LowerBound, UpperBound, Edge, Rank, Translated };

inline const char* row_tag_name(RowTag tag) {
    switch (tag) {
        case RowTag::LowerBound: return "lower-bound";
        case RowTag::UpperBound: return "upper-bound";
        case RowTag::Edge: return "edge";
        case RowTag::Rank: return "rank";
        case RowTag::Translated: return "translated";
    }
    return "?";
}

/// One integer inequality <normal, x> <= rhs.
struct HalfspaceRow {
    std::vector<long long> normal;
    long long rhs;
    RowTag tag;
};

/// Integer H-representation A x <= b of a bounded polytope.
struct HalfspaceSystem {
    int dim = 0;
    std::vector<HalfspaceRow> rows;
};

using VertexSet = std::vector<std::vector<long long>>;

enum class Containment { Closed, Strict };

namespace detail {
/// Boundedness guard: every coordinate must carry a +e_i and a -e_i row.
inline void require_boxed(const HalfspaceSystem& sys) {
    for (int i = 0; i < sys.dim; ++i) {
        bool has_upper = false, has_lower = false;
        for (const auto& row : sys.rows) {
            bool unit = true;
            for (int j = 0; j < sys.dim; ++j) {
                if (j == i) continue;
                if (row.normal[j] != 0) { unit = false; break; }
            }
            if (!unit) continue;
            if (row.normal[i] > 0) has_upper = true;
            if (row.normal[i] < 0) has_lower = true;
        }
        if (!has_upper || !has_lower)
            throw std::logic_error("halfspace system is missing box rows; polytope unbounded");
    }
}
}  // namespace detail

/// H-representation of the dilate n * Q_{C_{2s+1}} of the stable set
/// polytope: 0 <= x_i <= n, adjacent pairs x_i + x_{i+1} <= n including
/// the wrap-around pair, and the rank row x_1 + ... + x_{2s+1} <= s*n.
/// Row order is fixed (lower bounds, upper bounds, edges, rank) so that
/// downstream reports are deterministic.
inline HalfspaceSystem build_Q(const CycleInstance& inst, long long dilation) {
    if (dilation <= 0) throw std::invalid_argument("dilation factor must be positive");
    const int d = inst.n_vertices;
    HalfspaceSystem sys;
    sys.dim = d;
    sys.rows.reserve(3 * d + 1);
    for (int i = 0; i < d; ++i) {
        std::vector<long long> normal(d, 0);
        normal[i] = -1;
        sys.rows.push_back({std::move(normal), 0, RowTag::LowerBound});
    }
    for (int i = 0; i < d; ++i) {
        std::vector<long long> normal(d, 0);
        normal[i] = 1;
        sys.rows.push_back({std::move(normal), dilation, RowTag::UpperBound});
    }
    for (int i = 0; i < d; ++i) {  // i = d-1 is the wrap-around pair {2s+1, 1}
        std::vector<long long> normal(d, 0);
        normal[i] = 1;
        normal[(i + 1) % d] = 1;
        sys.rows.push_back({std::move(normal), dilation, RowTag::Edge});
    }
    sys.rows.push_back({std::vector<long long>(d, 1), inst.s * dilation, RowTag::Rank});
    detail::require_boxed(sys);
    return sys;
}

/// System of the translated polytope { x - t : x in P }: each row (a, b)
/// becomes (a, b - <a, t>).
inline HalfspaceSystem translate(const HalfspaceSystem& sys, const std::vector<long long>& t) {
    if (static_cast<int>(t.size()) != sys.dim)
        throw std::invalid_argument("translation vector dimension mismatch");
    HalfspaceSystem out;
    out.dim = sys.dim;
    out.rows = sys.rows;
    for (auto& row : out.rows) {
        long long shift = 0;
        for (int i = 0; i < sys.dim; ++i) shift += row.normal[i] * t[i];
        row.rhs -= shift;
    }
    return out;
}

inline bool contains(const HalfspaceSystem& sys, const std::vector<long long>& p, Containment mode) {
    if (static_cast<int>(p.size()) != sys.dim)
        throw std::invalid_argument("point dimension mismatch");
    for (const auto& row : sys.rows) {
        long long lhs = 0;
        for (int i = 0; i < sys.dim; ++i) lhs += row.normal[i] * p[i];
        if (mode == Containment::Closed ? lhs > row.rhs : lhs >= row.rhs) return false;
    }
    return true;
}

/// Vertices of the dilate n * Q: the stable-set indicator vectors scaled
/// by n, in enumeration order.
inline VertexSet stable_set_vertices(const CycleInstance& inst, long long dilation = 1) {
    VertexSet points;
    const auto sets = enumerate_stable_sets(inst);
    points.reserve(sets.size());
    for (const auto& w : sets) {
        std::vector<long long> v(inst.n_vertices, 0);
        for (int member : w.members) v[member - 1] = dilation;
        points.push_back(std::move(v));
    }
    return points;
}

inline VertexSet translate_points(const VertexSet& points, const std::vector<long long>& t) {
    VertexSet out = points;
    for (auto& p : out) {
        if (p.size() != t.size()) throw std::invalid_argument("point dimension mismatch");
        for (std::size_t i = 0; i < t.size(); ++i) p[i] -= t[i];
    }
    return out;
}

/// Affine dimension of a non-empty vertex set, by exact integer rank of
/// the difference vectors.
inline int dimension(const VertexSet& vertices) {
    if (vertices.empty()) throw std::invalid_argument("dimension of an empty vertex set");
    return affine_dimension(vertices);
}

struct FacetReport {
    std::size_t row_index;
    bool is_facet;
    std::size_t tight_vertex_count;
    int tight_affine_dim;  // -1 when no vertex is tight
};

/// Per-row facet decision for a polytope given by its full vertex list:
/// a row is a facet iff the vertices where it is tight span an affine
/// space of dimension dim(P) - 1.  Requires a full-dimensional polytope
/// whose vertices all satisfy the system.
inline std::vector<FacetReport> facet_report(const HalfspaceSystem& sys, const VertexSet& vertices) {
    if (vertices.empty()) throw std::invalid_argument("facet_report needs vertices");
    for (const auto& v : vertices)
        if (!contains(sys, v, Containment::Closed))
            throw std::invalid_argument("vertex violates the halfspace system");
    const int poly_dim = dimension(vertices);
    if (poly_dim != sys.dim)
        throw std::invalid_argument("facet_report requires a full-dimensional polytope");

    std::vector<FacetReport> reports;
    reports.reserve(sys.rows.size());
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        const auto& row = sys.rows[r];
        VertexSet tight;
        for (const auto& v : vertices) {
            long long lhs = 0;
            for (int i = 0; i < sys.dim; ++i) lhs += row.normal[i] * v[i];
            if (lhs == row.rhs) tight.push_back(v);
        }
        const int tight_dim = affine_dimension(tight);
        reports.push_back({r, tight_dim == poly_dim - 1, tight.size(), tight_dim});
    }
    return reports;
}

/// Evidence for one row of a reflexivity check: the row normal divided by
/// g = gcd(normal) is primitive, and the row passes iff rhs / g equals 1
/// exactly, i.e. rhs == g.  A non-integral quotient already disqualifies.
struct RowReduction {
    std::size_t row_index;
    long long normal_gcd;
    long long rhs;
    bool reduced_rhs_is_one;
};

struct ReflexivityReport {
    bool reflexive;
    std::vector<RowReduction> rows;
};

/// Decides whether a polytope with the origin in its interior is
/// reflexive, given a system consisting of its facet rows (filter with
/// facet_report first; redundant rows with large rhs would give false
/// negatives).  Reflexive iff every facet inequality reduces to
/// <primitive normal, x> <= 1, equivalently the dual polytope is a
/// lattice polytope.
inline ReflexivityReport reflexivity_check(const HalfspaceSystem& sys) {
    ReflexivityReport report{true, {}};
    report.rows.reserve(sys.rows.size());
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        const auto& row = sys.rows[r];
        if (row.rhs <= 0)
            throw std::domain_error("reflexivity undefined: origin is not interior to the system");
        long long g = 0;
        for (long long c : row.normal) g = std::gcd(g, std::llabs(c));
        if (g == 0) throw std::invalid_argument("zero normal vector");
        const bool one = (row.rhs == g);
        if (!one) report.reflexive = false;
        report.rows.push_back({r, g, row.rhs, one});
    }
    return report;
}

/// Restriction of a system to the rows a facet_report marked as facets.
inline HalfspaceSystem facet_rows(const HalfspaceSystem& sys, const std::vector<FacetReport>& reports) {
    HalfspaceSystem out;
    out.dim = sys.dim;
    for (const auto& rep : reports)
        if (rep.is_facet) out.rows.push_back(sys.rows[rep.row_index]);
    return out;
}

/// All lattice points of the system (Closed) or of its interior (Strict),
/// enumerated over the bounding box implied by the unit rows.  Refuses to
/// scan more than `budget` candidate points.
inline std::vector<std::vector<long long>> enumerate_lattice_points(
    const HalfspaceSystem& sys, Containment mode, unsigned long long budget = 100'000'000ull) {
    std::vector<long long> lo(sys.dim), hi(sys.dim);
    for (int i = 0; i < sys.dim; ++i) {
        std::optional<long long> upper, lower;
        for (const auto& row : sys.rows) {
            bool unit = true;
            for (int j = 0; j < sys.dim; ++j)
                if (j != i && row.normal[j] != 0) { unit = false; break; }
            if (!unit || row.normal[i] == 0) continue;
            if (row.normal[i] == 1) upper = upper ? std::min(*upper, row.rhs) : row.rhs;
            if (row.normal[i] == -1) lower = lower ? std::max(*lower, -row.rhs) : -row.rhs;
        }
        if (!upper || !lower) throw std::logic_error("missing box rows; cannot enumerate");
        lo[i] = *lower + (mode == Containment::Strict ? 1 : 0);
        hi[i] = *upper - (mode == Containment::Strict ? 1 : 0);
    }

    unsigned long long cells = 1;
    for (int i = 0; i < sys.dim; ++i) {
        if (hi[i] < lo[i]) return {};
        const unsigned long long width = static_cast<unsigned long long>(hi[i] - lo[i] + 1);
        if (cells > budget / width) throw std::domain_error("lattice enumeration budget exceeded");
        cells *= width;
    }

    std::vector<std::vector<long long>> found;
    std::vector<long long> p = lo;
    while (true) {
        if (contains(sys, p, mode)) found.push_back(p);
        int i = sys.dim - 1;
        while (i >= 0 && p[i] == hi[i]) { p[i] = lo[i]; --i; }
        if (i < 0) break;
        ++p[i];
    }
    return found;
}

/// Human-readable form of a row, e.g. "-x3 <= 0" or "x1+x2 <= 1".
inline std::string inequality_to_string(const HalfspaceRow& row) {
    std::string lhs;
    for (std::size_t i = 0; i < row.normal.size(); ++i) {
        const long long c = row.normal[i];
        if (c == 0) continue;
        if (!lhs.empty()) lhs += c > 0 ? "+" : "-";
        else if (c < 0) lhs += "-";
        const long long a = std::llabs(c);
        if (a != 1) lhs += std::to_string(a) + "*";
        lhs += "x" + std::to_string(i + 1);
    }
    if (lhs.empty()) lhs = "0";
    return lhs + " <= " + std::to_string(row.rhs);
}

}  // namespace oddcycle
