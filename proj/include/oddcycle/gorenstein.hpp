#pragma once

#include "oddcycle/counting.hpp"
#include "oddcycle/cycle.hpp"
#include "oddcycle/polytope.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace oddcycle {

/// Outcome of the geometric Gorenstein test, with enough evidence for
/// reports: the codegree c, the unique interior lattice point of cQ, and
/// the per-facet reductions of the recentered polytope cQ - p.
struct GorensteinResult {
    bool gorenstein;
    int codegree;
    std::vector<long long> interior_point;
    ReflexivityReport reflexivity;
    std::vector<FacetReport> facets;       // facet table of cQ - p
    HalfspaceSystem translated_system;     // cQ - p, all rows
};

/// Decides Gorensteinness of K[C_{2s+1}] geometrically: find the codegree
/// c, require the interior lattice point of cQ to be unique, recenter cQ
/// at that point and test the facet rows for reflexivity.  Aborts with a
/// diagnostic if the interior point at the codegree is not unique, since
/// the criterion as implemented would then have no canonical recentering.
inline GorensteinResult gorenstein_via_reflexivity(const CycleInstance& inst,
                                                   EhrhartCache* cache = nullptr) {
    GorensteinResult result;
    result.codegree = codegree(inst, cache);

    const BigInt interior_count =
        count_lattice_points(inst, result.codegree, CountMode::Interior, cache);
    if (interior_count != 1)
        throw std::domain_error("interior point at codegree " + std::to_string(result.codegree) +
                                " is not unique (count " + interior_count.str() +
                                "); reflexivity criterion inapplicable as implemented");

    const HalfspaceSystem dilated = build_Q(inst, result.codegree);
    const auto interior_points = enumerate_lattice_points(dilated, Containment::Strict);
    if (interior_points.size() != 1)
        throw std::logic_error("interior enumeration disagrees with interior count");
    result.interior_point = interior_points.front();

    result.translated_system = translate(dilated, result.interior_point);
    const VertexSet vertices = translate_points(
        stable_set_vertices(inst, result.codegree), result.interior_point);
    result.facets = facet_report(result.translated_system, vertices);
    result.reflexivity = reflexivity_check(facet_rows(result.translated_system, result.facets));
    result.gorenstein = result.reflexivity.reflexive;
    return result;
}

}  // namespace oddcycle
