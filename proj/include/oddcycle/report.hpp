#pragma once

#include "oddcycle/counting.hpp"
#include "oddcycle/cycle.hpp"
#include "oddcycle/gorenstein.hpp"
#include "oddcycle/hilbert.hpp"
#include "oddcycle/polytope.hpp"
#include "oddcycle/sequences.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace oddcycle {

/// Published h-vectors this tool compares its own results against.  A
/// mismatch is reported as a WARN with both values printed, never
/// silently normalized: the computed value wins, the stated one is
/// evidence of a discrepancy.
inline std::optional<std::vector<BigInt>> published_h_vector(int s) {
    switch (s) {
        case 1: return std::vector<BigInt>{1, 1};
        case 2: return std::vector<BigInt>{1, 6, 6, 1};
        case 3: return std::vector<BigInt>{1, 21, 84, 85, 21, 1};
        case 4: return std::vector<BigInt>{1, 66, 744, 2305, 2304, 745, 66, 1};
        case 5:
            return std::vector<BigInt>{1,     187,   5049, 37247, 96448,
                                       96449, 37246, 5050, 187,   1};
        default: return std::nullopt;
    }
}

struct ReportOptions {
    EhrhartCache* cache = nullptr;
    bool oracle = false;  // cross-check every feasible count against brute force
    unsigned long long bruteforce_budget = kDefaultBruteforceBudget;
    bool timings = false;  // include timing metadata in serialized output
};

struct RankRowSummary {
    std::string inequality;
    bool is_facet = false;
    std::size_t tight_vertex_count = 0;
    int tight_affine_dim = -1;
};

/// Everything the pipeline established for one value of s.
struct VerdictReport {
    int s = 0;
    bool extrapolation = false;  // beyond the published range s <= 5
    int ring_dim = 0;
    long long table_limit = 0;
    std::vector<BigInt> h;
    std::vector<BigInt> hilbert;
    std::vector<BigInt> interior;
    int codegree = 0;
    std::vector<long long> codegree_interior_point;
    RankRowSummary rank_row;
    bool reflexive = false;
    long long rank_row_reduced_gcd = 0;
    long long rank_row_translated_rhs = 0;
    Verdict o_sequence{VerdictKind::OSequence, false, {}};
    Verdict flawless{VerdictKind::Flawless, false, {}};
    Verdict symmetric{VerdictKind::Symmetric, false, {}};
    Verdict conjecture{VerdictKind::ConjectureShape, false, {}};
    bool gorenstein_via_reflexivity = false;
    std::size_t oracle_pairs_checked = 0;
    bool oracle_requested = false;
    bool consistent = true;
    std::vector<std::string> inconsistencies;
    std::vector<std::string> warnings;
    double elapsed_ms = 0.0;
};

namespace detail {
inline std::string sequence_to_string(const std::vector<BigInt>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].str();
    return out + ")";
}

inline std::string point_to_string(const std::vector<long long>& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out + ")";
}
}  // namespace detail

/// Runs the full pipeline for one s: Ehrhart table (cached), h-vector,
/// every sequence verdict, the geometric Gorenstein test, and the
/// internal consistency checks (round trip, reciprocity, h_1 identity,
/// agreement of the two Gorenstein criteria).  Inconsistencies mark the
/// report; callers translate them into exit code 2.
inline VerdictReport compute_report(int s, const ReportOptions& options = {}) {
    const auto started = std::chrono::steady_clock::now();
    const CycleInstance inst(s);
    VerdictReport report;
    report.s = s;
    report.extrapolation = s > 5;
    report.ring_dim = inst.ring_dim;
    report.table_limit = 2 * s + 1;

    const EhrhartTable table = ehrhart_table(inst, report.table_limit, options.cache);
    report.hilbert = table.closed;
    report.interior = table.interior;

    report.oracle_requested = options.oracle;
    if (options.oracle) {
        for (long long n = 0; n <= report.table_limit; ++n) {
            for (const CountMode mode : {CountMode::Closed, CountMode::Interior}) {
                BigInt oracle_count;
                try {
                    oracle_count = count_bruteforce(inst, n, mode, options.bruteforce_budget);
                } catch (const BudgetExceeded&) {
                    continue;  // cross-check only where feasible
                }
                ++report.oracle_pairs_checked;
                const BigInt& dp_count =
                    mode == CountMode::Closed ? table.closed[n] : table.interior[n];
                if (oracle_count != dp_count)
                    report.inconsistencies.push_back(
                        "engine disagreement at n=" + std::to_string(n) + " (" +
                        count_mode_name(mode) + "): dp " + dp_count.str() + " vs brute force " +
                        oracle_count.str());
            }
        }
    }

    const HVector h = h_vector(table);  // throws on negative entries / nonzero tail
    report.h = h.entries;

    const auto reconstructed = reconstruct_hilbert(h, report.table_limit);
    for (long long n = 0; n <= report.table_limit; ++n) {
        if (reconstructed[n] != table.closed[n]) {
            report.inconsistencies.push_back("round-trip failure at n=" + std::to_string(n) +
                                             ": reconstructed " + reconstructed[n].str() +
                                             " vs counted " + table.closed[n].str());
        }
        if (interior_count_from_hvector(h, n) != table.interior[n]) {
            report.inconsistencies.push_back(
                "reciprocity failure at n=" + std::to_string(n) + ": predicted " +
                interior_count_from_hvector(h, n).str() + " vs counted " +
                table.interior[n].str());
        }
    }

    const BigInt h1 = h.entries.size() > 1 ? h.entries[1] : BigInt(0);
    if (h1 != table.closed[1] - inst.ring_dim)
        report.inconsistencies.push_back("h_1 identity failure: h_1 = " + h1.str() +
                                         " but H(1) - d = " +
                                         BigInt(table.closed[1] - inst.ring_dim).str());

    report.o_sequence = macaulay_check(h.entries);
    report.flawless = flawless_check(h.entries);
    report.symmetric = symmetry_check(h.entries);
    report.conjecture = conjecture_check(h.entries, s);

    const GorensteinResult gor = gorenstein_via_reflexivity(inst, options.cache);
    report.gorenstein_via_reflexivity = gor.gorenstein;
    report.codegree = gor.codegree;
    report.codegree_interior_point = gor.interior_point;
    report.reflexive = gor.reflexivity.reflexive;
    for (const auto& reduction : gor.reflexivity.rows) {
        // locate the rank row inside the facet-filtered system
        std::size_t facet_index = 0, row_in_full = 0;
        for (const auto& facet : gor.facets) {
            if (!facet.is_facet) continue;
            if (facet_index == reduction.row_index) { row_in_full = facet.row_index; break; }
            ++facet_index;
        }
        if (gor.translated_system.rows[row_in_full].tag == RowTag::Rank) {
            report.rank_row_reduced_gcd = reduction.normal_gcd;
            report.rank_row_translated_rhs = reduction.rhs;
        }
    }

    // Rank-row facet summary for Q itself (dilation 1).
    {
        const HalfspaceSystem q = build_Q(inst, 1);
        const VertexSet vertices = stable_set_vertices(inst, 1);
        const int poly_dim = dimension(vertices);
        const auto& rank_row = q.rows.back();
        VertexSet tight;
        for (const auto& v : vertices) {
            long long lhs = 0;
            for (int i = 0; i < q.dim; ++i) lhs += rank_row.normal[i] * v[i];
            if (lhs == rank_row.rhs) tight.push_back(v);
        }
        report.rank_row.inequality = inequality_to_string(rank_row);
        report.rank_row.tight_vertex_count = tight.size();
        report.rank_row.tight_affine_dim = affine_dimension(tight);
        report.rank_row.is_facet = report.rank_row.tight_affine_dim == poly_dim - 1;
    }

    if (report.symmetric.holds != report.gorenstein_via_reflexivity)
        report.inconsistencies.push_back(
            std::string("criterion disagreement: h-vector symmetry says ") +
            (report.symmetric.holds ? "Gorenstein" : "not Gorenstein") +
            " but the reflexivity test says " +
            (report.gorenstein_via_reflexivity ? "Gorenstein" : "not Gorenstein"));

    if (const auto stated = published_h_vector(s)) {
        if (*stated != report.h)
            report.warnings.push_back("computed h-vector " + detail::sequence_to_string(report.h) +
                                      " differs from the published value " +
                                      detail::sequence_to_string(*stated));
    }

    report.consistent = report.inconsistencies.empty();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

// ---------------------------------------------------------------------------
// Serialization.  All integers become decimal strings: several counts exceed
// 2^53 and would be mangled by common JSON consumers.
// ---------------------------------------------------------------------------

namespace detail {
inline nlohmann::ordered_json witnesses_to_json(const Verdict& verdict) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& w : verdict.witnesses) {
        nlohmann::ordered_json item;
        item["index"] = std::to_string(w.index);
        item["explanation"] = w.explanation;
        arr.push_back(item);
    }
    return arr;
}

inline nlohmann::ordered_json sequence_to_json(const std::vector<BigInt>& values) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

inline std::string reduced_rhs_string(long long rhs, long long gcd) {
    if (gcd != 0 && rhs % gcd == 0) return std::to_string(rhs / gcd);
    return std::to_string(rhs) + "/" + std::to_string(gcd);
}
}  // namespace detail

inline nlohmann::ordered_json report_to_json(const VerdictReport& report, bool with_timing) {
    nlohmann::ordered_json j;
    j["s"] = std::to_string(report.s);
    j["extrapolation"] = report.extrapolation;
    j["ring_dimension"] = std::to_string(report.ring_dim);
    j["table_limit"] = std::to_string(report.table_limit);
    j["h_vector"] = detail::sequence_to_json(report.h);
    j["hilbert_function"] = detail::sequence_to_json(report.hilbert);
    j["interior_counts"] = detail::sequence_to_json(report.interior);
    j["codegree"] = std::to_string(report.codegree);
    {
        nlohmann::ordered_json point = nlohmann::ordered_json::array();
        for (long long c : report.codegree_interior_point) point.push_back(std::to_string(c));
        j["codegree_interior_point"] = point;
    }
    {
        nlohmann::ordered_json rank;
        rank["inequality"] = report.rank_row.inequality;
        rank["is_facet"] = report.rank_row.is_facet;
        rank["tight_vertex_count"] = std::to_string(report.rank_row.tight_vertex_count);
        rank["tight_affine_dim"] = std::to_string(report.rank_row.tight_affine_dim);
        j["rank_row"] = rank;
    }
    {
        nlohmann::ordered_json reflexivity;
        reflexivity["reflexive"] = report.reflexive;
        reflexivity["rank_row_reduced_rhs"] = detail::reduced_rhs_string(
            report.rank_row_translated_rhs, report.rank_row_reduced_gcd);
        j["reflexivity"] = reflexivity;
    }
    {
        nlohmann::ordered_json verdicts;
        verdicts["o_sequence"] = report.o_sequence.holds;
        verdicts["flawless"] = report.flawless.holds;
        verdicts["symmetric"] = report.symmetric.holds;
        verdicts["conjecture_shape"] = report.conjecture.holds;
        verdicts["gorenstein_via_reflexivity"] = report.gorenstein_via_reflexivity;
        j["verdicts"] = verdicts;
    }
    {
        nlohmann::ordered_json witnesses;
        witnesses["o_sequence"] = detail::witnesses_to_json(report.o_sequence);
        witnesses["flawless"] = detail::witnesses_to_json(report.flawless);
        witnesses["symmetric"] = detail::witnesses_to_json(report.symmetric);
        witnesses["conjecture_shape"] = detail::witnesses_to_json(report.conjecture);
        j["witnesses"] = witnesses;
    }
    {
        nlohmann::ordered_json oracle;
        oracle["requested"] = report.oracle_requested;
        oracle["pairs_checked"] = std::to_string(report.oracle_pairs_checked);
        j["oracle"] = oracle;
    }
    j["consistent"] = report.consistent;
    j["inconsistencies"] = report.inconsistencies;
    j["warnings"] = report.warnings;
    if (with_timing) j["timing_ms"] = std::to_string(static_cast<long long>(report.elapsed_ms));
    return j;
}

inline std::string report_to_json_string(const VerdictReport& report, bool with_timing = false) {
    return report_to_json(report, with_timing).dump(2) + "\n";
}

inline std::string csv_header() {
    return "s,extrapolation,h_vector,o_sequence,flawless,symmetric,conjecture_shape,"
           "gorenstein_via_reflexivity,consistent,codegree,interior_n1,interior_n2,interior_n3,"
           "rank_row_is_facet,warnings";
}

inline std::string report_to_csv_row(const VerdictReport& report) {
    const auto yn = [](bool b) { return b ? "true" : "false"; };
    std::string h_joined;
    for (std::size_t i = 0; i < report.h.size(); ++i) h_joined += (i ? " " : "") + report.h[i].str();
    std::string warn_joined;
    for (std::size_t i = 0; i < report.warnings.size(); ++i)
        warn_joined += (i ? " | " : "") + report.warnings[i];
    std::string row;
    row += std::to_string(report.s);
    row += std::string(",") + yn(report.extrapolation);
    row += ",\"" + h_joined + "\"";
    row += std::string(",") + yn(report.o_sequence.holds);
    row += std::string(",") + yn(report.flawless.holds);
    row += std::string(",") + yn(report.symmetric.holds);
    row += std::string(",") + yn(report.conjecture.holds);
    row += std::string(",") + yn(report.gorenstein_via_reflexivity);
    row += std::string(",") + yn(report.consistent);
    row += "," + std::to_string(report.codegree);
    row += "," + report.interior[1].str();
    row += "," + report.interior[2].str();
    row += "," + report.interior[3].str();
    row += std::string(",") + yn(report.rank_row.is_facet);
    row += ",\"" + warn_joined + "\"";
    return row;
}

inline std::string report_to_markdown(const VerdictReport& report, bool with_timing = false) {
    const auto verdict_cell = [](const Verdict& v) {
        if (v.holds) return std::string("holds");
        std::string out = "fails";
        if (!v.witnesses.empty()) out += ": " + v.witnesses.front().explanation;
        return out;
    };
    std::string md;
    md += "## C_" + std::to_string(2 * report.s + 1) + " (s = " + std::to_string(report.s) + ")";
    if (report.extrapolation) md += " [extrapolation]";
    md += "\n\n";
    md += "| field | value |\n|---|---|\n";
    md += "| h-vector | " + detail::sequence_to_string(report.h) + " |\n";
    md += "| Hilbert function H(0.." + std::to_string(report.table_limit) + ") | " +
          detail::sequence_to_string(report.hilbert) + " |\n";
    md += "| interior counts I(0.." + std::to_string(report.table_limit) + ") | " +
          detail::sequence_to_string(report.interior) + " |\n";
    md += "| codegree | " + std::to_string(report.codegree) + " |\n";
    md += "| interior point at codegree | " +
          detail::point_to_string(report.codegree_interior_point) + " |\n";
    md += "| rank row " + report.rank_row.inequality + " | " +
          std::string(report.rank_row.is_facet ? "facet" : "not a facet") + " (tight vertices " +
          std::to_string(report.rank_row.tight_vertex_count) + ", affine dim " +
          std::to_string(report.rank_row.tight_affine_dim) + ") |\n";
    md += "| reflexive at codegree | " + std::string(report.reflexive ? "yes" : "no") +
          " (rank row reduced rhs " +
          detail::reduced_rhs_string(report.rank_row_translated_rhs, report.rank_row_reduced_gcd) +
          ") |\n";
    md += "| o-sequence | " + verdict_cell(report.o_sequence) + " |\n";
    md += "| flawless | " + verdict_cell(report.flawless) + " |\n";
    md += "| symmetric (Gorenstein) | " + verdict_cell(report.symmetric) + " |\n";
    md += "| conjectured shape | " + verdict_cell(report.conjecture) + " |\n";
    md += "| Gorenstein via reflexivity | " +
          std::string(report.gorenstein_via_reflexivity ? "yes" : "no") + " |\n";
    if (report.oracle_requested)
        md += "| brute-force cross-checks | " + std::to_string(report.oracle_pairs_checked) +
              " counts verified |\n";
    md += "| consistent | " + std::string(report.consistent ? "yes" : "NO") + " |\n";
    if (with_timing)
        md += "| elapsed | " + std::to_string(static_cast<long long>(report.elapsed_ms)) + " ms |\n";
    for (const auto& warning : report.warnings) md += "\n> WARN: " + warning + "\n";
    for (const auto& inconsistency : report.inconsistencies)
        md += "\n> INCONSISTENT: " + inconsistency + "\n";
    return md;
}

// ---------------------------------------------------------------------------
// Geometry report (facet table, codegree, reflexivity) for cmd_geometry.
// ---------------------------------------------------------------------------

struct GeometryRow {
    std::size_t index;
    RowTag tag;
    std::string inequality;
    std::size_t tight_vertex_count;
    int tight_affine_dim;
    bool is_facet;
};

struct GeometryReport {
    int s = 0;
    int dim = 0;
    std::size_t vertex_count = 0;
    std::vector<GeometryRow> rows;
    int codegree = 0;
    std::vector<std::vector<long long>> interior_points;
    bool reflexivity_applicable = false;
    bool reflexive = false;
    std::vector<GeometryRow> translated_facets;  // facet rows of cQ - p with reduction info
    std::vector<std::string> reductions;         // "inequality : reduced rhs r [ok|VIOLATES]"
};

constexpr long long kGeometryVertexLimit = 100'000;

/// Facet/reflexivity study of Q_{C_{2s+1}}.  Refuses when the stable-set
/// count exceeds the brute-force-safe vertex budget.
inline GeometryReport compute_geometry(int s, EhrhartCache* cache = nullptr) {
    const CycleInstance inst(s);
    if (lucas_number(inst.n_vertices) > kGeometryVertexLimit)
        throw std::domain_error("stable-set count " +
                                std::to_string(lucas_number(inst.n_vertices)) +
                                " exceeds the geometry limit " +
                                std::to_string(kGeometryVertexLimit));

    GeometryReport geo;
    geo.s = s;
    const HalfspaceSystem q = build_Q(inst, 1);
    const VertexSet vertices = stable_set_vertices(inst, 1);
    geo.vertex_count = vertices.size();
    geo.dim = dimension(vertices);
    for (const auto& rep : facet_report(q, vertices)) {
        geo.rows.push_back({rep.row_index, q.rows[rep.row_index].tag,
                            inequality_to_string(q.rows[rep.row_index]), rep.tight_vertex_count,
                            rep.tight_affine_dim, rep.is_facet});
    }

    geo.codegree = codegree(inst, cache);
    geo.interior_points =
        enumerate_lattice_points(build_Q(inst, geo.codegree), Containment::Strict);
    geo.reflexivity_applicable = geo.interior_points.size() == 1;
    if (geo.reflexivity_applicable) {
        const GorensteinResult gor = gorenstein_via_reflexivity(inst, cache);
        geo.reflexive = gor.reflexivity.reflexive;
        const HalfspaceSystem facets = facet_rows(gor.translated_system, gor.facets);
        for (const auto& reduction : gor.reflexivity.rows) {
            const auto& row = facets.rows[reduction.row_index];
            geo.reductions.push_back(
                inequality_to_string(row) + " : reduced rhs " +
                detail::reduced_rhs_string(reduction.rhs, reduction.normal_gcd) +
                (reduction.reduced_rhs_is_one ? " [ok]" : " [violates reflexivity]"));
        }
    }
    return geo;
}

inline std::string geometry_to_markdown(const GeometryReport& geo) {
    std::string md;
    md += "# Geometry of Q(C_" + std::to_string(2 * geo.s + 1) + ")  (s = " +
          std::to_string(geo.s) + ")\n\n";
    md += "dimension " + std::to_string(geo.dim) + ", vertices " +
          std::to_string(geo.vertex_count) + " (stable-set indicators)\n\n";
    md += "## Facet table of Q\n\n";
    md += "| row | type | inequality | tight vertices | tight affine dim | facet |\n";
    md += "|---|---|---|---|---|---|\n";
    for (const auto& row : geo.rows) {
        md += "| " + std::to_string(row.index) + " | " + row_tag_name(row.tag) + " | " +
              row.inequality + " | " + std::to_string(row.tight_vertex_count) + " | " +
              std::to_string(row.tight_affine_dim) + " | " + (row.is_facet ? "yes" : "no") +
              " |\n";
    }
    md += "\n## Codegree\n\ncodegree " + std::to_string(geo.codegree) + ", interior points:";
    for (const auto& p : geo.interior_points) md += " " + detail::point_to_string(p);
    md += "\n\n## Reflexivity of " + std::to_string(geo.codegree) + "Q - p\n\n";
    if (!geo.reflexivity_applicable) {
        md += "not applicable: interior point at codegree is not unique\n";
        return md;
    }
    md += std::string("reflexive: ") + (geo.reflexive ? "yes" : "no") + "\n\n";
    for (const auto& line : geo.reductions) md += "- " + line + "\n";
    return md;
}

inline nlohmann::ordered_json geometry_to_json(const GeometryReport& geo) {
    nlohmann::ordered_json j;
    j["s"] = std::to_string(geo.s);
    j["dimension"] = std::to_string(geo.dim);
    j["vertex_count"] = std::to_string(geo.vertex_count);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : geo.rows) {
        nlohmann::ordered_json item;
        item["row"] = std::to_string(row.index);
        item["type"] = row_tag_name(row.tag);
        item["inequality"] = row.inequality;
        item["tight_vertex_count"] = std::to_string(row.tight_vertex_count);
        item["tight_affine_dim"] = std::to_string(row.tight_affine_dim);
        item["is_facet"] = row.is_facet;
        rows.push_back(item);
    }
    j["facet_table"] = rows;
    j["codegree"] = std::to_string(geo.codegree);
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& p : geo.interior_points) {
        nlohmann::ordered_json point = nlohmann::ordered_json::array();
        for (long long c : p) point.push_back(std::to_string(c));
        points.push_back(point);
    }
    j["interior_points_at_codegree"] = points;
    j["reflexivity_applicable"] = geo.reflexivity_applicable;
    j["reflexive"] = geo.reflexive;
    j["facet_reductions"] = geo.reductions;
    return j;
}

}  // namespace oddcycle
