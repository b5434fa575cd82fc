#include "imcol/gadgets.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "imcol/coloring.hpp"
#include "imcol/errors.hpp"

namespace imcol {

namespace {

void validate_reduction_input(const Multigraph& h, const Bipartition& bip_h,
                              const Preassignment& pre) {
    bip_h.check_against(h);
    if (h.edge_count() == 0) {
        throw InputError("graph has no edges; the reduction needs at least one");
    }
    for (VertexId v = 1; v <= h.vertex_count(); ++v) {
        if (h.degree(v) > 3) {
            throw InputError("vertex " + std::to_string(v) + " has degree " +
                             std::to_string(h.degree(v)) + "; the construction needs at most 3");
        }
        if (bip_h.part(v) == 1 && h.degree(v) == 1) {
            throw InputError("part-1 vertex " + std::to_string(v) +
                             " is pendant; part 1 must have no pendant vertex");
        }
    }
    pre.check_against(h);
    for (VertexId v : pre.constrained_vertices()) {
        if (bip_h.part(v) != 1) {
            throw InputError("vertex " + std::to_string(v) +
                             " is in part 2; only part-1 vertices take color sets");
        }
    }
    for (VertexId v = 1; v <= h.vertex_count(); ++v) {
        if (bip_h.part(v) == 1 && h.degree(v) >= 1 && !pre.constrained(v)) {
            throw InputError("part-1 vertex " + std::to_string(v) + " has no color set");
        }
    }
}

} // namespace

ReductionOutput build_reduction(const Multigraph& h, const Bipartition& bip_h,
                                const Preassignment& pre) {
    validate_reduction_input(h, bip_h, pre);
    const int n = h.vertex_count();
    const int m = h.edge_count();

    // Doubled graph: original ids 1..n, mirror ids n+1..2n. Mirror edges
    // first, then connectors at part-2 vertices ascending; a degree-1
    // vertex needs two parallel ties, a degree-2 vertex one, degree 3 none.
    std::vector<Edge> edges1(h.edges());
    for (int e = 0; e < m; ++e) edges1.push_back({h.edge(e + 1).u + n, h.edge(e + 1).v + n});
    for (VertexId y = 1; y <= n; ++y) {
        if (bip_h.part(y) != 2) continue;
        const int ties = h.degree(y) == 1 ? 2 : h.degree(y) == 2 ? 1 : 0;
        for (int i = 0; i < ties; ++i) edges1.push_back({y, y + n});
    }
    Multigraph g1(2 * n, std::move(edges1));

    std::vector<int> parts1(static_cast<size_t>(2 * n));
    for (VertexId v = 1; v <= n; ++v) {
        parts1[v - 1] = bip_h.part(v);
        parts1[v + n - 1] = 3 - bip_h.part(v);
    }
    Bipartition bip1{std::move(parts1)};

    Preassignment sets1;
    for (VertexId v = 1; v <= n; ++v) {
        if (h.degree(v) == 0) continue;
        if (bip_h.part(v) == 1) {
            sets1.set(v, pre.colors_of(v));
            sets1.set(v + n, pre.colors_of(v));
        } else {
            sets1.set(v, {1, 2, 3});
            sets1.set(v + n, {1, 2, 3});
        }
    }

    // Widened graph: pendants encode the two-color sets. A {2,3} vertex
    // gets one pendant edge (forced to color 1), a {1,3} vertex a pendant
    // path (forced to 2 then 1); {1,2} needs nothing.
    std::vector<Edge> edges(g1.edges());
    std::vector<int> parts(static_cast<size_t>(2 * n));
    for (VertexId v = 1; v <= 2 * n; ++v) parts[v - 1] = bip1.part(v);
    std::vector<TraceOrigin> trace(static_cast<size_t>(2 * n) + 1);
    for (VertexId v = 1; v <= n; ++v) {
        trace[v] = {TraceOrigin::Kind::Original, v};
        trace[v + n] = {TraceOrigin::Kind::Copy, v};
    }

    VertexId next = 2 * n;
    for (VertexId x = 1; x <= 2 * n; ++x) {
        if (!sets1.constrained(x)) continue;
        const std::vector<int>& colors = sets1.colors_of(x);
        const bool wants_23 = colors == std::vector<int>{2, 3};
        const bool wants_13 = colors == std::vector<int>{1, 3};
        if (!wants_23 && !wants_13) continue;
        const VertexId x1 = ++next;
        edges.push_back({x, x1});
        parts.push_back(3 - parts[x - 1]);
        trace.push_back({TraceOrigin::Kind::PendantFirst, x});
        if (wants_13) {
            const VertexId x2 = ++next;
            edges.push_back({x1, x2});
            parts.push_back(3 - parts[x1 - 1]);
            trace.push_back({TraceOrigin::Kind::PendantSecond, x});
        }
    }
    Multigraph g(next, std::move(edges));
    Bipartition bip{std::move(parts)};

    // The input has an edge, so some part-2 vertex is tied up to degree 3.
    if (g1.max_degree() != 3 || g.max_degree() != 3) {
        throw InternalError("construction missed the target degree 3");
    }
    bip1.check_against(g1);
    bip.check_against(g);
    sets1.check_against(g1);

    // Mirroring makes the two parts of the widened graph interchangeable
    // degree-wise; the counting arguments downstream rely on it.
    std::vector<int> deg1;
    std::vector<int> deg2;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        (bip.part(v) == 1 ? deg1 : deg2).push_back(g.degree(v));
    }
    std::sort(deg1.begin(), deg1.end());
    std::sort(deg2.begin(), deg2.end());
    if (deg1 != deg2) throw InternalError("part degree collections differ after the build");

    ReductionOutput out;
    out.g1 = std::move(g1);
    out.bip1 = std::move(bip1);
    out.sets1 = std::move(sets1);
    out.g = std::move(g);
    out.bip = std::move(bip);
    out.trace = std::move(trace);
    return out;
}

std::array<int, 3> class_size_vector(const Multigraph& g, const Bipartition& bip) {
    bip.check_against(g);
    if (g.max_degree() > 3) {
        throw InputError("maximum degree " + std::to_string(g.max_degree()) +
                         " is above 3; class sizes are defined for degree at most 3");
    }
    std::array<int, 3> sizes{0, 0, 0};
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        if (bip.part(v) != 1) continue;
        for (int i = 1; i <= g.degree(v); ++i) ++sizes[i - 1];
    }
    return sizes;
}

EquivalenceReport verify_equivalences(const Multigraph& h, const Bipartition& bip_h,
                                      const Preassignment& pre,
                                      const oracle::SearchLimits& limits) {
    const ReductionOutput red = build_reduction(h, bip_h, pre);

    // The widened graph is routinely larger than the backtracker's edge
    // guard; the whole point here is to run it anyway, within the node cap.
    oracle::SearchLimits open = limits;
    open.ignore_edge_guard = true;

    EquivalenceReport report;
    auto record = [&](std::optional<bool>& slot, const oracle::OracleResult& r) {
        if (r.capped) {
            report.inconclusive = true;
        } else {
            slot = r.exists;
        }
    };

    record(report.list_form, oracle::solve_list_edge_coloring(h, bip_h, pre, open));
    record(report.constrained_form,
           oracle::solve_list_edge_coloring(red.g1, red.bip1, red.sets1, open));
    record(report.continuous_all_form,
           oracle::solve_continuous_on(red.g, VertexSet::all(red.g), 3, open));
    record(report.continuous_part_form,
           oracle::solve_continuous_on(red.g, VertexSet::part(red.bip, 1), 3, open));
    const std::array<int, 3> sizes = class_size_vector(red.g, red.bip);
    record(report.class_size_form,
           oracle::solve_fixed_class_sizes(red.g, {sizes[0], sizes[1], sizes[2]}, open));

    report.agree = !report.inconclusive && report.list_form == report.constrained_form &&
                   report.list_form == report.continuous_all_form &&
                   report.list_form == report.continuous_part_form &&
                   report.list_form == report.class_size_form;
    return report;
}

std::string serialize_trace(const std::vector<TraceOrigin>& trace) {
    std::string out;
    for (size_t v = 1; v < trace.size(); ++v) {
        const TraceOrigin& origin = trace[v];
        out += "map " + std::to_string(v) + " ";
        switch (origin.kind) {
        case TraceOrigin::Kind::Original: out += "h:"; break;
        case TraceOrigin::Kind::Copy: out += "h':"; break;
        case TraceOrigin::Kind::PendantFirst: out += "p1:"; break;
        case TraceOrigin::Kind::PendantSecond: out += "p2:"; break;
        }
        out += std::to_string(origin.ref) + "\n";
    }
    return out;
}

} // namespace imcol
