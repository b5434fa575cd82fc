#ifndef IMCOL_GADGETS_HPP
#define IMCOL_GADGETS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "imcol/graph.hpp"
#include "imcol/oracle.hpp"
#include "imcol/preassignment.hpp"

namespace imcol {

// Where a vertex of the widened graph came from.
struct TraceOrigin {
    enum class Kind {
        Original,      // vertex of the input graph, ref = its id
        Copy,          // mirrored duplicate, ref = the original's id
        PendantFirst,  // first pendant vertex, ref = the attachment's id
        PendantSecond, // second pendant vertex, ref = the attachment's id
    };
    Kind kind = Kind::Original;
    int ref = 0;

    bool operator==(const TraceOrigin&) const = default;
};

struct ReductionOutput {
    // The doubled graph: input plus a mirrored copy, tied together at
    // part-2 vertices. Every vertex carries a color set of size equal to
    // its degree.
    Multigraph g1;
    Bipartition bip1;
    Preassignment sets1;

    // The widened graph: pendants encode the two-color sets structurally,
    // so no side data remains.
    Multigraph g;
    Bipartition bip;

    // Indexed by vertex id of g; entry 0 unused.
    std::vector<TraceOrigin> trace;
};

// Doubles the input and plants pendants so that the preassigned sets on
// part-1 vertices become equivalent to continuity demands on the result.
// Requires max degree at most 3, at least one edge, no pendant part-1
// vertex, and a color set of matching size on every non-isolated part-1
// vertex (nowhere else).
ReductionOutput build_reduction(const Multigraph& h, const Bipartition& bip_h,
                                const Preassignment& pre);

// (n1, n2, n3) with ni = number of part-1 vertices of degree at least i.
// A coloring continuous on part 1 has exactly ni edges of color i.
std::array<int, 3> class_size_vector(const Multigraph& g, const Bipartition& bip);

// One satisfiability verdict per problem form; a verdict is empty when the
// search ran out of budget before deciding.
struct EquivalenceReport {
    std::optional<bool> list_form;            // input edges, colors from the sets
    std::optional<bool> constrained_form;     // doubled graph, inherited sets
    std::optional<bool> continuous_all_form;  // widened graph, continuous everywhere
    std::optional<bool> continuous_part_form; // widened graph, continuous on part 1
    std::optional<bool> class_size_form;      // widened graph, fixed class sizes
    bool inconclusive = false;                // some verdict is empty
    bool agree = false;                       // all five resolved to one value
};

// Builds the reduction and solves every form by exhaustive search. The five
// verdicts must coincide; a disagreement is a defect in the construction,
// which is exactly what this routine exists to detect.
EquivalenceReport verify_equivalences(const Multigraph& h, const Bipartition& bip_h,
                                      const Preassignment& pre,
                                      const oracle::SearchLimits& limits = {});

// Trace file: one line per vertex, `map <vertex> <origin>`, origins are
// h:<id>, h':<id>, p1:<attachment>, p2:<attachment>.
std::string serialize_trace(const std::vector<TraceOrigin>& trace);

} // namespace imcol

#endif
