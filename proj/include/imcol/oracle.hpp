#ifndef IMCOL_ORACLE_HPP
#define IMCOL_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "imcol/coloring.hpp"
#include "imcol/graph.hpp"
#include "imcol/preassignment.hpp"

namespace imcol::oracle {

// Resource bounds for the exhaustive searches. A node is one committed
// edge-color placement. The edge guard rejects instances the backtracker is
// not meant for; callers that know better may switch it off.
struct SearchLimits {
    long long node_cap = 10'000'000;
    int max_edges = 12;
    bool ignore_edge_guard = false;
    int jobs = 1;
};

// capped = true means the node budget ran out first: existence is unknown
// and `exists` must be ignored. Never conflated with a definite no.
struct OracleResult {
    bool exists = false;
    bool capped = false;
    std::optional<EdgeColoring> witness;
    long long nodes_explored = 0;
};

// Least/greatest t admitting an interval-on-r t-coloring, with witnesses.
// Both empty when no t in 1..m works (and the search was not capped).
struct IntervalStats {
    std::optional<int> w;
    std::optional<int> W;
    std::optional<EdgeColoring> w_witness;
    std::optional<EdgeColoring> W_witness;
    bool capped = false;
    long long nodes_explored = 0;
};

struct MembershipResult {
    bool member = false;
    bool capped = false;
    std::optional<int> t; // least feasible color count when member
    std::optional<EdgeColoring> witness;
    long long nodes_explored = 0;
};

struct ChromaticIndexResult {
    std::optional<int> value; // empty iff capped
    std::optional<EdgeColoring> witness;
    bool capped = false;
    long long nodes_explored = 0;
};

// Backtracking over edges in ascending id order, colors 1..t ascending;
// prunes on properness, on spectrum span at r-vertices, and on the demand
// that all t colors end up used. First witness found is canonical; node
// counts and witnesses do not depend on limits.jobs.
OracleResult solve_interval_on(const Multigraph& g, const VertexSet& r, int t,
                               const SearchLimits& limits = {});

// Same search with the r-vertex constraint tightened to spectrum {1..d(x)}.
OracleResult solve_continuous_on(const Multigraph& g, const VertexSet& r, int t,
                                 const SearchLimits& limits = {});

// Plain proper t-coloring. Color classes are interchangeable here, so the
// search additionally breaks symmetry: an edge may only use a color at most
// one above the highest color placed so far.
OracleResult solve_proper(const Multigraph& g, int t, const SearchLimits& limits = {});

// Proper 3-coloring where every constrained vertex's edges use colors from
// its preassigned set. Requires max degree <= 3.
OracleResult solve_list_edge_coloring(const Multigraph& g, const Bipartition& bip,
                                      const Preassignment& pre,
                                      const SearchLimits& limits = {});

// Proper coloring with exactly sizes[i-1] edges of color i; sizes must sum
// to the edge count.
OracleResult solve_fixed_class_sizes(const Multigraph& g, const std::vector<int>& sizes,
                                     const SearchLimits& limits = {});

// Scans t = 1..m with solve_interval_on.
IntervalStats interval_stats(const Multigraph& g, const VertexSet& r,
                             const SearchLimits& limits = {});

// Does any t admit an interval-on-V(g) t-coloring? Scans t ascending, so a
// positive answer also reports the least such t.
MembershipResult interval_membership(const Multigraph& g, const SearchLimits& limits = {});

// Least t with a proper t-coloring; scans t from max degree upward.
ChromaticIndexResult chromatic_index(const Multigraph& g, const SearchLimits& limits = {});

// All bipartite multigraphs with part sizes n1' x n2' for every n1' <= max_n1
// and n2' <= max_n2, m <= max_m edges, edge multiplicity <= 3, and no
// isolated vertex (so each graph appears at exactly one part-size pair).
// Vertices 1..n1' form part 1. Deterministic order: part-size pairs ascending
// lexicographically, then multiplicity vectors over vertex pairs (u,v) in
// lexicographic order, most significant pair first.
void enumerate_bipartite_multigraphs(
    int max_n1, int max_n2, int max_m,
    const std::function<void(const Multigraph&, const Bipartition&)>& visit);

// Same scheme over general loopless multigraphs: exact vertex counts
// n' <= max_n, unordered vertex pairs u < v in lexicographic order,
// multiplicity <= max_multiplicity, no isolated vertex.
void enumerate_multigraphs(int max_n, int max_m, int max_multiplicity,
                           const std::function<void(const Multigraph&)>& visit);

// Seeded uniform sampler: m edges over parts of sizes n1 x n2, edge
// multiplicity <= 3 and no isolated vertex enforced by deterministic
// redraws. Identical seeds give identical graphs.
std::pair<Multigraph, Bipartition> sample_bipartite_multigraph(int n1, int n2, int m,
                                                               std::uint64_t seed);

} // namespace imcol::oracle

#endif
