#ifndef IMCOL_ALGORITHMS_HPP
#define IMCOL_ALGORITHMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "imcol/coloring.hpp"
#include "imcol/graph.hpp"
#include "imcol/oracle.hpp"

namespace imcol {

// Folds an interval-on-V(g) coloring onto the palette 1..max_degree by
// taking color residues: i -> ((i-1) mod max_degree) + 1. Interval spectra
// span at most d(v) <= max_degree at each vertex, so residues never collide
// and the result is a proper coloring using every color 1..max_degree.
EdgeColoring compress_to_delta(const Multigraph& g, const EdgeColoring& c);

// For a regular graph with an interval-on-V t-coloring, t > max_degree:
// recoloring every t-edge with t - max_degree yields an interval-on-V
// (t-1)-coloring. Every spectrum containing t is exactly the top window
// [t-max_degree+1, t], so the replacement color is free at both endpoints.
EdgeColoring regular_step_down(const Multigraph& g, const EdgeColoring& c, int t);

// Colors each part-1 vertex's edges with a fresh run of consecutive colors,
// vertices ascending, edges ascending by id. All m colors are distinct, so
// the result is trivially proper and interval on part 1 with t = m.
EdgeColoring sequential_max_coloring(const Multigraph& g, const Bipartition& bip);

// Requires d(x) >= d(y) for every edge (x,y) with x in part 1. Processes
// part-1 vertices by nonincreasing degree (ties by ascending id) and gives
// vertex x the spectrum {1..d(x)}, freeing occupied colors with alternating-
// path swaps anchored at the part-2 endpoint. Output uses colors within
// 1..max_degree and is continuous on part 1.
EdgeColoring continuous_on_part(const Multigraph& g, const Bipartition& bip);

// How one raise-by-one step will proceed, for inspection and tests.
struct StepUpCase {
    enum class Tag {
        RecolorDuplicate, // the anchor color also appears elsewhere
        RotateThenRecolor, // rotate the top color window first
        DeleteAndRecurse, // remove the anchor vertex and extend the rest
    };
    Tag tag = Tag::RecolorDuplicate;
    VertexId x1 = 0;       // minimum-degree part-1 vertex carrying color t
    EdgeId e1 = 0;         // its edge colored t+1-d(x1)
    std::optional<int> s;  // greatest color used more than once (absent in
                           // the duplicate case where it is not consulted)
};

StepUpCase classify_step_up(const Multigraph& g, const Bipartition& bip, const EdgeColoring& c,
                            int t);

// Telemetry for the raise-by-one construction: how often the constructive
// path failed revalidation and an oracle witness was substituted. Expected
// to stay at zero; any note is a reportable anomaly, not a silent repair.
struct StepUpReport {
    int oracle_fallbacks = 0;
    std::vector<std::string> notes;
};

// Turns an interval-on-part-1 t-coloring into a (t+1)-coloring, t < m.
// The output is revalidated; if the construction ever produces an invalid
// coloring, an exhaustive search supplies the witness instead and the
// report records the event.
EdgeColoring interval_step_up(const Multigraph& g, const Bipartition& bip, const EdgeColoring& c,
                              int t, StepUpReport* report = nullptr);

struct RealizeOutcome {
    std::optional<EdgeColoring> coloring; // empty iff capped
    int w1 = 0;                           // least feasible color count
    bool capped = false;                  // search budget ran out computing w1
    int oracle_fallbacks = 0;
};

// Interval-on-part-1 t-coloring for any t between the least feasible value
// and m: finds the least value by search, then raises one color at a time.
RealizeOutcome realize_spectrum(const Multigraph& g, const Bipartition& bip, int t,
                                const oracle::SearchLimits& limits = {});

} // namespace imcol

#endif
