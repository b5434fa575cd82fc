#ifndef IMCOL_COLORING_HPP
#define IMCOL_COLORING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "imcol/graph.hpp"

namespace imcol {

// Total assignment EdgeId -> positive color. A value type: operations on
// colorings return new values instead of mutating shared state.
class EdgeColoring {
public:
    EdgeColoring() = default;
    // colors[i] is the color of edge i+1; every entry must be >= 1.
    explicit EdgeColoring(std::vector<int> colors);

    int edge_count() const { return static_cast<int>(colors_.size()); }
    int color(EdgeId e) const;
    void set_color(EdgeId e, int c);

    // 0 when there are no edges.
    int min_color() const;
    int max_color() const;

    const std::vector<int>& colors() const { return colors_; }

    bool operator==(const EdgeColoring&) const = default;

private:
    std::vector<int> colors_;
};

// Colors present on the edges at one vertex, as a set.
struct Spectrum {
    VertexId vertex = 0;
    std::vector<int> colors; // ascending, no duplicates

    bool empty() const { return colors.empty(); }
    int size() const { return static_cast<int>(colors.size()); }
    int min() const;
    int max() const;
    bool contains(int c) const;
    // max - min + 1 == size; an empty spectrum counts as consecutive.
    bool is_consecutive() const;
};

// The set R of vertices whose spectra the validators constrain.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> members);

    static VertexSet all(const Multigraph& g);
    static VertexSet part(const Bipartition& bip, int which);

    bool contains(VertexId v) const;
    const std::vector<VertexId>& members() const { return members_; }

    void check_against(const Multigraph& g) const;

private:
    std::vector<VertexId> members_; // ascending, no duplicates
};

Spectrum spectrum(const Multigraph& g, const EdgeColoring& c, VertexId v);

// No two edges sharing a vertex have equal colors.
bool is_proper(const Multigraph& g, const EdgeColoring& c);

// Proper, colors used are exactly 1..t, and every vertex of r has a
// consecutive spectrum (necessarily of size d(x) once properness holds).
bool is_interval_on(const Multigraph& g, const EdgeColoring& c, const VertexSet& r, int t);

// Interval on r, and every vertex of r has spectrum exactly {1..d(x)}.
bool is_continuous_on(const Multigraph& g, const EdgeColoring& c, const VertexSet& r, int t);

// Shifts all colors by one constant so the least used color becomes 1.
EdgeColoring normalize_shift(const EdgeColoring& c);

// For a connected graph with a proper coloring whose spectra are all
// consecutive: normalizes, checks that every color 1..max is used, and
// returns that max. A gap is impossible for such inputs, so finding one is
// an internal failure, not an input error.
int interval_closure_check(const Multigraph& g, const EdgeColoring& c);

// Exchanges colors j and k along the maximal alternating path starting at
// start. start must miss at least one of the two colors; missing both gives
// an empty path and the input is returned unchanged.
EdgeColoring kempe_swap(const Multigraph& g, const EdgeColoring& c, VertexId start, int j, int k);

namespace detail {

// Alternating-path walk over a partial coloring: colors[e-1] is the color of
// edge e, 0 marks an uncolored edge. Exchanges j and k in place along the
// maximal (j,k)-path from start and returns the path's edges in walk order.
// Requires the colored edges to be proper at every visited vertex.
std::vector<EdgeId> kempe_walk_swap(const Multigraph& g, std::vector<int>& colors,
                                    VertexId start, int j, int k);

} // namespace detail

struct ParsedColoring {
    EdgeColoring coloring;
    int t = 0; // color count declared in the header
};

// Coloring file format (UTF-8, line oriented, '#' starts a comment line):
//   p imcol <m> <t>     exactly one, first non-comment line
//   c <edge> <color>    m lines, every edge id exactly once, any order
ParsedColoring parse_coloring(std::string_view text);
// Lines come out sorted by edge id.
std::string serialize_coloring(const EdgeColoring& c, int t);

} // namespace imcol

#endif
